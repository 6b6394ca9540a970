from algorithms.exceptions import InvariantBreachException
from listcore.exceptions import ListLabException


class InvalidRunConfigException(ListLabException):
    message = "Invalid Run Configuration"


class EmptyReportException(ListLabException):
    message = "Empty Comparison Report"


class MalformedReportException(ListLabException):
    message = "Malformed Comparison CSV"


class CostLowerBoundViolationException(InvariantBreachException):
    message = "Full Cost Model Total Below Request Count"
