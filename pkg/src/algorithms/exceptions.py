from listcore.exceptions import ListLabException


class CursorExhaustedException(ListLabException):
    message = "Request Sequence Cursor Exhausted"


class InvariantBreachException(ListLabException):
    message = "Internal Invariant Breach"
