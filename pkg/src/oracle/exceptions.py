from listcore.exceptions import ListLabException


class InstanceTooLargeException(ListLabException):
    message = "Instance Too Large For Exhaustive Search"


class BoundsExceededException(ListLabException):
    message = "Enumeration Bounds Exceeded"
