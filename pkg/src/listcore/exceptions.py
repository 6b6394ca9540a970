class ListLabException(Exception):
    message = "List Lab Error"

    def __init__(self, detail: str | None = None):
        super().__init__(detail or self.message)
        self.detail = detail


class SymbolNotInListException(ListLabException):
    message = "Symbol Not In List"


class PositionOutOfRangeException(ListLabException):
    message = "Position Out Of Range"


class BackwardMoveException(ListLabException):
    message = "Free Exchange Cannot Move Backward"


class DuplicateSymbolException(ListLabException):
    message = "Duplicate Symbol In List"


class NegativeFrequencyException(ListLabException):
    message = "Frequency Count Must Be Non-Negative"
