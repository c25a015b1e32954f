"""Exception hierarchy shared by all modules."""


class MonopointError(Exception):
    """Base class for every error raised by this package."""


class SchemaError(MonopointError, ValueError):
    """Input data does not match the expected JSON shape."""

    def __init__(self, message, field=None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class InsufficientPrecision(MonopointError):
    pass


class NonProlongingSubstitution(MonopointError):
    pass


class LengthBeyondOracle(MonopointError):
    """A query needs factors longer than the oracle reliably stores."""

    def __init__(self, length, limit):
        self.length = length
        self.limit = limit
        super().__init__(f"word length {length} exceeds oracle bound N={limit}")


class BudgetExceeded(MonopointError):
    def __init__(self, message, parameter="budget"):
        self.parameter = parameter
        super().__init__(message)


class EmptySubshift(MonopointError):
    pass


class NotProlongable(MonopointError):
    pass


class SturmianCheckFailed(MonopointError):
    pass


class DegreeTooSmall(MonopointError):
    pass


class AlphabetTooLarge(MonopointError):
    pass


class DepthMismatch(MonopointError):
    pass
