"""Exception types shared across the package."""


class TwinwidthError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(TwinwidthError):
    """Invalid input object: bad partition, bad vertex id, bad parameters."""


class ReplayError(ValidationError):
    """A contraction step cannot be applied; carries the offending step index."""

    def __init__(self, message, step_index=None):
        super().__init__(message)
        self.step_index = step_index


class ParseError(TwinwidthError):
    """Malformed text input; carries a byte offset or line number when known."""

    def __init__(self, message, offset=None, line=None):
        super().__init__(message)
        self.offset = offset
        self.line = line


class NotApplicableError(TwinwidthError):
    """A recognition query whose preconditions do not hold (for example,
    asking for srg parameters of a complete graph).  Deliberately distinct
    from a negative answer."""


class BudgetExhausted(TwinwidthError):
    """A search ran out of its node or time budget."""
