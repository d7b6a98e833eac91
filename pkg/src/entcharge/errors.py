"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Raised when an argument violates a documented precondition."""


class NumericalFailure(RuntimeError):
    """Raised when an underlying numerical routine fails to converge."""


class NoRoot(RuntimeError):
    """Raised when a bracketing root search finds no sign change."""
