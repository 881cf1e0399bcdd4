"""Exception types shared across the package."""


class SizeGuardError(RuntimeError):
    """Raised when an operation would enumerate more words than allowed.

    ``predicted`` carries the estimated word count so callers can report
    it or retry with a larger budget.
    """

    def __init__(self, message: str, predicted: int | None = None):
        super().__init__(message)
        self.predicted = predicted


class SpecError(ValueError):
    """Raised when generator data violates a structural requirement.

    ``invariant`` is a short machine-readable name of the violated rule.
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant
