"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the region where a formula is valid."""


class BudgetError(ValueError):
    """An exhaustive routine was asked for more work than it allows."""


class PrecisionError(ArithmeticError):
    """A floating-point evaluation could not be rounded to an exact count safely."""
