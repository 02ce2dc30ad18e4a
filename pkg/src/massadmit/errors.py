"""Exception types shared across the package."""


class MassAdmitError(Exception):
    """Base class for all errors raised by massadmit."""


class VarSpaceMismatch(MassAdmitError, ValueError):
    """Two polynomials over different variable spaces were combined."""


class ExponentOverflow(MassAdmitError, OverflowError):
    """An exponent exceeded the variable space's configured cap."""


class NonDivisible(MassAdmitError, ArithmeticError):
    """Exact monomial division failed; ``term`` is the offending monomial."""

    def __init__(self, term, divisor):
        self.term = term
        self.divisor = divisor
        super().__init__(f"term {term} is not divisible by {divisor}")


class ZeroPolynomialError(MassAdmitError, ValueError):
    """The operation is undefined on the zero polynomial."""


class InvalidSpec(MassAdmitError, ValueError):
    """Parameters outside the admissible range (e.g. ell not in 1..d-1)."""


class BudgetExceeded(MassAdmitError, RuntimeError):
    """A linear-algebra slice is larger than the configured cell budget."""

    def __init__(self, cells, budget):
        self.cells = cells
        self.budget = budget
        super().__init__(f"slice needs {cells} matrix cells, budget is {budget}")


class VerificationError(MassAdmitError, AssertionError):
    """An internal identity that must hold did not (indicates a bug)."""


class NotFound(MassAdmitError, LookupError):
    """A search exhausted its range without a certifying value."""
