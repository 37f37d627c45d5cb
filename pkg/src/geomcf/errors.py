"""Exception types shared across the package.

The CLI maps these onto exit codes: mathematical violations exit 1,
bad parameters exit 2, precision or budget exhaustion exits 3.
"""


class DomainError(ValueError):
    """An operand is outside the domain an exact operation supports."""


class UnsupportedFamily(DomainError):
    """A continued-fraction family the requested operation does not cover."""


class SingularEvaluation(ArithmeticError):
    """A zero tail appeared while evaluating a continued fraction.

    `level` records the 1-based term index whose tail vanished.
    """

    def __init__(self, level: int):
        self.level = level
        super().__init__(f"zero tail while evaluating term at level {level}")


class PrecisionInsufficient(RuntimeError):
    """Not enough working precision to validate the requested output."""


class BudgetExceeded(RuntimeError):
    """An iteration budget ran out before the convergence test was met."""

    def __init__(self, message: str, last_bound=None):
        self.last_bound = last_bound
        super().__init__(message)


class IdentityViolation(Exception):
    """An exact identity that must hold was found violated."""
