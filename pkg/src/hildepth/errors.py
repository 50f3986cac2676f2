"""Exception types shared across the package."""


class HildepthError(Exception):
    """Base class for all errors raised by this library."""


class NonCoprimeError(HildepthError):
    """Weight pair has a common divisor greater than one."""

    def __init__(self, gcd):
        super().__init__(f"weights are not coprime (gcd = {gcd})")
        self.gcd = gcd


class EqualWeightsError(HildepthError):
    """Both weights are the same integer greater than one."""


class NonPositiveError(HildepthError):
    """An argument that must be a positive integer was not."""


class BadModulusError(HildepthError):
    """A weight argument was neither alpha nor beta."""


class NotAGapError(HildepthError):
    """An argument that must be a gap of the semigroup was not."""


class NotAChainError(HildepthError):
    """A gap sequence is not strictly increasing in the gap order."""


class BadResidueError(HildepthError):
    """A residue argument lies outside [0, delta)."""


class UnsupportedDenominatorError(HildepthError):
    """The series denominator is outside the exactly analysable shapes."""


class DimensionTooHighError(HildepthError):
    """The operation needs a series of dimension at most one."""


class NotNonnegativeError(HildepthError):
    """The operation needs a series with nonnegative coefficients."""


class TooLargeError(HildepthError):
    """Instance exceeds the cost guard of a brute-force oracle."""


class BudgetExceededError(HildepthError):
    """Brute-force search ran out of budget before reaching a verdict."""


class StarFailsError(HildepthError):
    """Decomposition was requested for a series that violates the depth criterion."""

    def __init__(self, violation):
        super().__init__(f"depth criterion violated: {violation}")
        self.violation = violation


class DecompositionNotFoundError(HildepthError):
    """The heuristic witness search for a raw two-dimensional series failed."""


class InvariantBrokenError(HildepthError):
    """An internal invariant failed; this signals a bug, not bad input."""
