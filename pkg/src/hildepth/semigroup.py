"""Arithmetic of the numerical semigroup generated by two coprime weights.

The semigroup <alpha, beta> consists of all nonnegative integer combinations
x*alpha + y*beta.  Its finitely many absentees (the gaps) carry a partial
order derived from the unique presentation n = p*alpha*beta - a*alpha - b*beta,
and that order drives everything the rest of the package does.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BadModulusError,
    EqualWeightsError,
    NonCoprimeError,
    NonPositiveError,
    NotAGapError,
)


@dataclass(frozen=True, slots=True, order=True)
class SemigroupPair:
    """An ordered coprime weight pair alpha <= beta.

    The constructor normalizes the order of its two arguments.  The only
    pair with alpha == beta that is accepted is (1, 1); every larger equal
    pair fails the coprimality contract.
    """

    alpha: int
    beta: int

    def __post_init__(self):
        d1, d2 = self.alpha, self.beta
        if d1 < 1 or d2 < 1:
            raise NonPositiveError(f"weights must be positive, got ({d1}, {d2})")
        if d1 == d2 and d1 > 1:
            raise EqualWeightsError(f"equal weights {d1} are not coprime")
        g = math.gcd(d1, d2)
        if g > 1:
            raise NonCoprimeError(g)
        if d1 > d2:
            object.__setattr__(self, "alpha", d2)
            object.__setattr__(self, "beta", d1)

    @property
    def product(self) -> int:
        return self.alpha * self.beta

    @property
    def conductor(self) -> int:
        return (self.alpha - 1) * (self.beta - 1)

    @property
    def genus(self) -> int:
        return self.conductor // 2


@dataclass(frozen=True, slots=True)
class GapPresentation:
    """The unique writing n = p*alpha*beta - a*alpha - b*beta.

    Ranges: p > 0, 0 <= a < beta, 0 <= b < alpha.  A positive integer is a
    gap exactly when p == 1 and both a and b are at least 1.
    """

    p: int
    a: int
    b: int

    @property
    def is_gap(self) -> bool:
        return self.p == 1 and self.a >= 1 and self.b >= 1


class GapOrder(enum.Enum):
    """Relation of one gap to another under the presentation order.

    With (a_k, b_k) the presentation coefficients, e1 weakly precedes e2
    when a_1 >= a_2 and b_1 <= b_2; strictly when both inequalities are
    strict.  The verdict is directional: query the reversed pair to test
    the other direction.
    """

    STRICT = "strict"
    WEAK_ONLY = "weak_only"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def make_pair(d1: int, d2: int) -> SemigroupPair:
    """Validate and order a weight pair."""
    return SemigroupPair(d1, d2)


def present(S: SemigroupPair, n: int) -> GapPresentation:
    """Unique presentation of n >= 1 as p*alpha*beta - a*alpha - b*beta.

    Closed form: a and b are fixed by n modulo beta and alpha respectively,
    then p is forced.  O(1) besides the modular inverses.
    """
    if n <= 0:
        raise NonPositiveError(f"presentation needs n >= 1, got {n}")
    alpha, beta = S.alpha, S.beta
    a = (-n * pow(alpha, -1, beta)) % beta
    b = (-n * pow(beta, -1, alpha)) % alpha
    p, rem = divmod(n + a * alpha + b * beta, alpha * beta)
    if rem != 0 or p < 1:  # unreachable for coprime weights
        raise AssertionError(f"presentation failed for {n} over {S}")
    return GapPresentation(p, a, b)


def is_gap(S: SemigroupPair, n: int) -> bool:
    """True when n is a positive integer outside the semigroup."""
    return n >= 1 and present(S, n).is_gap


def is_member(S: SemigroupPair, n: int) -> bool:
    """Membership of n in <alpha, beta>; negative n is never a member."""
    if n < 0:
        return False
    return n == 0 or not present(S, n).is_gap


@lru_cache(maxsize=None)
def gaps(S: SemigroupPair) -> tuple[int, ...]:
    """All gaps in ascending order; empty when alpha == 1."""
    return tuple(n for n in range(1, S.conductor) if present(S, n).is_gap)


def conductor(S: SemigroupPair) -> int:
    """Least integer from which every integer onward is a member."""
    return S.conductor


def genus(S: SemigroupPair) -> int:
    """Number of gaps, which equals conductor / 2 for two generators."""
    return S.genus


def apery(S: SemigroupPair, g: int) -> tuple[int, ...]:
    """Apery set of g in the semigroup, for g one of the two weights.

    The set has exactly g elements, the minimal members per residue class
    modulo g; for two generators these are the multiples of the other weight.
    """
    if g == S.alpha:
        return tuple(sorted(s * S.beta for s in range(S.alpha)))
    if g == S.beta:
        return tuple(sorted(r * S.alpha for r in range(S.beta)))
    raise BadModulusError(f"{g} is not a weight of {S}")


def _gap_presentation(S: SemigroupPair, e: int) -> GapPresentation:
    if e < 1:
        raise NotAGapError(f"{e} is not a gap of <{S.alpha},{S.beta}>")
    pres = present(S, e)
    if not pres.is_gap:
        raise NotAGapError(f"{e} is not a gap of <{S.alpha},{S.beta}>")
    return pres


def gap_order(S: SemigroupPair, e1: int, e2: int) -> GapOrder:
    """Classify the order relation of gap e1 toward gap e2."""
    p1 = _gap_presentation(S, e1)
    p2 = _gap_presentation(S, e2)
    if e1 == e2:
        return GapOrder.EQUAL
    if p1.a > p2.a and p1.b < p2.b:
        return GapOrder.STRICT
    if p1.a >= p2.a and p1.b <= p2.b:
        return GapOrder.WEAK_ONLY
    return GapOrder.INCOMPARABLE


def connecting_gap(S: SemigroupPair, e1: int, e2: int) -> int | None:
    """The unique gap j >= e1, e2 with j = e1 mod alpha and j = e2 mod beta.

    Exists exactly when e1 weakly precedes e2, in which case
    j = alpha*beta - a(e2)*alpha - b(e1)*beta.
    """
    p1 = _gap_presentation(S, e1)
    p2 = _gap_presentation(S, e2)
    if p1.a >= p2.a and p1.b <= p2.b:
        return S.product - p2.a * S.alpha - p1.b * S.beta
    return None


def diff_is_gap(S: SemigroupPair, e1: int, e2: int) -> bool:
    """True when |e1 - e2| is itself a gap.

    Equivalent to the presentation coefficients moving in opposite
    directions: (a2 - a1) * (b2 - b1) < 0.
    """
    p1 = _gap_presentation(S, e1)
    p2 = _gap_presentation(S, e2)
    return (p2.a - p1.a) * (p2.b - p1.b) < 0
