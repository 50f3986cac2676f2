"""Exact decision of the positive-depth criterion and its relatives.

The criterion quantifies a family of coefficient inequalities over every
integer shift n.  The scan over n is finite and conclusive:

  * for n below (min support - max index) every term is zero, and
  * both sides of an inequality have the same number of terms, so past the
    numerator degree each side gains the same uniform increment per
    alpha*beta step (the slope identity from the series module); the
    difference of the two sides is therefore alpha*beta-periodic there,
    and one full period past the degree decides all larger n.

That reduction is unit-tested numerically against wide brute-force windows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import series
from .couples import BalancedCouple, all_couples
from .errors import BadModulusError, NotNonnegativeError
from .semigroup import SemigroupPair, make_pair
from .series import LaurentPoly, RationalSeries


@dataclass(frozen=True, slots=True)
class Violation:
    """One failed inequality instance: sum over I+n exceeds sum over J+n."""

    I: tuple[int, ...]
    J: tuple[int, ...]
    n: int
    lhs: int
    rhs: int


@dataclass(frozen=True, slots=True)
class StarVerdict:
    holds: bool
    violation: Violation | None = None


@dataclass(frozen=True, slots=True)
class GeneralStarVerdict:
    """Verdict for possibly non-coprime weights, one slice per residue."""

    holds: bool
    delta: int
    pair: SemigroupPair
    slices: tuple[StarVerdict, ...]


@dataclass(frozen=True, slots=True)
class CriticalHit:
    """A critical inequality instance: some index of a multiple of the side
    weight is negative on the left while a nonnegative partner sits on the
    right, so subtracting the side's geometric atom lowers only the right."""

    I: tuple[int, ...]
    J: tuple[int, ...]
    m: int
    side: int
    strict: bool


def _analysis_data(H: RationalSeries, hi: int):
    """(lo, D, coefficient list on [lo, hi], slope) or None for the zero series."""
    Hn, kind = series._analysis_shape(H)
    if Hn.is_zero():
        return None
    lo = Hn.num.min_exp()
    D = Hn.num.max_exp()
    slope = Hn.num.eval_at_one() if kind == "full" else 0
    _, arr = series.expand(Hn, max(hi, lo))
    return lo, D, arr, slope


def _scan(data, ab: int, I, J):
    """First shift n with sum_I h(n+i) > sum_J h(n+j), else None.

    Requires the data window to reach max(0, D - min index) + ab + max index.
    """
    lo, D, arr, slope = data
    span = max(max(I), max(J), 0)
    neg = min(min(I), min(J), 0)
    n_lo = lo - span
    n_hi = max(0, D - neg) + ab
    top = lo + len(arr) - 1
    if n_hi + span > top:
        raise AssertionError("analysis window too small for the index spread")
    for n in range(n_lo, n_hi + 1):
        lhs = 0
        for i in I:
            x = n + i - lo
            if x >= 0:
                lhs += arr[x]
        rhs = 0
        for j in J:
            x = n + j - lo
            if x >= 0:
                rhs += arr[x]
        if lhs > rhs:
            return n, lhs, rhs
    return None


def first_violating_shift(
    S: SemigroupPair, H: RationalSeries, I, J
) -> Violation | None:
    """Scan one index-pair inequality over every shift; exact.

    I and J must have equal length, otherwise the two sides drift apart at
    rate proportional to the slope and no finite reduction exists.
    """
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise ValueError("index sequences must have equal length")
    if H.is_zero():
        return None
    ab = H.pair.product
    span = max(max(I), max(J), 0)
    neg = min(min(I), min(J), 0)
    hi = max(0, (H.num.max_exp() or 0) - neg) + ab + span
    data = _analysis_data(H, hi)
    if data is None:
        return None
    hit = _scan(data, ab, I, J)
    if hit is None:
        return None
    n, lhs, rhs = hit
    return Violation(I, J, n, lhs, rhs)


def holds_for_all_shifts(S: SemigroupPair, H: RationalSeries, I, J) -> bool:
    return first_violating_shift(S, H, I, J) is None


def check_star(S: SemigroupPair, H: RationalSeries) -> StarVerdict:
    """Decide the depth-positivity criterion for a nonnegative series.

    Every fundamental couple is tested over every shift (finitely reduced as
    described in the module docstring).  The reported violation is the first
    in couple enumeration order (lexicographic by I), then by ascending n,
    so certificates are stable across runs.
    """
    if not series.is_nonnegative(H):
        raise NotNonnegativeError("criterion is defined for nonnegative series")
    if H.is_zero():
        return StarVerdict(True)
    ab = S.product
    hi = max(0, H.num.max_exp()) + 2 * ab
    data = _analysis_data(H, hi)
    if data is None:
        return StarVerdict(True)
    for c in all_couples(S):
        hit = _scan(data, ab, c.I, c.J)
        if hit is not None:
            n, lhs, rhs = hit
            return StarVerdict(False, Violation(c.I, c.J, n, lhs, rhs))
    return StarVerdict(True)


def check_star_general(
    d1: int,
    d2: int,
    num: LaurentPoly,
    den1: int = 1,
    den2: int = 1,
) -> GeneralStarVerdict:
    """Criterion for arbitrary positive weights via residue slices.

    With delta = gcd(d1, d2), the coefficients split into delta slices, each
    a series over the coprime pair (d1/delta, d2/delta); the criterion holds
    for the original weights exactly when it holds for every slice.
    """
    delta = math.gcd(d1, d2)
    S = make_pair(d1 // delta, d2 // delta)
    extra: dict[int, int] = {}
    for d, r in ((d1, den1), (d2, den2)):
        if r:
            extra[d] = extra.get(d, 0) + r
    H = RationalSeries(S, num, 0, 0, tuple(sorted(extra.items())))
    verdicts = []
    ok = True
    for k in range(delta):
        v = check_star(S, series.veronese(H, delta, k))
        verdicts.append(v)
        ok = ok and v.holds
    return GeneralStarVerdict(ok, delta, S, tuple(verdicts))


def critical_instances(S: SemigroupPair, g: int):
    """All (couple, m) index patterns critical for side g, m in [-ab, 0).

    Couple entries are nonnegative and bounded by alpha*beta, so a shift
    with a negative left multiple of g and a nonnegative right one can only
    lie in that interval.  Deterministic order: couples as enumerated, then
    m ascending.
    """
    ab = S.product
    for c in all_couples(S):
        for m in range(-ab, 0):
            left = any((m + i) < 0 and (m + i) % g == 0 for i in c.I)
            right = any((m + j) >= 0 and (m + j) % g == 0 for j in c.J)
            if left and right:
                yield c, m


def find_nonstrict_critical(
    S: SemigroupPair, H: RationalSeries, g: int
) -> tuple[CriticalHit, ...]:
    """Critical instances for side g that hold with equality.

    H must be normalized so its minimal support index is 0; the greedy
    decomposition shifts before asking.
    """
    if g not in (S.alpha, S.beta):
        raise BadModulusError(f"{g} is not a weight of {S}")
    if not series.is_nonnegative(H):
        raise NotNonnegativeError("critical analysis needs a nonnegative series")
    if H.is_zero():
        return ()
    if H.num.min_exp() != 0:
        raise ValueError("series must be normalized to minimal support 0")
    ab = S.product
    lo, arr = series.expand(series._eliminate_extras(H), ab)

    def h(x: int) -> int:
        i = x - lo
        return arr[i] if 0 <= i < len(arr) else 0

    hits = []
    for c, m in critical_instances(S, g):
        lhs = sum(h(m + i) for i in c.I)
        rhs = sum(h(m + j) for j in c.J)
        if lhs == rhs:
            hits.append(CriticalHit(c.I, c.J, m, g, strict=False))
    return tuple(hits)


def check_balanced_inequality(
    S: SemigroupPair, H: RationalSeries, C: BalancedCouple
) -> bool:
    """Evaluate sum_I h(i) <= sum_J h(j) exactly (no shift quantifier)."""
    lhs = sum(series.coeff_at(H, i) for i in C.I)
    rhs = sum(series.coeff_at(H, j) for j in C.J)
    return lhs <= rhs


def check_inequality_24(S: SemigroupPair, H: RationalSeries) -> bool:
    """Sliding-window inequality: alpha consecutive coefficients never beat
    the window shifted up by beta.

    Equivalent to the regraded series (sum_{i<alpha} t^i)(sum_{j<beta} t^j) H
    having nondecreasing coefficients, which is a single two-term scan.
    """
    if not series.is_nonnegative(H):
        raise NotNonnegativeError("inequality is defined for nonnegative series")
    block = LaurentPoly({i: 1 for i in range(S.alpha)}) * LaurentPoly(
        {j: 1 for j in range(S.beta)}
    )
    G = RationalSeries(S, H.num * block, H.den_alpha, H.den_beta, H.extra_den)
    return first_violating_shift(S, G, (0,), (1,)) is None
