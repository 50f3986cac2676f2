"""Exact Laurent series kept in rational form over products of (1 - t^d).

A series is stored as an integer Laurent polynomial numerator together with
denominator flags for (1 - t^alpha) and (1 - t^beta) plus optional extra
factors (1 - t^d)^r.  All analysis (coefficients, nonnegativity, dimension,
stable window sums) is exact; nothing is ever truncated and hoped for.

Finite-window soundness, used throughout: for a numerator of top degree D,

  * with both weight factors present, h(n + alpha*beta) = h(n) + num(1)
    for every n > D (the representation count of n by the two weights grows
    by exactly one per alpha*beta step);
  * with a single factor (1 - t^d) where d divides alpha*beta, the
    coefficients are d-periodic for n > D, hence alpha*beta-periodic;
  * with no denominator the coefficients vanish for n > D.

So the coefficients on [min support, max(0, D) + alpha*beta] together with
the slope num(1) determine the series everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (
    BadModulusError,
    BadResidueError,
    DimensionTooHighError,
    NotNonnegativeError,
    UnsupportedDenominatorError,
)
from .semigroup import SemigroupPair

ALPHA = "alpha"
BETA = "beta"
_DENOM_NAMES = frozenset((ALPHA, BETA))


class LaurentPoly:
    """Immutable integer Laurent polynomial, a sparse map exponent -> coefficient."""

    __slots__ = ("_c", "_items")

    def __init__(self, coeffs=()):
        d = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for e, c in items:
            if c:
                nc = d.get(e, 0) + c
                if nc:
                    d[e] = nc
                elif e in d:
                    del d[e]
        self._c = d
        self._items = tuple(sorted(d.items()))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    @classmethod
    def term(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls(((exp, coeff),))

    def items(self):
        return self._items

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return f"LaurentPoly({self._items!r})"

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = dict(self._c)
        for e, c in other._c.items():
            nc = d.get(e, 0) + c
            if nc:
                d[e] = nc
            elif e in d:
                del d[e]
        return LaurentPoly(d)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                nc = d.get(e, 0) + c1 * c2
                if nc:
                    d[e] = nc
                elif e in d:
                    del d[e]
        return LaurentPoly(d)

    def scale(self, k: int) -> "LaurentPoly":
        if k == 0:
            return _ZERO
        return LaurentPoly({e: c * k for e, c in self._c.items()})

    def shift(self, s: int) -> "LaurentPoly":
        if s == 0:
            return self
        return LaurentPoly({e + s: c for e, c in self._c.items()})

    def times_one_minus(self, d: int) -> "LaurentPoly":
        """Multiply by (1 - t^d) without building the factor."""
        return self - self.shift(d)

    def min_exp(self) -> int | None:
        return self._items[0][0] if self._items else None

    def max_exp(self) -> int | None:
        return self._items[-1][0] if self._items else None

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._c.values())

    def divide_one_minus(self, d: int) -> "LaurentPoly | None":
        """Exact quotient by (1 - t^d), or None when the division has a remainder.

        Per residue class modulo d the quotient is the running prefix sum of
        the coefficients; the division is exact when every class sums to 0.
        """
        if not self._c:
            return _ZERO
        lo, hi = self._items[0][0], self._items[-1][0]
        q = {}
        for r in range(d):
            start = lo + ((r - lo) % d)
            running = 0
            for e in range(start, hi + 1, d):
                running += self._c.get(e, 0)
                if running:
                    q[e] = running
            if running != 0:
                return None
        return LaurentPoly(q)

    def order_at_one(self) -> int:
        """Multiplicity of the root t = 1 (0 for the zero polynomial)."""
        k = 0
        cur = self
        while cur and cur.eval_at_one() == 0:
            cur = cur.divide_one_minus(1)
            k += 1
        return k


_ZERO = object.__new__(LaurentPoly)
_ZERO._c = {}
_ZERO._items = ()
_ONE = object.__new__(LaurentPoly)
_ONE._c = {0: 1}
_ONE._items = ((0, 1),)


def geometric_block(d: int, terms: int) -> LaurentPoly:
    """1 + t^d + t^(2d) + ... with the given number of terms."""
    return LaurentPoly({j * d: 1 for j in range(terms)})


@dataclass(frozen=True, slots=True)
class Term:
    """One summand c * t^shift / prod_{g in denom} (1 - t^g)."""

    shift: int
    coeff: int
    denom: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        d = frozenset(self.denom)
        if not d <= _DENOM_NAMES:
            raise ValueError(f"denom must be a subset of {{alpha, beta}}, got {set(d)}")
        if self.coeff < 1:
            raise ValueError(f"term coefficient must be >= 1, got {self.coeff}")
        object.__setattr__(self, "denom", d)


@dataclass(frozen=True, slots=True)
class RationalSeries:
    """num / (1-t^alpha)^den_alpha (1-t^beta)^den_beta prod (1-t^d)^r."""

    pair: SemigroupPair
    num: LaurentPoly
    den_alpha: int = 1
    den_beta: int = 1
    extra_den: tuple = ()

    def __post_init__(self):
        if self.den_alpha not in (0, 1) or self.den_beta not in (0, 1):
            raise ValueError("den_alpha and den_beta must be 0 or 1")
        extras = tuple(sorted((int(d), int(r)) for d, r in self.extra_den))
        for d, r in extras:
            if d < 1 or r < 1:
                raise ValueError(f"bad extra denominator factor (1 - t^{d})^{r}")
        object.__setattr__(self, "extra_den", extras)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def den_factors(self) -> tuple[tuple[int, int], ...]:
        """All denominator factors as (d, multiplicity) pairs."""
        out = []
        if self.den_alpha:
            out.append((self.pair.alpha, 1))
        if self.den_beta:
            out.append((self.pair.beta, 1))
        out.extend(self.extra_den)
        return tuple(out)

    def den_poly(self) -> LaurentPoly:
        p = LaurentPoly.one()
        for d, r in self.den_factors():
            for _ in range(r):
                p = p.times_one_minus(d)
        return p


def zero(S: SemigroupPair) -> RationalSeries:
    return RationalSeries(S, LaurentPoly.zero(), 0, 0)


def atom(S: SemigroupPair, shift: int, denom, coeff: int = 1) -> RationalSeries:
    """c * t^shift over the named subset of the two weight factors."""
    d = frozenset(denom)
    if not d <= _DENOM_NAMES:
        raise ValueError(f"denom must be a subset of {{alpha, beta}}, got {set(d)}")
    return RationalSeries(
        S,
        LaurentPoly.term(shift, coeff),
        1 if ALPHA in d else 0,
        1 if BETA in d else 0,
    )


def from_numerator(S, pairs, den_alpha=1, den_beta=1, extra_den=()) -> RationalSeries:
    return RationalSeries(S, LaurentPoly(pairs), den_alpha, den_beta, extra_den)


def to_rational(S: SemigroupPair, terms) -> RationalSeries:
    """Exact sum of a term list over the common denominator (1-t^a)(1-t^b)."""
    num = LaurentPoly.zero()
    for t in terms:
        piece = LaurentPoly.term(t.shift, t.coeff)
        if ALPHA not in t.denom:
            piece = piece.times_one_minus(S.alpha)
        if BETA not in t.denom:
            piece = piece.times_one_minus(S.beta)
        num = num + piece
    return RationalSeries(S, num, 1, 1)


def _eliminate_extras(H: RationalSeries) -> RationalSeries:
    """Cancel extra factors that divide the numerator exactly."""
    if not H.extra_den:
        return H
    num = H.num
    leftover = []
    for d, r in H.extra_den:
        for k in range(r):
            q = num.divide_one_minus(d)
            if q is None:
                leftover.append((d, r - k))
                break
            num = q
    if leftover == list(H.extra_den) and num is H.num:
        return H
    return RationalSeries(H.pair, num, H.den_alpha, H.den_beta, tuple(leftover))


def _analysis_shape(H: RationalSeries):
    """Classify the denominator for exact window analysis.

    Returns (kind, slope_num) with kind one of "poly", "single", "full".
    Supported denominators: none; a single (1 - t^d) with d dividing
    alpha*beta; or exactly (1 - t^alpha)(1 - t^beta).
    """
    H = _eliminate_extras(H)
    ab = H.pair.product
    factors = H.den_factors()
    total = sum(r for _, r in factors)
    if total == 0:
        return H, "poly"
    if total == 1:
        d = factors[0][0]
        if ab % d == 0:
            return H, "single"
        raise UnsupportedDenominatorError(
            f"single factor (1 - t^{d}) does not divide the period {ab}"
        )
    if total == 2 and H.den_alpha == 1 and H.den_beta == 1 and not H.extra_den:
        return H, "full"
    raise UnsupportedDenominatorError(
        f"denominator {factors} is outside the analysable shapes"
    )


def expand(H: RationalSeries, hi: int) -> tuple[int, list[int]]:
    """Exact coefficients from the numerator's minimal support up to hi.

    Returns (lo, coefficients for exponents lo..hi); all coefficients below
    lo are zero.  Works for any denominator shape.
    """
    lo = H.num.min_exp()
    if lo is None or hi < lo:
        return 0, []
    arr = [0] * (hi - lo + 1)
    for e, c in H.num.items():
        if e <= hi:
            arr[e - lo] += c
    for d, r in H.den_factors():
        for _ in range(r):
            for i in range(d, len(arr)):
                arr[i] += arr[i - d]
    return lo, arr


def coeffs(H: RationalSeries, lo: int, hi: int) -> list[int]:
    """Exact coefficient slice h_lo .. h_hi."""
    if lo > hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    base, arr = expand(H, hi)
    out = []
    for n in range(lo, hi + 1):
        i = n - base
        out.append(arr[i] if arr and 0 <= i < len(arr) else 0)
    return out


@lru_cache(maxsize=512)
def _window(H: RationalSeries):
    """(lo, D, coefficient list on [lo, max(0, D) + ab + ab], slope).

    The extra period of margin lets single-point lookups land inside the
    window after reducing by whole multiples of alpha*beta.
    """
    Hn, kind = _analysis_shape(H)
    if Hn.is_zero():
        return None
    lo = Hn.num.min_exp()
    D = Hn.num.max_exp()
    ab = H.pair.product
    hi = max(0, D) + 2 * ab
    _, arr = expand(Hn, hi)
    slope = Hn.num.eval_at_one() if kind == "full" else 0
    return lo, D, arr, slope


def coeff_at(H: RationalSeries, n: int) -> int:
    """Exact single coefficient for any index, however large."""
    w = _window(H)
    if w is None:
        return 0
    lo, D, arr, slope = w
    if n < lo:
        return 0
    top = lo + len(arr) - 1
    if n <= top:
        return arr[n - lo]
    ab = H.pair.product
    k = (n - top + ab - 1) // ab
    return arr[n - k * ab - lo] + k * slope


def is_nonnegative(H: RationalSeries) -> bool:
    """Exact nonnegativity verdict for every coefficient of the expansion."""
    w = _window(H)
    if w is None:
        return True
    _, _, arr, slope = w
    return slope >= 0 and all(c >= 0 for c in arr)


def dimension(H: RationalSeries) -> int:
    """Pole order of the series at t = 1 (0, 1 or 2 for supported inputs)."""
    if H.is_zero():
        return 0
    H = _eliminate_extras(H)
    nden = sum(r for _, r in H.den_factors())
    return max(0, nden - H.num.order_at_one())


def stabilization_index(H: RationalSeries) -> int:
    """Index from which window identities hold: max(0, deg num) + alpha*beta."""
    D = H.num.max_exp()
    return max(0, D if D is not None else 0) + H.pair.product


def sigma(H: RationalSeries) -> int:
    """Stable window sum of a dimension <= 1 series over one period."""
    if dimension(H) > 1:
        raise DimensionTooHighError("stable window sum needs dimension <= 1")
    if not is_nonnegative(H):
        raise NotNonnegativeError("stable window sum defined for nonnegative series")
    if H.is_zero():
        return 0
    N = stabilization_index(H)
    return sum(coeffs(H, N, N + H.pair.product - 1))


def c_min(H: RationalSeries, g: int) -> int:
    """min over r > 0 of h(r*g) for g one of the two weights.

    Exact on multiples up to the stabilization index: past the numerator
    degree each residue class is constant or grows by the (nonnegative)
    slope, so the minimum is attained inside the window.
    """
    S = H.pair
    if g not in (S.alpha, S.beta):
        raise BadModulusError(f"{g} is not a weight of {S}")
    if H.is_zero():
        return 0
    hi = stabilization_index(H)
    best = None
    for x in range(g, hi + 1, g):
        v = coeff_at(H, x)
        if best is None or v < best:
            best = v
            if best == 0:
                break
    return best if best is not None else 0


def veronese(H: RationalSeries, delta: int, k: int) -> RationalSeries:
    """Residue-k slice: the series whose n-th coefficient is h(n*delta + k).

    The input must carry its denominator entirely in extra factors divisible
    by delta; sliced factors (1 - t^(d/delta)) move onto the weight flags
    when d/delta is one of the weights.
    """
    if delta < 1:
        raise BadResidueError(f"delta must be positive, got {delta}")
    if not 0 <= k < delta:
        raise BadResidueError(f"residue {k} outside [0, {delta})")
    S = H.pair
    den_a, den_b = 0, 0
    extra: dict[int, int] = {}
    for d, r in H.den_factors():
        if d % delta != 0:
            raise UnsupportedDenominatorError(
                f"factor (1 - t^{d}) is not divisible by the slice step {delta}"
            )
        dd = d // delta
        # fill the two weight slots first (both accept dd when alpha == beta)
        if r and dd == S.alpha and not den_a:
            den_a, r = 1, r - 1
        if r and dd == S.beta and not den_b:
            den_b, r = 1, r - 1
        if r:
            extra[dd] = extra.get(dd, 0) + r
    num = LaurentPoly(
        {e // delta: c for e, c in H.num.items() if e % delta == k}
    )
    return RationalSeries(S, num, den_a, den_b, tuple(sorted(extra.items())))


def _unify(H1: RationalSeries, H2: RationalSeries):
    """Rewrite both series over the union denominator; returns the numerators."""
    if H1.pair != H2.pair:
        raise ValueError("series are graded over different weight pairs")
    e1, e2 = dict(H1.extra_den), dict(H2.extra_den)
    da = max(H1.den_alpha, H2.den_alpha)
    db = max(H1.den_beta, H2.den_beta)
    extra = {d: max(e1.get(d, 0), e2.get(d, 0)) for d in set(e1) | set(e2)}

    def lift(H, own_extra):
        num = H.num
        if da and not H.den_alpha:
            num = num.times_one_minus(H.pair.alpha)
        if db and not H.den_beta:
            num = num.times_one_minus(H.pair.beta)
        for d, r in extra.items():
            for _ in range(r - own_extra.get(d, 0)):
                num = num.times_one_minus(d)
        return num

    return lift(H1, e1), lift(H2, e2), da, db, tuple(sorted(extra.items()))


def add(H1: RationalSeries, H2: RationalSeries) -> RationalSeries:
    n1, n2, da, db, extra = _unify(H1, H2)
    return RationalSeries(H1.pair, n1 + n2, da, db, extra)


def subtract(H1: RationalSeries, H2: RationalSeries) -> RationalSeries:
    n1, n2, da, db, extra = _unify(H1, H2)
    return RationalSeries(H1.pair, n1 - n2, da, db, extra)


def shift(H: RationalSeries, s: int) -> RationalSeries:
    return RationalSeries(H.pair, H.num.shift(s), H.den_alpha, H.den_beta, H.extra_den)


def scale(H: RationalSeries, k: int) -> RationalSeries:
    return RationalSeries(H.pair, H.num.scale(k), H.den_alpha, H.den_beta, H.extra_den)


def subtract_atom(H: RationalSeries, s: int, denom, coeff: int = 1) -> RationalSeries:
    """H minus coeff * t^s / prod_{g in denom} (1 - t^g)."""
    return subtract(H, atom(H.pair, s, denom, coeff))


def canonical_numerator(H: RationalSeries) -> LaurentPoly:
    """Numerator after rewriting over the full (1-t^alpha)(1-t^beta).

    Raises UnsupportedDenominatorError when extra factors do not cancel into
    the numerator, i.e. the series is not representable over that denominator.
    """
    H = _eliminate_extras(H)
    if H.extra_den:
        raise UnsupportedDenominatorError(
            f"extra factors {H.extra_den} do not divide the numerator"
        )
    num = H.num
    if not H.den_alpha:
        num = num.times_one_minus(H.pair.alpha)
    if not H.den_beta:
        num = num.times_one_minus(H.pair.beta)
    return num


def series_equal(H1: RationalSeries, H2: RationalSeries) -> bool:
    """Exact equality via cross-multiplied numerators."""
    if H1.pair != H2.pair:
        return False
    return H1.num * H2.den_poly() == H2.num * H1.den_poly()
