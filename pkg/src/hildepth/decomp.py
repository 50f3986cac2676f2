"""Constructive side: depth classification and decomposition witnesses.

The greedy dimension-1 routine peels one geometric atom per step, anchored
at the current minimal support.  A step in direction g is legal when the
minimum of the coefficients over positive multiples of g stays positive
(so the remainder is nonnegative) and every critical inequality for side g
is strict (so the depth criterion survives).  When the criterion holds, at
least one direction is always legal, and the stable window sum drops by
beta per alpha-step or alpha per beta-step, so the loop terminates with
remainder exactly zero.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import series, star
from .errors import (
    DecompositionNotFoundError,
    DimensionTooHighError,
    InvariantBrokenError,
    NotNonnegativeError,
    StarFailsError,
    UnsupportedDenominatorError,
)
from .semigroup import SemigroupPair
from .series import ALPHA, BETA, RationalSeries, Term
from .star import StarVerdict

EXACT_MODULE_INPUT = "exact_module_input"
DIM1_GREEDY = "dim1_greedy"
TAIL_PEEL_HEURISTIC = "tail_peel_heuristic"

_DENOM_RANK = {
    frozenset((ALPHA, BETA)): 0,
    frozenset((ALPHA,)): 1,
    frozenset((BETA,)): 2,
    frozenset(): 3,
}


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Atom list whose exact re-sum equals the decomposed series."""

    atoms: tuple[Term, ...]
    provenance: str


@dataclass(frozen=True, slots=True)
class DepthReport:
    hdep: int
    star: StarVerdict | None = None
    decomposition: Decomposition | None = None
    caveat: str | None = None


def _coerce(S: SemigroupPair, input):
    """Accept a RationalSeries or an iterable of Terms; return (H, terms)."""
    if isinstance(input, RationalSeries):
        return input, None
    terms = tuple(input)
    return series.to_rational(S, terms), terms


def _sorted_atoms(counter: Counter) -> tuple[Term, ...]:
    atoms = [
        Term(shift, coeff, denom)
        for (shift, denom), coeff in counter.items()
        if coeff
    ]
    atoms.sort(key=lambda t: (t.shift, _DENOM_RANK[t.denom]))
    return tuple(atoms)


def pd(H: RationalSeries, d: int | None = None) -> int | None:
    """Largest r such that (1 - t^d)^r times the series stays nonnegative.

    None encodes unbounded (only for the zero series); d defaults to
    alpha*beta.  Each candidate is tested exactly, and for a nonzero series
    the value is finite, so the loop terminates.
    """
    if not series.is_nonnegative(H):
        raise NotNonnegativeError("positivity index needs a nonnegative series")
    if H.is_zero():
        return None
    if d is None:
        d = H.pair.product
    r = 0
    cur = H
    while True:
        cur = RationalSeries(
            H.pair, cur.num.times_one_minus(d), H.den_alpha, H.den_beta, H.extra_den
        )
        if not series.is_nonnegative(cur):
            return r
        r += 1


def decompose_dim1(
    S: SemigroupPair, H: RationalSeries, check_invariants: bool = False
) -> Decomposition:
    """Greedy single-denominator decomposition of a dimension <= 1 series.

    Requires the depth criterion to hold (StarFailsError carries the
    violation otherwise).  Step rule: with the remainder normalized to
    minimal support 0, let c_a and c_b be the minima over positive
    multiples of the weights; a vanishing minimum forces the other
    direction, and when both are positive the alpha-step is taken exactly
    when all alpha-critical instances are strict (alpha preferred as the
    deterministic tie-break).  Both minima vanishing, or the budget running
    out, cannot happen while the criterion holds and would mean a bug.
    """
    verdict = star.check_star(S, H)
    if not verdict.holds:
        raise StarFailsError(verdict.violation)
    if series.dimension(H) > 1:
        raise DimensionTooHighError("greedy decomposition needs dimension <= 1")
    found: Counter = Counter()
    work = H
    budget = series.sigma(H) + 1
    while not work.is_zero():
        budget -= 1
        if budget < 0:
            raise InvariantBrokenError("greedy loop exceeded its window-sum budget")
        s = work.num.min_exp()
        w0 = series.shift(work, -s)
        ca = series.c_min(w0, S.alpha)
        cb = series.c_min(w0, S.beta)
        if ca == 0 and cb == 0:
            raise InvariantBrokenError(
                "both step directions blocked although the criterion holds"
            )
        if ca == 0:
            side = S.beta
        elif cb == 0:
            side = S.alpha
        elif not star.find_nonstrict_critical(S, w0, S.alpha):
            side = S.alpha
        else:
            side = S.beta
        name = ALPHA if side == S.alpha else BETA
        work = series.subtract_atom(work, s, (name,))
        found[(s, frozenset((name,)))] += 1
        if check_invariants:
            if not series.is_nonnegative(work):
                raise InvariantBrokenError(f"remainder went negative at shift {s}")
            if not star.check_star(S, work).holds:
                raise InvariantBrokenError(f"criterion lost at shift {s}")
    return Decomposition(_sorted_atoms(found), DIM1_GREEDY)


def _decompose_terms(S: SemigroupPair, terms) -> Decomposition:
    """Exact witness for a term-list input via the dimension reduction.

    The two-denominator part is pushed out beyond the polynomial part by a
    whole number r of alpha*beta steps (minimal r with r*alpha*beta
    exceeding deg of the polynomial part plus alpha*beta); what remains is
    of dimension <= 1 and inherits the criterion, so the greedy finishes it.
    """
    H = series.to_rational(S, terms)
    verdict = star.check_star(S, H)
    if not verdict.holds:
        raise StarFailsError(verdict.violation)
    ab = S.product
    q0 = [t for t in terms if not t.denom]
    q2 = [t for t in terms if len(t.denom) == 2]
    if not q2:
        inner = decompose_dim1(S, H)
        return Decomposition(inner.atoms, EXACT_MODULE_INPUT)
    deg_q0 = max((t.shift for t in q0), default=None)
    if deg_q0 is None:
        r = 1
    else:
        r = max(1, (deg_q0 + ab) // ab + 1)
    peeled = H
    tail: Counter = Counter()
    for t in q2:
        peeled = series.subtract_atom(peeled, r * ab + t.shift, t.denom, t.coeff)
        tail[(r * ab + t.shift, t.denom)] += t.coeff
    inner = decompose_dim1(S, peeled)
    merged = Counter({(t.shift, t.denom): t.coeff for t in inner.atoms})
    merged.update(tail)
    return Decomposition(_sorted_atoms(merged), EXACT_MODULE_INPUT)


def _decompose_raw_dim2(S: SemigroupPair, H: RationalSeries) -> Decomposition:
    """Verify-and-retry tail peel for a raw two-dimensional series.

    Peels the whole stable growth num(1) as one block of two-denominator
    atoms at shift r*alpha*beta, for increasing r; accepts the first r
    whose remainder is nonnegative, of dimension <= 1 and still satisfies
    the criterion.  Whether this can ever fail for a series that genuinely
    is a module series is open; failure is reported, never papered over.
    """
    ab = S.product
    K = series.canonical_numerator(H).eval_at_one()
    if K <= 0:
        raise InvariantBrokenError("two-dimensional nonnegative series with slope <= 0")
    r_cap = max(0, H.num.max_exp()) // ab + 10
    for r in range(1, r_cap + 1):
        rem = series.subtract_atom(H, r * ab, (ALPHA, BETA), K)
        if not series.is_nonnegative(rem):
            continue
        if series.dimension(rem) > 1:
            continue
        if not star.check_star(S, rem).holds:
            continue
        inner = decompose_dim1(S, rem)
        merged = Counter({(t.shift, t.denom): t.coeff for t in inner.atoms})
        merged[(r * ab, frozenset((ALPHA, BETA)))] += K
        return Decomposition(_sorted_atoms(merged), TAIL_PEEL_HEURISTIC)
    raise DecompositionNotFoundError(
        f"no tail peel up to r = {r_cap} produced a decomposable remainder"
    )


def decompose(S: SemigroupPair, input) -> Decomposition:
    """Decomposition witness with every atom over a nonempty denominator."""
    H, terms = _coerce(S, input)
    if not series.is_nonnegative(H):
        raise NotNonnegativeError("decomposition needs a nonnegative series")
    if terms is not None:
        return _decompose_terms(S, terms)
    if series.dimension(H) <= 1:
        return decompose_dim1(S, H)
    verdict = star.check_star(S, H)
    if not verdict.holds:
        raise StarFailsError(verdict.violation)
    return _decompose_raw_dim2(S, H)


def verify_decomposition(S: SemigroupPair, H, D: Decomposition) -> bool:
    """Exactness gate: symbolic re-sum equals the series and no atom is a
    bare polynomial summand."""
    target, _ = _coerce(S, H)
    resum = series.to_rational(S, D.atoms)
    return series.series_equal(resum, target) and all(t.denom for t in D.atoms)


def hilbert_depth(S: SemigroupPair, input) -> DepthReport:
    """Depth classification 0, 1 or 2 with a certificate.

    2 exactly when the numerator over the full two-factor denominator is
    nonnegative (a free-module series); otherwise 1 exactly when the depth
    criterion holds, with a constructive witness where one is available;
    otherwise 0 with the violated inequality attached.
    """
    H, terms = _coerce(S, input)
    if not series.is_nonnegative(H):
        raise NotNonnegativeError("depth classification needs a nonnegative series")
    if H.is_zero():
        return DepthReport(2, decomposition=Decomposition((), EXACT_MODULE_INPUT))
    try:
        canon = series.canonical_numerator(H)
    except UnsupportedDenominatorError:
        canon = None
    if canon is not None and canon.is_nonnegative():
        atoms = tuple(
            Term(e, c, frozenset((ALPHA, BETA))) for e, c in canon.items()
        )
        return DepthReport(2, decomposition=Decomposition(atoms, EXACT_MODULE_INPUT))
    verdict = star.check_star(S, H)
    if not verdict.holds:
        return DepthReport(0, star=verdict)
    if terms is not None:
        return DepthReport(1, star=verdict, decomposition=_decompose_terms(S, terms))
    if series.dimension(H) <= 1:
        return DepthReport(1, star=verdict, decomposition=decompose_dim1(S, H))
    try:
        return DepthReport(1, star=verdict, decomposition=_decompose_raw_dim2(S, H))
    except DecompositionNotFoundError:
        return DepthReport(
            1,
            star=verdict,
            caveat="module-series assumption required for constructive witness",
        )


def nu(S: SemigroupPair, input) -> int:
    """Largest r admitting a witness whose atoms all use >= r denominator
    factors; for two weights this coincides with the depth classification."""
    return hilbert_depth(S, input).hdep


def witness_module(S: SemigroupPair, D: Decomposition) -> str:
    """Render a witness as a direct sum of shifted cyclic modules.

    Atom over both weights -> R, over alpha alone -> R/(Y), over beta alone
    -> R/(X), over none -> R/m; a shift k becomes the twist (-k), and a
    multiplicity is written as repeated summands.
    """
    pieces = []
    for t in sorted(D.atoms, key=lambda t: (t.shift, _DENOM_RANK[t.denom])):
        if t.denom == frozenset((ALPHA, BETA)):
            base = "R"
        elif t.denom == frozenset((ALPHA,)):
            base = "R/(Y)"
        elif t.denom == frozenset((BETA,)):
            base = "R/(X)"
        else:
            base = "R/\U0001d52a"
        text = base if t.shift == 0 else f"({base})({-t.shift})"
        pieces.extend([text] * t.coeff)
    return " ⊕ ".join(pieces) if pieces else "0"
