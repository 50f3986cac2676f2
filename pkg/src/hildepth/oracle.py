"""Brute-force oracles and generators used to validate the fast paths.

Everything here is deliberately naive: triple loops, sieves, backtracking,
and a private expansion routine.  None of it shares logic with the code it
checks; independence is the point, not speed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import series as _series_mod
from .errors import (
    BudgetExceededError,
    DimensionTooHighError,
    NotNonnegativeError,
    TooLargeError,
)
from .semigroup import GapPresentation, SemigroupPair
from .series import ALPHA, BETA, RationalSeries, Term


def brute_present(S: SemigroupPair, n: int) -> GapPresentation:
    """Exhaustive scan for the presentation; asserts exactly one hit."""
    if n < 1:
        raise ValueError("presentation oracle needs n >= 1")
    alpha, beta, ab = S.alpha, S.beta, S.product
    hits = []
    for p in range(1, n // ab + 3):
        for a in range(beta):
            for b in range(alpha):
                if p * ab - a * alpha - b * beta == n:
                    hits.append((p, a, b))
    if len(hits) != 1:
        raise AssertionError(f"{len(hits)} presentations found for {n} over {S}")
    return GapPresentation(*hits[0])


def _member_sieve(alpha: int, beta: int, hi: int) -> list[bool]:
    reach = [False] * (hi + 1)
    reach[0] = True
    for x in range(1, hi + 1):
        if x >= alpha and reach[x - alpha]:
            reach[x] = True
        elif x >= beta and reach[x - beta]:
            reach[x] = True
    return reach


def brute_count_couples(S: SemigroupPair) -> int:
    """Count subsets of gaps whose pairwise differences are gaps, plus one
    for the empty subset; guarded because the search is exponential-ish."""
    ab = S.product
    if ab > 200:
        raise TooLargeError(f"alpha*beta = {ab} exceeds the oracle guard of 200")
    reach = _member_sieve(S.alpha, S.beta, ab)
    gap_list = [n for n in range(1, ab + 1) if not reach[n]]
    compatible = {
        (x, y): not reach[abs(x - y)] for x in gap_list for y in gap_list if x != y
    }
    count = 0

    def extend(chosen, start):
        nonlocal count
        for idx in range(start, len(gap_list)):
            g = gap_list[idx]
            if all(compatible[(c, g)] for c in chosen):
                count += 1
                extend(chosen + [g], idx + 1)

    extend([], 0)
    return count + 1


def _convert_state(S: SemigroupPair, H: RationalSeries):
    """Rewrite H over a fixed oracle denominator.

    Full mode keeps (1-t^alpha)(1-t^beta); the lone divisor of alpha*beta
    that cannot be rewritten that way, alpha*beta itself, gets its own mode.
    Returns (num dict, list of denominator exponents, subtraction table).
    """
    alpha, beta, ab = S.alpha, S.beta, S.product
    num = dict(H.num.items())
    factors = [d for d, r in H.den_factors() for _ in range(r)]

    def times_one_minus(d, poly):
        out = dict(poly)
        for e, c in poly.items():
            out[e + d] = out.get(e + d, 0) - c
        return {e: c for e, c in out.items() if c}

    if sorted(factors) == [ab] and ab not in (alpha, beta):
        # period mode: atoms become blocks of length ab/weight
        table = {
            alpha: {j * alpha: 1 for j in range(beta)},
            beta: {j * beta: 1 for j in range(alpha)},
        }
        return num, [ab], table
    # everything else is lifted to the full two-factor denominator
    have = list(factors)
    for d in (alpha, beta):
        if d in have:
            have.remove(d)
        else:
            num = times_one_minus(d, num)
    for d in have:
        if d == 1:
            raise NotImplementedError("oracle does not take (1 - t) denominators")
        raise NotImplementedError(f"oracle cannot rewrite a (1 - t^{d}) factor")
    table = {alpha: {0: 1, beta: -1}, beta: {0: 1, alpha: -1}}
    return num, [alpha, beta], table


def _naive_nonneg(num: dict, dens: list, margin: int) -> bool:
    """Expand by repeated prefix sums and look at every coefficient."""
    if not num:
        return True
    lo = min(num)
    hi = max(max(num), 0) + margin
    arr = [0] * (hi - lo + 1)
    for e, c in num.items():
        arr[e - lo] += c
    for d in dens:
        for i in range(d, len(arr)):
            arr[i] += arr[i - d]
    return all(c >= 0 for c in arr)


def _naive_sigma(num: dict, dens: list, ab: int) -> int:
    if not num:
        return 0
    lo = min(num)
    hi = max(max(num), 0) + 2 * ab
    arr = [0] * (hi - lo + 1)
    for e, c in num.items():
        arr[e - lo] += c
    for d in dens:
        for i in range(d, len(arr)):
            arr[i] += arr[i - d]
    return sum(arr[-ab:])


def brute_decomposable_dim1(
    S: SemigroupPair, H: RationalSeries, budget: int | None = None
) -> bool:
    """Backtracking search for a single-denominator atom decomposition.

    At the minimal support index both atom subtractions are tried; a branch
    survives only while the remainder stays nonnegative, and success means
    some branch reaches exactly zero.  The default budget (stable window
    sum plus one) can never bind, since every subtraction lowers that sum;
    a user-supplied budget that runs out raises instead of answering, so a
    timeout is never recorded as a verdict.
    """
    num, dens, table = _convert_state(S, H)
    ab = S.product
    if dens == [S.alpha, S.beta]:
        if sum(num.values()) != 0:
            raise DimensionTooHighError("oracle needs a dimension <= 1 series")
    if not _naive_nonneg(num, dens, 2 * ab):
        raise NotNonnegativeError("oracle needs a nonnegative series")
    if budget is None:
        budget = _naive_sigma(num, dens, ab) + 1
    memo: dict = {}
    sides = (S.alpha, S.beta) if S.alpha != S.beta else (S.alpha,)

    def search(state: dict, depth: int) -> bool:
        if not state:
            return True
        if depth >= budget:
            raise BudgetExceededError(f"no verdict within budget {budget}")
        key = tuple(sorted(state.items()))
        cached = memo.get(key)
        if cached is not None:
            return cached
        s = min(state)
        result = False
        for side in sides:
            cand = dict(state)
            for off, c in table[side].items():
                e = s + off
                nc = cand.get(e, 0) - c
                if nc:
                    cand[e] = nc
                elif e in cand:
                    del cand[e]
            if _naive_nonneg(cand, dens, 2 * ab) and search(cand, depth + 1):
                result = True
                break
        memo[key] = result
        return result

    return search(num, 0)


def random_star_terms(rng: random.Random, n_atoms: int, shift_bound: int):
    """Random atom recipe with every denominator nonempty, as Term objects."""
    choices = (
        frozenset((ALPHA,)),
        frozenset((BETA,)),
        frozenset((ALPHA, BETA)),
    )
    return tuple(
        Term(rng.randint(0, shift_bound), rng.randint(1, 3), rng.choice(choices))
        for _ in range(n_atoms)
    )


def random_star_series(
    S: SemigroupPair, seed: int, n_atoms: int, shift_bound: int
) -> RationalSeries:
    """Seeded random sum of shifted geometric atoms.

    Such sums are nonnegative and satisfy the depth criterion by
    construction, which makes them the positive half of every property test.
    """
    if n_atoms < 1:
        raise ValueError("n_atoms must be >= 1")
    rng = random.Random(seed)
    return _series_mod.to_rational(S, random_star_terms(rng, n_atoms, shift_bound))


@dataclass(frozen=True, slots=True)
class CorpusEntry:
    terms: tuple[Term, ...]
    series: RationalSeries


@dataclass(frozen=True, slots=True)
class Corpus:
    seed: int
    entries: tuple[CorpusEntry, ...]


def make_corpus(
    S: SemigroupPair,
    seed: int,
    size: int,
    n_atoms: int = 4,
    shift_bound: int = 12,
) -> Corpus:
    """Seeded corpus of criterion-satisfying series with their recipes."""
    rng = random.Random(seed)
    entries = []
    for _ in range(size):
        terms = random_star_terms(rng, rng.randint(1, n_atoms), shift_bound)
        entries.append(CorpusEntry(terms, _series_mod.to_rational(S, terms)))
    return Corpus(seed, tuple(entries))


def regression_vectors_3_5():
    """The fixed (3, 5) inequality system as labeled index-multiset pairs.

    The sixth entry is (0,1,2) against (5,6,7): the variant with right-hand
    side (4,5,6) that circulates elsewhere is NOT a consequence of the depth
    criterion; the single shifted atom t^4/(1-t^5) violates it at shift 7
    while being the series of a positive-depth module.
    """
    return (
        (6, (0,), (15,)),
        (7, (0, 1), (6, 10)),
        (8, (0, 2), (12, 5)),
        (9, (0, 4), (9, 10)),
        (10, (0, 7), (12, 10)),
        (11, (0, 1, 2), (5, 6, 7)),
        (12, (0, 2, 4), (5, 7, 9)),
    )
