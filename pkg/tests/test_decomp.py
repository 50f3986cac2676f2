import pytest

import hildepth as hd
import hildepth.oracle as oracle
from hildepth.decomp import (
    DIM1_GREEDY,
    EXACT_MODULE_INPUT,
    TAIL_PEEL_HEURISTIC,
    Decomposition,
)
from hildepth.errors import (
    DimensionTooHighError,
    NotNonnegativeError,
    StarFailsError,
)
from hildepth.series import LaurentPoly, RationalSeries, Term

from conftest import BOTH, ONLY_A, ONLY_B, POLY


def atoms_of(d):
    return [(t.shift, sorted(t.denom), t.coeff) for t in d.atoms]


# --- pd ----------------------------------------------------------------------


def test_pd_examples(s35, free35, mixed_rank_series):
    assert hd.pd(mixed_rank_series, 15) == 1
    assert hd.pd(free35, 15) == 2
    assert hd.pd(hd.to_rational(s35, ())) is None


def test_pd_default_d_is_weight_product(s35, free35):
    assert hd.pd(free35) == hd.pd(free35, 15)


def test_pd_rejects_negative(s35, free35):
    with pytest.raises(NotNonnegativeError):
        hd.pd(hd.subtract_atom(free35, 0, ONLY_A, coeff=3), 15)


def test_pd_monotone_under_multiplication(s35):
    corpus = oracle.make_corpus(s35, 3, 20)
    for e in corpus.entries:
        H = e.series
        G = RationalSeries(s35, H.num.times_one_minus(15), 1, 1)
        if hd.is_nonnegative(G):
            assert hd.pd(H, 15) >= hd.pd(G, 15) + 1


# --- hilbert_depth / nu ------------------------------------------------------


def test_depth_examples(
    s35, s34, mixed_rank_terms, staircase_terms, free35, tight_critical_series
):
    assert hd.hilbert_depth(s35, mixed_rank_terms).hdep == 0
    assert hd.hilbert_depth(s35, staircase_terms).hdep == 0
    assert hd.hilbert_depth(s35, free35).hdep == 2
    assert hd.hilbert_depth(s34, tight_critical_series).hdep == 1


def test_depth_zero_reports_violation(s35, mixed_rank_terms):
    rep = hd.hilbert_depth(s35, mixed_rank_terms)
    assert rep.star is not None and not rep.star.holds
    v = rep.star.violation
    assert (v.I, v.J, v.n, v.lhs, v.rhs) == ((0, 1), (6, 10), 1, 2, 1)


def test_depth_one_not_free_by_canonical_numerator(s34, tight_critical_series):
    canon = hd.series.canonical_numerator(tight_critical_series)
    assert not canon.is_nonnegative()
    rep = hd.hilbert_depth(s34, tight_critical_series)
    assert rep.hdep == 1
    assert rep.decomposition is not None
    assert hd.verify_decomposition(s34, tight_critical_series, rep.decomposition)


def test_depth_two_comes_with_free_witness(s35):
    terms = (Term(0, 1, BOTH), Term(4, 2, BOTH))
    rep = hd.hilbert_depth(s35, terms)
    assert rep.hdep == 2
    assert all(t.denom == BOTH for t in rep.decomposition.atoms)
    assert hd.verify_decomposition(s35, hd.to_rational(s35, terms), rep.decomposition)


def test_depth_of_zero_series(s35):
    assert hd.hilbert_depth(s35, ()).hdep == 2


def test_nu_matches_depth(s35, s34, mixed_rank_terms, free35, tight_critical_series):
    assert hd.nu(s35, mixed_rank_terms) == 0
    assert hd.nu(s35, free35) == 2
    assert hd.nu(s34, tight_critical_series) == 1


# --- greedy dimension-1 decomposition ---------------------------------------


def test_greedy_single_atom(s35, geo3_35):
    d = hd.decompose_dim1(s35, geo3_35)
    assert atoms_of(d) == [(0, ["alpha"], 1)]
    assert d.provenance == DIM1_GREEDY


def test_greedy_tight_critical_example(s34, tight_critical_series):
    d = hd.decompose_dim1(s34, tight_critical_series, check_invariants=True)
    assert atoms_of(d) == [
        (0, ["alpha"], 1),
        (1, ["alpha"], 1),
        (6, ["alpha"], 1),
        (7, ["alpha"], 1),
        (8, ["alpha"], 1),
    ]
    assert hd.verify_decomposition(s34, tight_critical_series, d)


def test_greedy_never_takes_blocked_direction(s34, tight_critical_series):
    d = hd.decompose_dim1(s34, tight_critical_series)
    assert (0, ["beta"], 1) not in atoms_of(d)


def test_greedy_rejects_criterion_violation(s35, staircase_series):
    with pytest.raises(StarFailsError) as exc:
        hd.decompose_dim1(s35, staircase_series)
    assert (exc.value.violation.I, exc.value.violation.n) == ((0, 1, 2), -1)


def test_greedy_rejects_dimension_two(s35, free35):
    with pytest.raises(DimensionTooHighError):
        hd.decompose_dim1(s35, free35)


def test_greedy_invariants_and_window_budget(s35, s23):
    # each atom accounts for the other weight's share of the stable window
    cases = []
    for seed in range(25):
        terms = tuple(
            t
            for t in oracle.make_corpus(s35, 800 + seed, 1, 4, 10).entries[0].terms
            if t.denom != BOTH
        )
        if terms:
            cases.append((s35, hd.to_rational(s35, terms)))
    # dimension-1 over the full denominator: (1 + t)(1 - t^6) cancels one pole
    cases.append(
        (s23, RationalSeries(s23, LaurentPoly({0: 1, 1: 1}).times_one_minus(6), 1, 1))
    )
    for S, H in cases:
        if not hd.check_star(S, H).holds:
            continue
        d = hd.decompose_dim1(S, H, check_invariants=True)
        assert hd.verify_decomposition(S, H, d)
        spent = sum(
            t.coeff * (S.beta if t.denom == ONLY_A else S.alpha) for t in d.atoms
        )
        assert spent == hd.sigma(H)


def test_greedy_handles_periodic_denominator(s35):
    # a pure-period series that the criterion accepts decomposes exactly
    H = RationalSeries(
        s35, LaurentPoly({0: 1, 3: 1, 6: 1, 9: 1, 12: 1}), 0, 0, ((15, 1),)
    )
    assert hd.check_star(s35, H).holds
    d = hd.decompose_dim1(s35, H, check_invariants=True)
    assert hd.verify_decomposition(s35, H, d)


# --- full decompose ----------------------------------------------------------


def test_decompose_termlist_example(s35):
    terms = (Term(0, 1, BOTH), Term(1, 1, ONLY_A))
    d = hd.decompose(s35, terms)
    assert d.provenance == EXACT_MODULE_INPUT
    assert hd.verify_decomposition(s35, hd.to_rational(s35, terms), d)
    assert (15, ["alpha", "beta"], 1) in atoms_of(d)


def test_decompose_termlist_with_polynomial_part(s35):
    # a bare summand that the criterion tolerates is absorbed into atoms
    terms = (Term(0, 1, BOTH), Term(1, 1, POLY))
    H = hd.to_rational(s35, terms)
    if hd.check_star(s35, H).holds:
        d = hd.decompose(s35, terms)
        assert hd.verify_decomposition(s35, H, d)
        assert all(t.denom for t in d.atoms)


def test_decompose_raw_free_series(s35, free35):
    d = hd.decompose(s35, free35)
    assert d.provenance == TAIL_PEEL_HEURISTIC
    assert hd.verify_decomposition(s35, free35, d)
    assert any(t.denom == BOTH for t in d.atoms)
    assert all(t.denom for t in d.atoms)


def test_decompose_raw_dim1(s35, geo3_35):
    d = hd.decompose(s35, geo3_35)
    assert d.provenance == DIM1_GREEDY
    assert hd.verify_decomposition(s35, geo3_35, d)


def test_decompose_rejects_criterion_violation(s35, mixed_rank_terms):
    with pytest.raises(StarFailsError):
        hd.decompose(s35, mixed_rank_terms)


def test_decompose_corpus_roundtrip(s35):
    corpus = oracle.make_corpus(s35, 17, 30)
    for e in corpus.entries:
        d = hd.decompose(s35, e.terms)
        assert hd.verify_decomposition(s35, e.series, d)
        assert all(t.denom for t in d.atoms)


# --- verification gate -------------------------------------------------------


def test_verify_detects_dropped_atom(s35, free35):
    d = hd.decompose(s35, free35)
    broken = Decomposition(d.atoms[1:], d.provenance)
    assert not hd.verify_decomposition(s35, free35, broken)


def test_verify_detects_swapped_denominator(s35, geo3_35):
    good = hd.decompose(s35, geo3_35)
    swapped = Decomposition(
        tuple(Term(t.shift, t.coeff, ONLY_B) for t in good.atoms), good.provenance
    )
    assert not hd.verify_decomposition(s35, geo3_35, swapped)


def test_verify_rejects_bare_polynomial_atoms(s35):
    terms = (Term(0, 1, POLY),)
    H = hd.to_rational(s35, terms)
    assert not hd.verify_decomposition(s35, H, Decomposition(terms, EXACT_MODULE_INPUT))


# --- witness rendering -------------------------------------------------------


def test_witness_strings(s35):
    assert hd.witness_module(s35, Decomposition((Term(0, 1, ONLY_A),), DIM1_GREEDY)) == "R/(Y)"
    assert (
        hd.witness_module(s35, Decomposition((Term(1, 1, POLY),), EXACT_MODULE_INPUT))
        == "(R/\U0001d52a)(-1)"
    )
    assert hd.witness_module(s35, Decomposition((Term(0, 1, BOTH),), DIM1_GREEDY)) == "R"
    multi = Decomposition((Term(7, 1, ONLY_A), Term(0, 2, ONLY_B)), DIM1_GREEDY)
    assert hd.witness_module(s35, multi) == "R/(X) ⊕ R/(X) ⊕ (R/(Y))(-7)"


def test_free_depth_iff_both_denominator_witness_exists(s35):
    corpus = oracle.make_corpus(s35, 53, 25)
    for e in corpus.entries:
        rep = hd.hilbert_depth(s35, e.terms)
        canon = hd.series.canonical_numerator(e.series)
        assert (rep.hdep == 2) == canon.is_nonnegative()
        if rep.hdep == 2:
            assert all(t.denom == BOTH for t in rep.decomposition.atoms)
