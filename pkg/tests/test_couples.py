import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import hildepth as hd
import hildepth.oracle as oracle
from hildepth.couples import all_couples, has_minimal_connectors
from hildepth.errors import NotAChainError, NotAGapError

# the complete couple family for (3, 5), in enumeration (lex-by-I) order
GOLDEN_35 = [
    ((0,), (15,)),
    ((0, 1), (6, 10)),
    ((0, 1, 2), (6, 7, 5)),
    ((0, 2), (12, 5)),
    ((0, 4), (9, 10)),
    ((0, 4, 2), (9, 7, 5)),
    ((0, 7), (12, 10)),
]

PROPERTY_PAIRS = [(2, 3), (3, 4), (3, 5), (4, 5), (4, 7), (5, 6), (6, 11)]
CROSSCHECK_PAIRS = PROPERTY_PAIRS + [(5, 7), (7, 8), (2, 73), (3, 49), (11, 13)]


def test_couple_from_chain_examples(s35):
    c = hd.couple_from_chain(s35, (7,))
    assert (c.I, c.J) == ((0, 7), (12, 10))
    c = hd.couple_from_chain(s35, ())
    assert (c.I, c.J) == ((0,), (15,))
    c = hd.couple_from_chain(s35, (4, 2))
    assert (c.I, c.J) == ((0, 4, 2), (9, 7, 5))


def test_couple_from_chain_rejects_non_chain(s35):
    with pytest.raises(NotAChainError):
        hd.couple_from_chain(s35, (2, 4))
    with pytest.raises(NotAChainError):
        hd.couple_from_chain(s35, (1, 7))  # weakly related only


def test_couple_from_chain_rejects_non_gap(s35):
    with pytest.raises(NotAGapError):
        hd.couple_from_chain(s35, (3,))


def test_enumerate_35_exactly(s35):
    got = [(c.I, c.J) for c in hd.enumerate_couples(s35)]
    assert got == GOLDEN_35


def test_counts():
    assert hd.count_couples(hd.make_pair(4, 5)) == 14
    assert hd.count_couples(hd.make_pair(4, 7)) == 30
    assert hd.count_couples(hd.make_pair(3, 5)) == 7
    assert hd.count_couples(hd.make_pair(1, 2)) == 1
    assert [(c.I, c.J) for c in hd.enumerate_couples(hd.make_pair(1, 2))] == [
        ((0,), (2,))
    ]


@pytest.mark.parametrize("a,b", PROPERTY_PAIRS)
def test_enumerated_couples_are_fundamental(a, b):
    S = hd.make_pair(a, b)
    gap_set = set(hd.gaps(S))
    seen_I = set()
    for c in hd.enumerate_couples(S):
        assert hd.is_fundamental(S, c.I, c.J)
        assert c.length <= S.alpha
        assert all(j in gap_set for j in c.J[1:-1])
        assert c.I not in seen_I
        seen_I.add(c.I)


@pytest.mark.parametrize("a,b", PROPERTY_PAIRS)
def test_single_gap_couples_present(a, b):
    S = hd.make_pair(a, b)
    family = {(c.I, c.J) for c in hd.enumerate_couples(S)}
    for e in hd.gaps(S):
        p = hd.present(S, e)
        expected = ((0, e), ((S.beta - p.a) * S.alpha, (S.alpha - p.b) * S.beta))
        assert expected in family


@pytest.mark.parametrize("a,b", CROSSCHECK_PAIRS)
def test_count_matches_dfs_and_bruteforce(a, b):
    S = hd.make_pair(a, b)
    dp = hd.count_couples(S)
    dfs = sum(1 for _ in hd.enumerate_couples(S))
    assert dp == dfs
    assert dp == oracle.brute_count_couples(S)


def test_is_fundamental_examples(s35):
    assert hd.is_fundamental(s35, (0, 7), (12, 10))
    assert hd.is_fundamental(s35, (0,), (15,))
    assert not hd.is_fundamental(s35, (0, 1), (4, 10))
    assert not hd.is_fundamental(s35, (), ())
    assert not hd.is_fundamental(s35, (0, 1), (6,))
    assert not hd.is_fundamental(s35, (0, "x"), (6, 10))
    assert not hd.is_fundamental(s35, (1, 2), (7, 5))


@pytest.mark.parametrize("a,b", [(3, 5), (3, 4), (4, 7)])
def test_nontrivial_couples_are_reduced_balanced(a, b):
    S = hd.make_pair(a, b)
    for c in hd.enumerate_couples(S):
        assert hd.is_balanced(S, c.I, c.J)
        trivial = c.I == (0,)
        assert hd.is_reduced(S, c.I, c.J) == (not trivial)


def test_balanced_but_not_reduced(s35):
    assert hd.is_balanced(s35, (0, 0), (15, 15))
    assert not hd.is_reduced(s35, (0, 0), (15, 15))
    assert hd.is_balanced(s35, (0,), (30,))
    assert not hd.is_reduced(s35, (0,), (30,))
    assert not hd.is_balanced(s35, (0, 1), (6,))


@pytest.mark.parametrize("a,b", [(3, 5), (4, 7)])
def test_reduced_couples_use_minimal_connectors(a, b):
    S = hd.make_pair(a, b)
    for c in hd.enumerate_couples(S):
        if c.I == (0,):
            continue
        assert has_minimal_connectors(S, c.I, c.J)


def test_shift_couple_examples():
    C = hd.BalancedCouple((0, 7), (12, 10))
    shifted = hd.shift_couple(C, 7)
    assert (shifted.I, shifted.J) == ((-7, 0), (5, 3))
    assert hd.shift_couple(C, 0) == C
    assert hd.shift_couple(shifted, -7) == C


@given(seed=st.integers(0, 10**6), x=st.integers(-100, 100))
@settings(max_examples=150)
def test_shift_preserves_balancedness(seed, x):
    S = hd.make_pair(3, 5)
    C = hd.random_balanced(S, seed, 5, 2)
    shifted = hd.shift_couple(C, x)
    assert hd.is_balanced(S, shifted.I, shifted.J)


@pytest.mark.parametrize("a,b", [(3, 5), (2, 3), (4, 7), (1, 4), (1, 1)])
def test_random_balanced_is_balanced_and_deterministic(a, b):
    S = hd.make_pair(a, b)
    for seed in range(30):
        C = hd.random_balanced(S, seed, 4, 2)
        assert hd.is_balanced(S, C.I, C.J)
        assert C.length <= 4
        assert C == hd.random_balanced(S, seed, 4, 2)


def test_all_couples_cached_order(s35):
    assert [(c.I, c.J) for c in all_couples(s35)] == GOLDEN_35
