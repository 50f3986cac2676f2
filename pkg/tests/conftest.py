import pytest

from hildepth import make_pair, to_rational
from hildepth.series import ALPHA, BETA, LaurentPoly, RationalSeries, Term

BOTH = frozenset((ALPHA, BETA))
ONLY_A = frozenset((ALPHA,))
ONLY_B = frozenset((BETA,))
POLY = frozenset()


@pytest.fixture
def s23():
    return make_pair(2, 3)


@pytest.fixture
def s34():
    return make_pair(3, 4)


@pytest.fixture
def s35():
    return make_pair(3, 5)


@pytest.fixture
def mixed_rank_terms(s35):
    """R + (R/m)(-1) + (R/m)(-2): nonnegative, passes the alpha*beta-step
    test, but violates the full criterion."""
    return (Term(0, 1, BOTH), Term(1, 1, POLY), Term(2, 1, POLY))


@pytest.fixture
def mixed_rank_series(s35, mixed_rank_terms):
    return to_rational(s35, mixed_rank_terms)


@pytest.fixture
def staircase_terms(s35):
    """(R/m)(-1) + R/(Y) + (R/(Y))(-7) + (R/(Y))(-8): the coefficients are
    1 + t + t^3 + sum of t^n for n >= 6; not decomposable at all."""
    return (
        Term(1, 1, POLY),
        Term(0, 1, ONLY_A),
        Term(7, 1, ONLY_A),
        Term(8, 1, ONLY_A),
    )


@pytest.fixture
def staircase_series(s35, staircase_terms):
    return to_rational(s35, staircase_terms)


@pytest.fixture
def tight_critical_series(s34):
    """(1 + t + t^6 + t^7 + t^8) / (1 - t^3) over (3, 4): nonnegative with a
    single tight 4-critical instance, so only (1 - t^3)-atoms can be peeled."""
    return RationalSeries(s34, LaurentPoly({0: 1, 1: 1, 6: 1, 7: 1, 8: 1}), 1, 0)


@pytest.fixture
def free35(s35):
    return RationalSeries(s35, LaurentPoly({0: 1}), 1, 1)


@pytest.fixture
def geo3_35(s35):
    """1 / (1 - t^3) graded over (3, 5)."""
    return RationalSeries(s35, LaurentPoly({0: 1}), 1, 0)
