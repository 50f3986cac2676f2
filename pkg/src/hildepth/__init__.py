"""Exact positive-depth criterion and decomposition witnesses for formal
Laurent series graded by two coprime weights."""

from .couples import (
    BalancedCouple,
    FundamentalCouple,
    count_couples,
    couple_from_chain,
    enumerate_couples,
    is_balanced,
    is_fundamental,
    is_reduced,
    random_balanced,
    shift_couple,
)
from .decomp import (
    Decomposition,
    DepthReport,
    decompose,
    decompose_dim1,
    hilbert_depth,
    nu,
    pd,
    verify_decomposition,
    witness_module,
)
from .semigroup import (
    GapOrder,
    GapPresentation,
    SemigroupPair,
    apery,
    conductor,
    connecting_gap,
    diff_is_gap,
    gap_order,
    gaps,
    genus,
    is_gap,
    is_member,
    make_pair,
    present,
)
from .series import (
    ALPHA,
    BETA,
    LaurentPoly,
    RationalSeries,
    Term,
    add,
    c_min,
    coeff_at,
    coeffs,
    dimension,
    is_nonnegative,
    shift,
    sigma,
    subtract,
    subtract_atom,
    to_rational,
    veronese,
)
from .star import (
    CriticalHit,
    StarVerdict,
    Violation,
    check_balanced_inequality,
    check_inequality_24,
    check_star,
    check_star_general,
    find_nonstrict_critical,
    holds_for_all_shifts,
)

__version__ = "0.1.0"
