"""Merge-regime convertible codes over prime fields.

MDS (GRS) and Tamo-Barg locally repairable code pairs whose conversion reads
and writes as few symbols as the access-cost lower bounds allow.
"""

from .bounds import (
    AccessBounds,
    appendix_checks,
    isolated_subset,
    lrc_access_bounds,
    mds_access_bounds,
    optimal_lrc_bounds,
    singleton_lrc,
)
from .codes import (
    Codeword,
    GrsCode,
    LrcCode,
    check_good_polynomial,
    check_locality,
    grs_decode_erasures,
    grs_encode,
    lrc_encode,
    lrc_repair,
    min_distance_bruteforce,
)
from .errors import *  # noqa: F401,F403
from .field import FieldElem, PrimeField, ff_pow, find_modulus, primitive_root, subgroup_generator
from .lrc_convert import (
    LrcConvertibleCode,
    LrcLayout,
    build_lrc_convertible,
    build_lrc_sets,
    build_m_matrix_lrc,
    lrc_convert,
    plan_lrc_conversion,
)
from .matrix import Matrix, in_span, mat_inverse, mat_rank
from .mds_convert import (
    DefaultReencode,
    MdsConvertibleCode,
    MdsLayout,
    build_m_matrix,
    build_mds_convertible,
    build_mds_sets,
    mds_convert,
    plan_mds_conversion,
)
from .poly import (
    EvaluationSet,
    Polynomial,
    XGBasis,
    annihilator,
    compose,
    interpolate,
    poly_eval,
    vandermonde,
    xg_to_monomial,
    xg_vector,
)
from .trace import ConversionTrace

__version__ = "0.1.0"
