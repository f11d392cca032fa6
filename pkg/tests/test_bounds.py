import math
import random

import pytest

from convcodes.bounds import (
    appendix_checks,
    enumerate_recovering_sets,
    isolated_subset,
    lrc_access_bounds,
    mds_access_bounds,
    optimal_lrc_bounds,
    singleton_lrc,
)
from convcodes.codes import GrsCode, LrcCode
from convcodes.errors import BudgetExceededError, ParameterError
from convcodes.field import PrimeField
from convcodes.lrc_convert import build_lrc_sets
from convcodes.matrix import in_span
from convcodes.poly import Polynomial

F19 = PrimeField(19)
X3 = Polynomial.monomial(3, F19)


def check_isolated(code, A, r, result):
    """Independent re-check: size, recovering sets of size <= r that avoid the subset."""
    assert set(result.elements) <= set(A)
    assert len(result) >= math.ceil(len(A) / (r + 1))
    cols = code.generator_matrix().columns()
    for i in result.elements:
        I = result.recovering_sets[i]
        assert len(I) <= r and not set(I) & set(result.elements)
        assert in_span(cols[i], [cols[j] for j in I], code.field) is not None


def test_mds_bounds_example_one():
    b = mds_access_bounds(6, 4, 10, 2)
    assert (b.read_lower, b.write_lower, b.total_lower) == (4, 2, 6)


def test_mds_bounds_read_everything_regime():
    # nI - k = 1 < nF - zeta*k = 3
    b = mds_access_bounds(5, 4, 11, 2)
    assert (b.read_lower, b.write_lower) == (8, 3)


def test_mds_bounds_reject_bad_lengths():
    with pytest.raises(ParameterError):
        mds_access_bounds(3, 4, 10, 2)


def test_lrc_bounds_example_two():
    b = lrc_access_bounds(9, 4, 15, 2, 2, 5)
    assert (b.read_lower, b.write_lower, b.total_lower) == (4, 3, 7)


def test_singleton_lrc():
    assert singleton_lrc(15, 8, 2) == (5, True)
    assert singleton_lrc(9, 4, 2) == (5, True)
    with pytest.raises(ParameterError):
        singleton_lrc(9, 4, 5)


def test_optimal_lrc_example_two():
    b = optimal_lrc_bounds(9, 15, 2, 2, 2)
    assert (b.read_lower, b.write_lower) == (4, 3)


@pytest.mark.parametrize("zeta", [2, 3, 4])
def test_closed_forms_agree_with_general_bound(zeta):
    for k in range(1, 5):
        for r in range(1, 5):
            for li in range(1, 6):
                for lf in range(1, li + 1):
                    nI, nF = (k + li) * (r + 1), (zeta * k + lf) * (r + 1)
                    a = optimal_lrc_bounds(nI, nF, zeta, k, r)
                    d = singleton_lrc(nF, zeta * k * r, r)[0]
                    b = lrc_access_bounds(nI, k * r, nF, zeta, r, d)
                    assert (a.read_lower, a.write_lower) == (b.read_lower, b.write_lower)


@pytest.mark.parametrize("zeta", [2, 3, 4])
def test_lrc_bound_degenerates_to_mds_bound(zeta):
    # locality zeta*k is no constraint; the MDS bound must come back
    for k in range(1, 6):
        for li in range(1, 8):
            for lf in range(1, 8):
                nI, nF = k + li, zeta * k + lf
                a = mds_access_bounds(nI, k, nF, zeta)
                b = lrc_access_bounds(nI, k, nF, zeta, zeta * k, nF - zeta * k + 1)
                assert (a.read_lower, a.write_lower) == (b.read_lower, b.write_lower)


def test_lrc_bounds_are_clamped():
    b = lrc_access_bounds(20, 2, 5, 2, 2, 1)
    assert b.read_lower >= 0 and b.write_lower >= 0


def test_optimal_bounds_need_divisible_lengths():
    with pytest.raises(ParameterError):
        optimal_lrc_bounds(10, 15, 2, 2, 2)


def test_isolated_subset_on_tamo_barg_code():
    code = LrcCode([[1, 7, 11], [8, 18, 12], [4, 9, 6]], X3, 2, 2)
    A = list(range(9))
    res = isolated_subset(code, A)
    check_isolated(code, A, 2, res)
    assert len(res) == 3


def test_isolated_subset_on_generic_code():
    code = GrsCode([1, 2, 3, 4, 5, 6], 3, field=PrimeField(7))
    res = isolated_subset(code, [0, 1, 2, 3, 4], r=3)
    check_isolated(code, [0, 1, 2, 3, 4], 3, res)


def test_isolated_subset_random_subsets():
    rng = random.Random(11)
    code = LrcCode([[1, 7, 11], [8, 18, 12], [4, 9, 6], [2, 14, 3]], X3, 3, 2)
    for _ in range(25):
        A = rng.sample(range(12), rng.randint(1, 12))
        check_isolated(code, A, 2, isolated_subset(code, A))


def test_isolated_subset_argument_errors():
    code = GrsCode([1, 2, 3], 2, field=PrimeField(7))
    with pytest.raises(ParameterError):
        isolated_subset(code, [0, 1])
    with pytest.raises(ParameterError):
        isolated_subset(code, [0, 7], r=2)


def test_recovering_set_enumeration_limits():
    G = GrsCode(list(range(1, 18)), 2, field=F19).generator_matrix()
    with pytest.raises(BudgetExceededError):
        enumerate_recovering_sets(G, 2)
    G = GrsCode([1, 2, 3, 4], 3, field=PrimeField(7)).generator_matrix()
    with pytest.raises(ParameterError):
        enumerate_recovering_sets(G, 1)


def test_appendix_checks_example_two():
    rep = appendix_checks(build_lrc_sets(2, 2, 2, 1, 1, F19))
    assert rep.ok
    assert rep.rank == 4
    assert rep.block_shape == (2, 2)


def test_appendix_checks_explicit_groups_and_failure():
    assert appendix_checks([[1, 7, 11], [8, 18, 12], [4, 9, 6]], X3).ok
    rep = appendix_checks([[1, 7, 11], [1, 7, 11]], X3)
    assert not rep.rank_ok and rep.failures
    with pytest.raises(ParameterError):
        appendix_checks([[1, 7, 11]])


def test_appendix_checks_single_group_is_vacuous_block():
    rep = appendix_checks([[1, 7, 11]], X3)
    assert rep.ok and rep.block_shape == (0, 2)
