import random

import pytest

from convcodes.codes import GrsCode, is_mds
from convcodes.errors import ConditionViolation, NotACodewordError, ParameterError
from convcodes.field import PrimeField
from convcodes.golden import EX1_A, EX1_B, EX1_C, EX1_ETA, EX1_M, EX1_THETA, example1_code
from convcodes.matrix import Matrix
from convcodes.mds_convert import (
    DefaultReencode,
    MdsConvertibleCode,
    build_m_matrix,
    build_mds_sets,
    mds_convert,
    mds_min_modulus,
    plan_mds_conversion,
)
from convcodes.poly import EvaluationSet, annihilator_value

F19 = PrimeField(19)


def power_vec(a, k, p):
    return [pow(a, t, p) for t in range(k)]


def random_messages(code, rng):
    return [[rng.randrange(code.field.p) for _ in range(code.initial.dim)] for _ in range(code.zeta)]


def test_builder_reproduces_example_one_sets():
    L = build_mds_sets(2, 4, 2, 2, F19)
    assert [list(A) for A in L.A_sets] == [EX1_A, EX1_B]
    assert list(L.C) == EX1_C
    assert list(L.B) == []
    assert (L.alpha, L.subgroup_generator, L.subgroup_order) == (2, 8, 6)


def test_example_one_constants():
    code = example1_code()
    assert code.thetas[1] == EX1_THETA
    assert code.M_matrices[1].tolist() == EX1_M
    assert code.etas[1] == EX1_ETA
    assert code.etas[0] == [[1, 0], [0, 1]]


def test_m_matrix_defining_identity():
    # recompute theta from the annihilator quotient and check M b_j = theta_j a_j
    A, B, C = (EvaluationSet(s, F19) for s in (EX1_A, EX1_B, EX1_C))
    thetas, M = build_m_matrix(A, B, C)
    for a, b, th in zip(EX1_A, EX1_B, thetas):
        num = annihilator_value([x for x in EX1_B + EX1_C if x != b], b, F19)
        den = annihilator_value([x for x in EX1_A + EX1_C if x != a], a, F19)
        assert th == num * pow(den, -1, 19) % 19
        assert M @ power_vec(b, 4, 19) == [th * v % 19 for v in power_vec(a, 4, 19)]


def test_build_m_matrix_rejects_overlap():
    A = EvaluationSet([1, 8], F19)
    with pytest.raises(ParameterError):
        build_m_matrix(A, EvaluationSet([8, 2], F19), EvaluationSet([4], F19))


def test_example_one_conversion_reads_only_c():
    code = example1_code()
    rng = random.Random(5)
    for _ in range(20):
        msgs = random_messages(code, rng)
        words = [code.initial.encode(m) for m in msgs]
        d, trace = mds_convert(code, words)
        assert trace.accessed == [[4, 5], [4, 5]]
        assert (trace.read_cost, trace.write_cost) == (4, 2)
        assert list(d[:4]) == list(words[0][:4]) and list(d[4:8]) == list(words[1][:4])
        assert d == code.final.encode_poly(code.conversion_map(msgs))
        assert code.decode_final(d) == msgs


def test_final_code_is_grs_with_expected_multipliers():
    code = example1_code()
    assert list(code.final.multipliers) == [5, 7, 5, 15, 10, 18, 13, 4, 1, 1]
    assert is_mds(code.final) and is_mds(code.initial)


def test_conversion_rejects_non_codewords():
    code = example1_code()
    w = list(code.initial.encode([1, 2, 3, 4]))
    w[0] = (w[0] + 1) % 19
    with pytest.raises(NotACodewordError):
        mds_convert(code, [w, code.initial.encode([0, 0, 0, 1])])
    with pytest.raises(ParameterError):
        mds_convert(code, [code.initial.encode([0, 0, 0, 1])])
    with pytest.raises(NotACodewordError):
        code.decode_final([0] * 9 + [1])


def test_corrupted_m_is_reported_with_witness():
    code = example1_code()
    M = code.M_matrices[1]
    bad = MdsConvertibleCode(
        code.layout, code.initial, code.final,
        [code.M_matrices[0], M.with_entry(0, 0, M[0, 0] + 1)],
        code.thetas, code.etas, code.c_weights,
    )
    with pytest.raises(ConditionViolation) as exc:
        bad.check_conditions()
    assert exc.value.witness[0] == 2


@pytest.mark.parametrize("zeta,k,li,lf", [(2, 2, 2, 1), (3, 3, 4, 2), (2, 4, 4, 4), (4, 2, 3, 2), (3, 1, 1, 1)])
def test_planned_codes_convert_at_the_bound(zeta, k, li, lf):
    code = plan_mds_conversion(zeta, k, li, lf)
    assert isinstance(code, MdsConvertibleCode)
    assert code.field.p >= mds_min_modulus(zeta, k, li)
    assert code.initial.n == k + li and code.final.n == zeta * k + lf
    rng = random.Random(zeta * 100 + k)
    for _ in range(5):
        msgs = random_messages(code, rng)
        d, trace = mds_convert(code, [code.initial.encode(m) for m in msgs])
        assert (trace.read_cost, trace.write_cost) == (zeta * lf, lf)
        assert code.final.contains(d)
        assert code.decode_final(d) == msgs


def test_default_reencode_when_lf_exceeds_k():
    code = plan_mds_conversion(2, 2, 3, 3)
    assert isinstance(code, DefaultReencode)
    rng = random.Random(0)
    msgs = random_messages(code, rng)
    d, trace = mds_convert(code, [code.initial.encode(m) for m in msgs])
    assert (trace.read_cost, trace.write_cost) == (4, 3)
    assert d == code.final.encode_poly(code.conversion_map(msgs))
    assert code.decode_final(d) == msgs


def test_default_reencode_field_too_small():
    with pytest.raises(ParameterError):
        DefaultReencode(2, 2, 3, 3, PrimeField(7))


def test_layout_errors():
    with pytest.raises(ParameterError):
        build_mds_sets(2, 2, 3, 3, F19)  # lF > k
    with pytest.raises(ParameterError):
        build_mds_sets(2, 4, 2, 3, F19)  # lF > lI
    with pytest.raises(ParameterError):
        build_mds_sets(5, 4, 2, 2, F19)  # too few cosets
    with pytest.raises(ParameterError):
        plan_mds_conversion(0, 2, 2, 2)


def test_explicit_field_is_honoured():
    code = plan_mds_conversion(2, 2, 2, 2, PrimeField(31))
    assert code.field.p == 31
    assert isinstance(code.initial, GrsCode)
    assert code.M_matrices[0] == Matrix.identity(2, code.field)
