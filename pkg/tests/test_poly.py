import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from convcodes.errors import DimensionError, DuplicateAbscissaError, FieldMismatchError, NotInSpaceError, ParameterError
from convcodes.field import PrimeField
from convcodes.poly import (
    EvaluationSet,
    Polynomial,
    XGBasis,
    annihilator,
    annihilator_value,
    compose,
    interpolate,
    monomial_to_xg,
    poly_eval,
    vandermonde,
    xg_to_monomial,
    xg_vector,
)

F19 = PrimeField(19)
X = sympy.symbols("x")


def sympy_coeffs(expr, p):
    """Ascending residues of ``expr`` reduced mod p (independent oracle)."""
    out = [int(c) % p for c in reversed(sympy.Poly(expr, X, modulus=p).all_coeffs())]
    while out and out[-1] == 0:
        out.pop()
    return out


def test_annihilator_known_value():
    assert annihilator([4, 9], F19).coeffs == (17, 6, 1)


def test_annihilator_empty_is_one():
    assert annihilator([], F19).coeffs == (1,)


@pytest.mark.parametrize("pts", [[1, 7, 11], [8, 18, 12], [2, 3, 5, 7, 11, 13]])
def test_annihilator_matches_sympy(pts):
    expr = sympy.prod([X - a for a in pts])
    assert list(annihilator(pts, F19).coeffs) == sympy_coeffs(expr, 19)


def test_annihilator_value_agrees_with_polynomial():
    pts = [1, 8, 7, 18]
    h = annihilator(pts, F19)
    for x in range(19):
        assert annihilator_value(pts, x, F19) == h(x)


def test_x_cubed_is_constant_on_cosets():
    # the good polynomial x^3 on Example 2's local groups
    g = Polynomial.monomial(3, F19)
    for grp, c in (([1, 7, 11], 1), ([8, 18, 12], 18), ([4, 9, 6], 7)):
        assert {g(a) for a in grp} == {c}


def test_poly_arithmetic_against_sympy():
    rng = random.Random(0)
    for _ in range(50):
        a = [rng.randrange(19) for _ in range(rng.randint(0, 6))]
        b = [rng.randrange(19) for _ in range(rng.randint(1, 5))]
        if not any(b):
            b[-1] = 1
        pa, pb = Polynomial(a, F19), Polynomial(b, F19)
        ea = sum(c * X**i for i, c in enumerate(a))
        eb = sum(c * X**i for i, c in enumerate(b))
        assert list((pa * pb).coeffs) == sympy_coeffs(ea * eb, 19)
        assert list((pa + pb).coeffs) == sympy_coeffs(ea + eb, 19)
        q, r = pa.divmod(pb)
        sq, sr = sympy.div(sympy.Poly(ea, X, modulus=19), sympy.Poly(eb, X, modulus=19))
        assert list(q.coeffs) == sympy_coeffs(sq.as_expr(), 19)
        assert list(r.coeffs) == sympy_coeffs(sr.as_expr(), 19)


def test_zero_polynomial():
    z = Polynomial([0, 0], F19)
    assert z.is_zero() and z.degree == -1 and z(5) == 0


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Polynomial([1], F19).divmod(Polynomial([], F19))


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        Polynomial([1], F19) + Polynomial([1], PrimeField(23))


def test_compose():
    # (x^2 + 1) o (x + 3) = x^2 + 6x + 10
    outer = Polynomial([1, 0, 1], F19)
    inner = Polynomial([3, 1], F19)
    assert compose(outer, inner).coeffs == (10, 6, 1)
    # x^3 o x^2 = x^6
    assert compose(Polynomial.monomial(3, F19), Polynomial.monomial(2, F19)) == Polynomial.monomial(6, F19)


def test_compose_against_sympy():
    rng = random.Random(1)
    for _ in range(20):
        a = [rng.randrange(19) for _ in range(4)]
        b = [rng.randrange(19) for _ in range(3)]
        ea = sum(c * X**i for i, c in enumerate(a))
        eb = sum(c * X**i for i, c in enumerate(b))
        got = compose(Polynomial(a, F19), Polynomial(b, F19))
        assert list(got.coeffs) == sympy_coeffs(ea.subs(X, eb), 19)


def test_interpolate_recovers_polynomial():
    f = Polynomial([3, 0, 5, 1], F19)
    pts = [(a, f(a)) for a in (2, 16, 14, 17)]
    assert interpolate(pts, F19) == f


def test_interpolate_rejects_duplicates():
    with pytest.raises(DuplicateAbscissaError):
        interpolate([(1, 2), (1, 3)], F19)


def test_interpolate_needs_field_for_ints():
    with pytest.raises(ParameterError):
        interpolate([(1, 2)])
    assert interpolate([(F19(1), 2)]).coeffs == (2,)


@settings(max_examples=50)
@given(st.lists(st.integers(0, 100), min_size=1, max_size=8))
def test_interpolate_eval_roundtrip(coeffs):
    F = PrimeField(101)
    f = Polynomial(coeffs, F)
    xs = random.Random(len(coeffs)).sample(range(101), len(coeffs))
    assert interpolate([(x, f(x)) for x in xs], F) == f


def test_poly_eval_accepts_field_elements():
    f = Polynomial([1, 1], F19)
    assert poly_eval(f, F19(18)) == 0
    with pytest.raises(FieldMismatchError):
        poly_eval(f, PrimeField(23)(1))


def test_evaluation_set():
    S = EvaluationSet([1, 8, 7, 18], F19)
    assert S.scaled(4).points == (4, 13, 9, 15)
    assert S.without(8).points == (1, 7, 18)
    assert 7 in S and 2 not in S
    with pytest.raises(DuplicateAbscissaError):
        EvaluationSet([1, 20], F19)


def test_vandermonde():
    V = vandermonde([2, 3], 3, F19)
    assert V.tolist() == [[1, 1], [2, 3], [4, 9]]


def test_xg_vector_frozen():
    # x^a g^b at point 2 with g = x^3, r = 2, k = 2: (1, 2, 8, 16)
    basis = XGBasis(Polynomial.monomial(3, F19), 2, 2)
    assert xg_vector(2, basis) == [1, 2, 8, 16]


def test_xg_basis_ordering():
    basis = XGBasis(Polynomial.monomial(3, F19), 2, 2)
    assert [basis.element(i).coeffs for i in range(4)] == [(1,), (0, 1), (0, 0, 0, 1), (0, 0, 0, 0, 1)]


def test_xg_basis_rejects_wrong_degree():
    with pytest.raises(ParameterError):
        XGBasis(Polynomial.monomial(2, F19), 2, 2)


def test_xg_roundtrip():
    rng = random.Random(2)
    g = Polynomial([5, 0, 3, 1], F19)
    basis = XGBasis(g, 2, 3)
    for _ in range(30):
        c = [rng.randrange(19) for _ in range(basis.dim)]
        f = xg_to_monomial(c, basis)
        assert monomial_to_xg(f, basis) == c
        for a in range(19):
            assert f(a) == sum(ci * vi for ci, vi in zip(c, xg_vector(a, basis))) % 19


def test_monomial_to_xg_rejects_outside_space():
    basis = XGBasis(Polynomial.monomial(3, F19), 2, 2)
    with pytest.raises(NotInSpaceError):
        monomial_to_xg(Polynomial.monomial(2, F19), basis)


def test_xg_to_monomial_length_check():
    basis = XGBasis(Polynomial.monomial(3, F19), 2, 2)
    with pytest.raises(DimensionError):
        xg_to_monomial([1, 2, 3], basis)
