import random

import pytest
import sympy
from hypothesis import given, strategies as st

from convcodes.errors import DivisibilityError, FieldMismatchError, ParameterError, SearchLimitError
from convcodes.field import (
    FieldElem,
    PrimeField,
    divisors,
    ff_pow,
    find_modulus,
    is_prime,
    primitive_root,
    subgroup_generator,
)

F19 = PrimeField(19)


def test_is_prime_matches_sympy_on_small_range():
    assert [n for n in range(2000) if is_prime(n)] == list(sympy.primerange(0, 2000))


@pytest.mark.parametrize("n", [2**31 - 1, 2147483629, 1000000007, 999999937])
def test_is_prime_large(n):
    assert is_prime(n) == sympy.isprime(n)


def test_is_prime_rejects_strong_pseudoprimes():
    # strong pseudoprimes to small bases
    for n in (2047, 1373653, 25326001, 3215031751):
        assert not is_prime(n)
        assert is_prime(n) == sympy.isprime(n)


def test_field_rejects_composite_and_out_of_range():
    with pytest.raises(ParameterError):
        PrimeField(21)
    with pytest.raises(ParameterError):
        PrimeField(2**31 + 11)
    with pytest.raises(ParameterError):
        PrimeField(1)


def test_ff_pow_table_values():
    two = F19(2)
    assert ff_pow(two, 5) == 13
    assert ff_pow(two, 13) == 3
    assert ff_pow(F19(0), 0) == 1
    assert ff_pow(F19(7), 0) == 1


def test_ff_pow_negative_exponent_rejected():
    with pytest.raises(ParameterError):
        ff_pow(F19(2), -1)


def test_power_table_matches_pow():
    # the full 2^x table over F_19
    assert [ff_pow(F19(2), x).value for x in range(18)] == [pow(2, x, 19) for x in range(18)]


def test_primitive_root_known_values():
    assert primitive_root(F19) == 2
    assert primitive_root(PrimeField(3)) == 2
    assert primitive_root(PrimeField(7)) == 3


def test_primitive_root_matches_sympy():
    for p in sympy.primerange(3, 600):
        assert primitive_root(PrimeField(p)).value == sympy.primitive_root(p)


def test_subgroup_generator():
    assert subgroup_generator(F19, 6) == 8
    assert subgroup_generator(F19, 18) == 2
    assert subgroup_generator(F19, 9) == 4
    with pytest.raises(DivisibilityError):
        subgroup_generator(F19, 4)


@pytest.mark.parametrize("p", [19, 31, 73, 101, 181])
def test_subgroup_generator_has_exact_order(p):
    F = PrimeField(p)
    for m in divisors(p - 1):
        a = subgroup_generator(F, m)
        assert ff_pow(a, m) == 1
        assert all(ff_pow(a, d) != 1 for d in divisors(m) if d < m)
        assert sympy.n_order(a.value, p) == m


def test_find_modulus():
    assert find_modulus(6, 19).p == 19
    assert find_modulus(6, 20).p == 31
    assert find_modulus(12, 2).p == 13
    with pytest.raises(SearchLimitError):
        find_modulus(6, 20, ceiling=31)


def test_find_modulus_brute_force_oracle():
    for m in range(1, 30):
        for lo in (2, 50, 97):
            want = next(q for q in sympy.primerange(lo, 10**5) if (q - 1) % m == 0)
            assert find_modulus(m, lo).p == want


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        F19(3) + PrimeField(23)(3)


def test_elements_are_immutable_and_reduced():
    x = F19(-1)
    assert x.value == 18
    with pytest.raises(AttributeError):
        x.value = 3


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        F19(0).inverse()


@given(st.integers(min_value=1, max_value=18))
def test_inverse_property(v):
    x = F19(v)
    assert x * x.inverse() == 1
    assert x / x == 1


@given(st.sampled_from([19, 31, 101, 65537, 2**31 - 1]), st.integers(min_value=1))
def test_fermat(p, v):
    F = PrimeField(p)
    x = F(v)
    if not x.is_zero():
        assert ff_pow(x, p - 1) == 1


def test_field_arithmetic_against_integers():
    rng = random.Random(3)
    F = PrimeField(101)
    for _ in range(200):
        a, b = rng.randrange(101), rng.randrange(1, 101)
        assert (F(a) + b).value == (a + b) % 101
        assert (F(a) - b).value == (a - b) % 101
        assert (b - F(a)).value == (b - a) % 101
        assert (F(a) * b).value == a * b % 101
        assert (F(a) / b).value == a * pow(b, -1, 101) % 101
        assert (F(b) ** -2).value == pow(b, -2, 101)
