"""Prime fields F_p and their multiplicative subgroups.

Containers elsewhere in the package (polynomials, matrices, codewords) hold
canonical integer residues in ``[0, p)`` together with a :class:`PrimeField`;
:class:`FieldElem` is the checked scalar type for user-facing arithmetic.
"""

from __future__ import annotations

from functools import cached_property

from .errors import DivisibilityError, FieldMismatchError, ParameterError, SearchLimitError

MAX_MODULUS = 2**31

# Deterministic Miller-Rabin witnesses for n < 2,152,302,898,747.
_MR_BASES = (2, 3, 5, 7, 11)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class PrimeField:
    """The field of integers modulo a prime ``p < 2**31``."""

    def __init__(self, p: int):
        p = int(p)
        if not 2 <= p < MAX_MODULUS:
            raise ParameterError(f"modulus {p} outside [2, 2^31)")
        if not is_prime(p):
            raise ParameterError(f"modulus {p} is not prime")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __call__(self, value: int) -> "FieldElem":
        return FieldElem(value, self)

    # Residue-level arithmetic used by the containers.
    def reduce(self, x: int) -> int:
        return x % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    def inv(self, x: int) -> int:
        """Inverse by the extended Euclidean algorithm."""
        a, m = x % self.p, self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        old_r, r, old_s, s = a, m, 1, 0
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
        return old_s % m

    def div(self, x: int, y: int) -> int:
        return x * self.inv(y) % self.p

    def pow(self, x: int, e: int) -> int:
        return pow(x % self.p, e, self.p)

    def elements(self):
        return range(self.p)

    @cached_property
    def order_factors(self) -> list[int]:
        """Distinct primes dividing ``p - 1``."""
        return prime_factors(self.p - 1)

    def multiplicative_order(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ParameterError("0 has no multiplicative order")
        order = self.p - 1
        for ell in self.order_factors:
            while order % ell == 0 and pow(x, order // ell, self.p) == 1:
                order //= ell
        return order


class FieldElem:
    """An element of a :class:`PrimeField`; immutable."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", int(value) % field.p)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def __repr__(self):
        return f"F{self.field.p}({self.value})"

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine F{self.field.p} and F{other.field.p}")
            return other.value
        if isinstance(other, int):
            return other
        raise TypeError(f"unsupported operand {other!r}")

    def __add__(self, other):
        return FieldElem(self.value + self._coerce(other), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.value - self._coerce(other), self.field)

    def __rsub__(self, other):
        return FieldElem(self._coerce(other) - self.value, self.field)

    def __mul__(self, other):
        return FieldElem(self.value * self._coerce(other), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(-self.value, self.field)

    def __truediv__(self, other):
        return FieldElem(self.value * self.field.inv(self._coerce(other)), self.field)

    def __rtruediv__(self, other):
        return FieldElem(self._coerce(other) * self.field.inv(self.value), self.field)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return FieldElem(pow(self.field.inv(self.value), -exponent, self.field.p), self.field)
        return ff_pow(self, exponent)

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field.inv(self.value), self.field)

    def is_zero(self) -> bool:
        return self.value == 0


def ff_pow(base: FieldElem, exponent: int) -> FieldElem:
    """``base ** exponent`` by square-and-multiply; ``x ** 0 == 1`` for every x."""
    if exponent < 0:
        raise ParameterError("exponent must be non-negative")
    p = base.field.p
    result, b, e = 1, base.value, exponent
    while e:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return FieldElem(result, base.field)


def primitive_root(field: PrimeField) -> FieldElem:
    """Smallest generator of F_p^*."""
    p = field.p
    if p < 3:
        raise ParameterError("primitive_root needs p >= 3")
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in field.order_factors):
            return FieldElem(g, field)
    raise ParameterError(f"no primitive root found for {p}")  # unreachable for prime p


def subgroup_generator(field: PrimeField, order: int) -> FieldElem:
    """Generator of the unique subgroup of F_p^* with ``order`` elements."""
    if order < 1 or (field.p - 1) % order:
        raise DivisibilityError(f"{order} does not divide p - 1 = {field.p - 1}")
    beta = primitive_root(field) if field.p > 2 else FieldElem(1, field)
    return ff_pow(beta, (field.p - 1) // order)


def find_modulus(subgroup_order: int, min_size: int, ceiling: int = MAX_MODULUS) -> PrimeField:
    """Smallest prime ``p >= min_size`` with ``p = 1 (mod subgroup_order)``."""
    m = int(subgroup_order)
    if m < 1 or min_size < 2:
        raise ParameterError("need subgroup_order >= 1 and min_size >= 2")
    start = max(min_size, 2)
    p = start + (1 - start) % m
    while p < ceiling:
        if is_prime(p):
            return PrimeField(p)
        p += m
    raise SearchLimitError(f"no prime = 1 mod {m} in [{min_size}, {ceiling})")
