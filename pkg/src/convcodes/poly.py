"""Univariate polynomials over F_p and the ``x^a g^b`` basis machinery."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionError, DuplicateAbscissaError, FieldMismatchError, NotInSpaceError, ParameterError
from .field import FieldElem, PrimeField


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class Polynomial:
    """Polynomial with residue coefficients; ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are trimmed, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable[int], field: PrimeField):
        p = field.p
        self.coeffs = tuple(_trim([int(c) % p for c in coeffs]))
        self.field = field

    @classmethod
    def constant(cls, c: int, field: PrimeField) -> "Polynomial":
        return cls([c], field)

    @classmethod
    def monomial(cls, degree: int, field: PrimeField, coeff: int = 1) -> "Polynomial":
        return cls([0] * degree + [coeff], field)

    @classmethod
    def x(cls, field: PrimeField) -> "Polynomial":
        return cls([0, 1], field)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)}, F{self.field.p})"

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field.p))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "Polynomial"):
        if other.field != self.field:
            raise FieldMismatchError("polynomials over different fields")

    def __call__(self, x) -> int:
        return poly_eval(self, x)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out, self.field)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.field)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, FieldElem)):
            c = int(other)
            return Polynomial([c * a for a in self.coeffs], self.field)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial([], self.field)
        p = self.field.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % p
        return Polynomial(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        result = Polynomial([1], self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dd = divisor.degree
        lead_inv = F.inv(divisor.coeffs[-1])
        quot = [0] * max(len(rem) - dd, 0)
        for shift in range(len(rem) - dd - 1, -1, -1):
            c = rem[shift + dd] * lead_inv % F.p
            if c:
                quot[shift] = c
                for i, b in enumerate(divisor.coeffs):
                    rem[shift + i] = (rem[shift + i] - c * b) % F.p
        return Polynomial(quot, F), Polynomial(rem[:dd], F)


def poly_eval(f: Polynomial, x) -> int:
    """Horner evaluation; ``x`` may be an int residue or a FieldElem."""
    if isinstance(x, FieldElem):
        if x.field != f.field:
            raise FieldMismatchError("point and polynomial over different fields")
        x = x.value
    p = f.field.p
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % p
    return acc


class EvaluationSet:
    """An ordered tuple of pairwise-distinct field elements."""

    __slots__ = ("points", "field")

    def __init__(self, points: Iterable[int], field: PrimeField):
        pts = tuple(int(a) % field.p for a in points)
        if len(set(pts)) != len(pts):
            raise DuplicateAbscissaError(f"evaluation points not distinct: {pts}")
        self.points = pts
        self.field = field

    def __repr__(self):
        return f"EvaluationSet({list(self.points)}, F{self.field.p})"

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __contains__(self, a):
        return int(a) % self.field.p in self.points

    def __eq__(self, other):
        if isinstance(other, EvaluationSet):
            return self.field == other.field and self.points == other.points
        return NotImplemented

    def __hash__(self):
        return hash((self.points, self.field.p))

    def scaled(self, factor: int) -> "EvaluationSet":
        p = self.field.p
        return EvaluationSet((factor * a % p for a in self.points), self.field)

    def without(self, a: int) -> "EvaluationSet":
        return EvaluationSet((b for b in self.points if b != a), self.field)


def _as_points(S, field: PrimeField | None = None) -> tuple[tuple[int, ...], PrimeField]:
    if isinstance(S, EvaluationSet):
        return S.points, S.field
    if field is None:
        raise ParameterError("a field is required for a plain point list")
    return tuple(int(a) % field.p for a in S), field


def annihilator(S, field: PrimeField | None = None) -> Polynomial:
    """Monic ``prod_{a in S} (x - a)``; the empty product is the constant 1."""
    pts, F = _as_points(S, field)
    out = Polynomial([1], F)
    for a in pts:
        out = out * Polynomial([-a, 1], F)
    return out


def annihilator_value(points: Iterable[int], x: int, field: PrimeField) -> int:
    """``h_S(x)`` evaluated directly as a product."""
    p = field.p
    acc = 1
    for a in points:
        acc = acc * (x - a) % p
    return acc


def interpolate(points: Sequence[tuple], field: PrimeField | None = None) -> Polynomial:
    """Lagrange interpolation through ``(x, y)`` pairs.

    Returns the unique polynomial of degree ``< len(points)``.
    """
    if not points:
        raise ParameterError("interpolation needs at least one point")
    if field is None:
        x0 = points[0][0]
        if not isinstance(x0, FieldElem):
            raise ParameterError("a field is required for plain integer points")
        field = x0.field
    p = field.p
    xs = [int(x) % p for x, _ in points]
    ys = [int(y) % p for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissaError("interpolation abscissae must be distinct")
    full = annihilator(xs, field)
    out = [0] * len(xs)
    for xi, yi in zip(xs, ys):
        if yi == 0:
            continue
        basis, _ = full.divmod(Polynomial([-xi, 1], field))
        scale = yi * field.inv(poly_eval(basis, xi)) % p
        for d, c in enumerate(basis.coeffs):
            out[d] = (out[d] + scale * c) % p
    return Polynomial(out, field)


def compose(outer: Polynomial, inner: Polynomial) -> Polynomial:
    """``outer(inner(x))`` by Horner's rule in the polynomial ring."""
    if outer.field != inner.field:
        raise FieldMismatchError("compose over different fields")
    acc = Polynomial([], outer.field)
    for c in reversed(outer.coeffs):
        acc = acc * inner + Polynomial([c], outer.field)
    return acc


def vandermonde(S, rows: int, field: PrimeField | None = None):
    """The ``rows x |S|`` matrix with entry ``(i, j) = S[j] ** i`` (0-based)."""
    from .matrix import Matrix

    pts, F = _as_points(S, field)
    if rows < 1:
        raise ParameterError("rows must be positive")
    p = F.p
    grid = [[pow(a, i, p) for a in pts] for i in range(rows)]
    return Matrix(grid, F)


class XGBasis:
    """The basis ``{x^t1 * g^t2}`` of V_{k,r}, t1 in [0, r), t2 in [0, k).

    Index ``t2 * r + t1`` holds ``x^t1 g^t2``: g-power major, x-power minor.
    """

    __slots__ = ("g", "r", "k")

    def __init__(self, g: Polynomial, r: int, k: int):
        if r < 1 or k < 1:
            raise ParameterError("r and k must be positive")
        if g.degree != r + 1:
            raise ParameterError(f"g must have degree r+1 = {r + 1}, got {g.degree}")
        self.g, self.r, self.k = g, r, k

    @property
    def field(self) -> PrimeField:
        return self.g.field

    @property
    def dim(self) -> int:
        return self.k * self.r

    def __repr__(self):
        return f"XGBasis(g={list(self.g.coeffs)}, r={self.r}, k={self.k})"

    def __eq__(self, other):
        return isinstance(other, XGBasis) and (self.g, self.r, self.k) == (other.g, other.r, other.k)

    def __hash__(self):
        return hash((self.g, self.r, self.k))

    def with_k(self, k: int) -> "XGBasis":
        return XGBasis(self.g, self.r, k)

    def element(self, index: int) -> Polynomial:
        t2, t1 = divmod(index, self.r)
        return Polynomial.monomial(t1, self.field) * self.g**t2


def xg_vector(point, basis: XGBasis) -> list[int]:
    """Evaluations of every basis element at ``point``, in basis order."""
    F = basis.field
    a = int(point) % F.p
    ga = poly_eval(basis.g, a)
    x_pows = [pow(a, t1, F.p) for t1 in range(basis.r)]
    out = []
    gp = 1
    for _ in range(basis.k):
        out.extend(gp * xp % F.p for xp in x_pows)
        gp = gp * ga % F.p
    return out


def xg_to_monomial(coeffs: Sequence[int], basis: XGBasis) -> Polynomial:
    """``sum coeffs[t2*r + t1] * x^t1 * g^t2`` in monomial form."""
    if len(coeffs) != basis.dim:
        raise DimensionError(f"expected {basis.dim} coefficients, got {len(coeffs)}")
    F, r = basis.field, basis.r
    acc = Polynomial([], F)
    # Horner in g over the blocks of x-powers.
    for t2 in range(basis.k - 1, -1, -1):
        block = Polynomial(coeffs[t2 * r:(t2 + 1) * r], F)
        acc = acc * basis.g + block
    return acc


def monomial_to_xg(f: Polynomial, basis: XGBasis) -> list[int]:
    """Coordinates of ``f`` in the basis; raises NotInSpaceError outside V_{k,r}."""
    if f.field != basis.field:
        raise FieldMismatchError("polynomial and basis over different fields")
    r = basis.r
    out = []
    rest = f
    for _ in range(basis.k):
        rest, rem = rest.divmod(basis.g)
        if rem.degree >= r:
            raise NotInSpaceError(f"g-adic digit of degree {rem.degree} >= r = {r}")
        out.extend(list(rem.coeffs) + [0] * (r - len(rem.coeffs)))
    if not rest.is_zero():
        raise NotInSpaceError("polynomial has g-degree >= k")
    return out
