"""Generalized Reed-Solomon codes and Tamo-Barg locally repairable codes.

Both families are evaluation codes: the symbol at coordinate ``j`` is
``u_j * f(a_j)`` for a message polynomial ``f`` and column multiplier ``u_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    BudgetExceededError,
    DimensionError,
    InconsistentSymbolsError,
    InsufficientGroupError,
    LayoutError,
    ParameterError,
)
from .field import PrimeField
from .matrix import Matrix, _echelon, in_span, mat_inverse, mat_rank
from .poly import EvaluationSet, Polynomial, XGBasis, interpolate, poly_eval, xg_vector

DEFAULT_BUDGET = 10**7


class Codeword:
    """A vector of residues whose coordinates are labelled by evaluation point and group."""

    __slots__ = ("symbols", "field", "points", "groups")

    def __init__(self, symbols: Sequence[int], field: PrimeField, points=None, groups=None):
        p = field.p
        self.symbols = tuple(int(s) % p for s in symbols)
        self.field = field
        self.points = tuple(points) if points is not None else None
        self.groups = tuple(groups) if groups is not None else None
        for labels in (self.points, self.groups):
            if labels is not None and len(labels) != len(self.symbols):
                raise DimensionError("label count does not match codeword length")

    def __repr__(self):
        return f"Codeword({list(self.symbols)}, F{self.field.p})"

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __eq__(self, other):
        if isinstance(other, Codeword):
            return self.field == other.field and self.symbols == other.symbols
        return NotImplemented

    def __hash__(self):
        return hash((self.symbols, self.field.p))

    def position_of(self, point: int) -> int:
        """Coordinate index carrying evaluation point ``point``."""
        return self.points.index(int(point) % self.field.p)


def _check_multipliers(u, n: int, field: PrimeField) -> tuple[int, ...]:
    if u is None:
        return (1,) * n
    u = tuple(int(x) % field.p for x in u)
    if len(u) != n:
        raise DimensionError(f"{len(u)} multipliers for {n} points")
    if 0 in u:
        raise ParameterError("column multipliers must be nonzero")
    return u


class _EvaluationCode:
    points: EvaluationSet
    multipliers: tuple[int, ...]
    field: PrimeField

    @property
    def n(self) -> int:
        return len(self.points)

    def _column(self, j: int) -> list[int]:
        raise NotImplementedError

    def _columns(self) -> list[list[int]]:
        # codes are not mutated after construction, so the columns are cached
        cols = self.__dict__.get("_column_cache")
        if cols is None:
            cols = self.__dict__["_column_cache"] = [self._column(j) for j in range(self.n)]
        return cols

    def generator_matrix(self) -> Matrix:
        """``dim x n`` matrix whose rows span the code."""
        return Matrix.from_columns(self._columns(), self.field)

    def _labels(self):
        return self.points.points, None

    def _word(self, symbols) -> Codeword:
        pts, groups = self._labels()
        return Codeword(symbols, self.field, pts, groups)

    def encode_poly(self, f: Polynomial) -> Codeword:
        p = self.field.p
        return self._word(u * poly_eval(f, a) % p for a, u in zip(self.points, self.multipliers))

    def decode_erasures(self, known: Mapping[int, int]) -> list[int]:
        """Message vector from a ``{coordinate: symbol}`` map with at least ``dim`` entries.

        Surplus coordinates are consistency-checked; disagreement raises
        InconsistentSymbolsError.
        """
        coords = tuple(sorted(known))
        if len(coords) < self.dim:
            raise DimensionError(f"need at least {self.dim} known symbols, got {len(coords)}")
        info, inverse = self._solver(coords)
        p = self.field.p
        msg = inverse.left_mul([known[j] for j in info])
        cols = self._columns()
        for j in coords:
            if sum(m * c for m, c in zip(msg, cols[j])) % p != known[j] % p:
                raise InconsistentSymbolsError("known symbols do not agree with any codeword")
        return msg

    def _solver(self, coords: tuple) -> tuple[list[int], Matrix]:
        """An information set inside ``coords`` and the inverse of its columns, cached."""
        cache = self.__dict__.setdefault("_solver_cache", {})
        if coords not in cache:
            cols = self._columns()
            grid = [[cols[j][t] for j in coords] for t in range(self.dim)]
            _, pivots = _echelon(grid, self.field.p)
            if len(pivots) < self.dim:
                raise DimensionError("known coordinates do not form an information set")
            info = [coords[c] for c in pivots]
            inverse = mat_inverse(Matrix.from_columns([cols[j] for j in info], self.field))
            if len(cache) >= 64:
                cache.clear()
            cache[coords] = (info, inverse)
        return cache[coords]

    def contains(self, word) -> bool:
        symbols = list(word)
        if len(symbols) != self.n:
            return False
        try:
            self.decode_erasures(dict(enumerate(symbols)))
        except InconsistentSymbolsError:
            return False
        return True


class GrsCode(_EvaluationCode):
    """``[n, k]`` GRS code: symbol ``j`` is ``u_j * f(a_j)`` with ``deg f < k``."""

    def __init__(self, points, k: int, multipliers=None, field: PrimeField | None = None):
        if not isinstance(points, EvaluationSet):
            if field is None:
                raise ParameterError("a field is required for a plain point list")
            points = EvaluationSet(points, field)
        self.points = points
        self.field = points.field
        if not 1 <= k <= len(points):
            raise ParameterError(f"need 1 <= k <= n, got k={k}, n={len(points)}")
        self.k = k
        self.multipliers = _check_multipliers(multipliers, len(points), self.field)

    def __repr__(self):
        return f"GrsCode(n={self.n}, k={self.k}, F{self.field.p})"

    @property
    def dim(self) -> int:
        return self.k

    def _column(self, j: int) -> list[int]:
        p = self.field.p
        a, u = self.points[j], self.multipliers[j]
        return [u * pow(a, t, p) % p for t in range(self.k)]

    def message_poly(self, message: Sequence[int]) -> Polynomial:
        if len(message) != self.k:
            raise DimensionError(f"message length {len(message)} != k = {self.k}")
        return Polynomial(message, self.field)

    def encode(self, message: Sequence[int]) -> Codeword:
        return self.encode_poly(self.message_poly(message))

    def decode_erasures(self, known: Mapping[int, int]) -> list[int]:
        """Divide out the multipliers, interpolate on ``k`` points, check the rest."""
        coords = sorted(known)
        if len(coords) < self.k:
            raise DimensionError(f"need at least {self.k} known symbols, got {len(coords)}")
        F = self.field
        pts = [(self.points[j], F.div(known[j], self.multipliers[j])) for j in coords]
        f = interpolate(pts[: self.k], F)
        for a, y in pts[self.k:]:
            if poly_eval(f, a) != y:
                raise InconsistentSymbolsError(f"symbol at point {a} disagrees with the interpolant")
        return list(f.coeffs) + [0] * (self.k - len(f.coeffs))


class LrcCode(_EvaluationCode):
    """Tamo-Barg LRC: groups of size ``r+1`` on which ``g`` is constant.

    Messages are coefficient vectors in the ``{x^t1 g^t2}`` basis, so the
    dimension is ``k * r``.
    """

    def __init__(self, groups, g: Polynomial, k: int, r: int, multipliers=None):
        F = g.field
        groups = [gr if isinstance(gr, EvaluationSet) else EvaluationSet(gr, F) for gr in groups]
        if not groups:
            raise ParameterError("an LRC needs at least one group")
        if any(len(gr) != r + 1 for gr in groups):
            raise ParameterError(f"every group must have r+1 = {r + 1} points")
        if k > len(groups):
            raise ParameterError(f"k = {k} exceeds the number of groups {len(groups)}")
        self.basis = XGBasis(g, r, k)
        report = check_good_polynomial(g, groups)
        if not report.ok:
            raise ParameterError(f"g is not constant on groups {report.failures}")
        if len(set(report.constants)) != len(report.constants):
            raise LayoutError(f"group constants not distinct: {report.constants}")
        self.groups = groups
        self.g, self.k, self.r, self.field = g, k, r, F
        self.points = EvaluationSet([a for gr in groups for a in gr], F)  # also checks disjointness
        self.group_constants = tuple(report.constants)
        self.group_of = tuple(gi for gi, gr in enumerate(groups) for _ in gr)
        self.multipliers = _check_multipliers(multipliers, len(self.points), F)

    def __repr__(self):
        return f"LrcCode(n={self.n}, dim={self.dim}, r={self.r}, F{self.field.p})"

    @property
    def dim(self) -> int:
        return self.k * self.r

    def _labels(self):
        return self.points.points, self.group_of

    def _column(self, j: int) -> list[int]:
        p = self.field.p
        u = self.multipliers[j]
        return [u * v % p for v in xg_vector(self.points[j], self.basis)]

    def group_coords(self, group: int) -> list[int]:
        start = group * (self.r + 1)
        return list(range(start, start + self.r + 1))

    def message_poly(self, message: Sequence[int]) -> Polynomial:
        from .poly import xg_to_monomial

        return xg_to_monomial(list(message), self.basis)

    def encode(self, message: Sequence[int]) -> Codeword:
        if len(message) != self.dim:
            raise DimensionError(f"message length {len(message)} != kr = {self.dim}")
        p = self.field.p
        return self._word(
            u * sum(m * v for m, v in zip(message, xg_vector(a, self.basis))) % p
            for a, u in zip(self.points, self.multipliers)
        )

    def repair(self, word, coord: int, erased=()) -> int:
        """Recover the symbol at ``coord`` from the other ``r`` symbols of its group.

        ``word`` only needs ``__getitem__``; the erased position itself is never read.
        """
        others = [j for j in self.group_coords(self.group_of[coord]) if j != coord]
        blocked = [j for j in others if j in set(erased)]
        if blocked:
            raise InsufficientGroupError(f"group of coordinate {coord} also lost {blocked}")
        F = self.field
        pts = [(self.points[j], F.div(word[j], self.multipliers[j])) for j in others]
        local = interpolate(pts, F)
        return poly_eval(local, self.points[coord]) * self.multipliers[coord] % F.p


def grs_encode(code: GrsCode, message: Sequence[int]) -> Codeword:
    return code.encode(message)


def grs_decode_erasures(code: GrsCode, partial: Mapping[int, int]) -> list[int]:
    return code.decode_erasures(partial)


def lrc_encode(code: LrcCode, message: Sequence[int]) -> Codeword:
    return code.encode(message)


def lrc_repair(code: LrcCode, word, coord: int, erased=()) -> int:
    return code.repair(word, coord, erased)


# ---------------------------------------------------------------------------
# Structural verifiers


@dataclass
class GoodPolynomialReport:
    ok: bool
    constants: list  # g(A_i), or None where g is not constant
    failures: list = dc_field(default_factory=list)


def check_good_polynomial(g: Polynomial, groups) -> GoodPolynomialReport:
    constants, failures = [], []
    for idx, gr in enumerate(groups):
        values = {poly_eval(g, a) for a in gr}
        if len(values) == 1:
            constants.append(values.pop())
        else:
            constants.append(None)
            failures.append(idx)
    return GoodPolynomialReport(not failures, constants, failures)


@dataclass
class LocalityReport:
    ok: bool
    recovering_sets: dict  # coord -> recovering coordinates
    failures: list = dc_field(default_factory=list)


def check_locality(code: LrcCode) -> LocalityReport:
    """Rank test: each column lies in the span of the rest of its group's columns."""
    G = code.generator_matrix()
    cols = G.columns()
    sets, failures = {}, []
    for j in range(code.n):
        rec = [i for i in code.group_coords(code.group_of[j]) if i != j]
        if len(rec) <= code.r and in_span(cols[j], [cols[i] for i in rec], code.field) is not None:
            sets[j] = rec
        else:
            failures.append(j)
    return LocalityReport(not failures, sets, failures)


def generator_rank(code) -> int:
    return mat_rank(code.generator_matrix())


def is_mds(code: GrsCode, max_n: int = 12) -> bool:
    """Exhaustively check that every ``k``-subset of columns is invertible."""
    if code.n > max_n:
        raise BudgetExceededError(f"exhaustive MDS check limited to n <= {max_n}")
    G = code.generator_matrix()
    return all(mat_rank(G.select_columns(S)) == code.k for S in combinations(range(code.n), code.k))


def _as_array(m: Matrix) -> np.ndarray:
    return np.array(m.entries, dtype=np.int64).reshape(m.rows, m.cols)


def min_distance_bruteforce(code, budget: int = DEFAULT_BUDGET, chunk: int = 1 << 15) -> int:
    """Minimum Hamming weight over all nonzero codewords by enumeration.

    Only messages whose first nonzero entry is 1 are enumerated; scaling does
    not change the weight. Raises BudgetExceededError when ``q^dim > budget``.
    """
    p, dim = code.field.p, code.dim
    if p**dim > budget:
        raise BudgetExceededError(f"{p}^{dim} codewords exceed the budget of {budget}")
    G = _as_array(code.generator_matrix())
    best = code.n
    for lead in range(dim):
        # messages (0,..,0,1,*,...,*) with the 1 at position ``lead``
        free = dim - lead - 1
        total = p**free
        base = G[lead]
        rest = G[lead + 1:]
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            digits = np.empty((idx.size, free), dtype=np.int64)
            rem = idx.copy()
            for t in range(free - 1, -1, -1):
                digits[:, t] = rem % p
                rem //= p
            words = (digits @ rest + base) % p if free else (base % p)[None, :]
            weights = np.count_nonzero(words, axis=1)
            best = min(best, int(weights.min()))
    return best


def structural_distance(code, max_n: int = 20) -> int:
    """Distance from ranks: ``n`` minus the largest column set of deficient rank."""
    n, dim = code.n, code.dim
    if n > max_n:
        raise BudgetExceededError(f"structural distance limited to n <= {max_n}")
    G = code.generator_matrix()
    for size in range(n - 1, dim - 2, -1):
        for S in combinations(range(n), size):
            if mat_rank(G.select_columns(S)) < dim:
                return n - size
    return n - dim + 1
