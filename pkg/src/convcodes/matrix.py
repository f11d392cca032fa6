"""Dense matrices over F_p with Gauss-Jordan elimination."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionError, FieldMismatchError, SingularMatrixError
from .field import PrimeField


class Matrix:
    """Row-major matrix of residues. Treated as immutable once built."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, grid: Sequence[Sequence[int]], field: PrimeField, cols: int | None = None):
        p = field.p
        entries = tuple(tuple(int(v) % p for v in row) for row in grid)
        width = len(entries[0]) if entries else (cols or 0)
        if any(len(row) != width for row in entries):
            raise DimensionError("ragged matrix rows")
        self.rows, self.cols = len(entries), width
        self.entries = entries
        self.field = field

    @classmethod
    def zeros(cls, rows: int, cols: int, field: PrimeField) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], field, cols=cols)

    @classmethod
    def identity(cls, n: int, field: PrimeField) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], field)

    @classmethod
    def diag(cls, values: Sequence[int], field: PrimeField) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], field: PrimeField) -> "Matrix":
        if not columns:
            raise DimensionError("need at least one column")
        return cls([list(row) for row in zip(*columns)], field)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.entries]}, F{self.field.p})"

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.field == other.field and self.shape == other.shape and self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash((self.entries, self.field.p))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i])

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.entries]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)], self.field, cols=self.rows)

    def select_columns(self, idx: Iterable[int]) -> "Matrix":
        idx = list(idx)
        return Matrix([[r[j] for j in idx] for r in self.entries], self.field, cols=len(idx))

    def with_entry(self, i: int, j: int, value: int) -> "Matrix":
        grid = self.tolist()
        grid[i][j] = value
        return Matrix(grid, self.field)

    def __matmul__(self, other):
        p = self.field.p
        if isinstance(other, Matrix):
            if other.field != self.field:
                raise FieldMismatchError("matrices over different fields")
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Matrix(
                [[sum(a * b for a, b in zip(r, c)) % p for c in cols] for r in self.entries],
                self.field,
                cols=other.cols,
            )
        vec = list(other)
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} vs {self.cols} columns")
        return [sum(a * b for a, b in zip(r, vec)) % p for r in self.entries]

    def left_mul(self, vec: Sequence[int]) -> list[int]:
        """Row vector times matrix: ``vec @ self``."""
        if len(vec) != self.rows:
            raise DimensionError(f"vector of length {len(vec)} vs {self.rows} rows")
        p = self.field.p
        out = [0] * self.cols
        for v, r in zip(vec, self.entries):
            if v:
                for j, a in enumerate(r):
                    out[j] += v * a
        return [x % p for x in out]

    def scaled(self, c: int) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.entries], self.field, cols=self.cols)


def _echelon(grid: list[list[int]], p: int, ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form in place; pivots taken as first nonzero per column.

    Only the first ``ncols`` columns are eliminated on (all by default).
    """
    if not grid:
        return grid, []
    width = len(grid[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(grid)) if grid[i][c]), None)
        if piv is None:
            continue
        grid[r], grid[piv] = grid[piv], grid[r]
        inv = pow(grid[r][c], p - 2, p)
        grid[r] = [v * inv % p for v in grid[r]]
        for i in range(len(grid)):
            if i != r and grid[i][c]:
                f = grid[i][c]
                grid[i] = [(a - f * b) % p for a, b in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
        if r == len(grid):
            break
    return grid, pivots


def mat_rank(m: Matrix) -> int:
    _, pivots = _echelon(m.tolist(), m.field.p)
    return len(pivots)


def mat_inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; SingularMatrixError when rank < n."""
    n = m.rows
    if m.cols != n:
        raise DimensionError(f"cannot invert non-square {m.shape} matrix")
    p = m.field.p
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(m.entries)]
    aug, pivots = _echelon(aug, p, ncols=n)
    if len(pivots) < n:
        raise SingularMatrixError(f"matrix has rank {len(pivots)} < {n}")
    return Matrix([r[n:] for r in aug], m.field)


def in_span(v: Sequence[int], basis: Sequence[Sequence[int]], field: PrimeField) -> list[int] | None:
    """Coefficients ``c`` with ``sum c_i * basis[i] == v``, or ``None`` if no such ``c``.

    Free coefficients (dependent basis) are set to zero.
    """
    n = len(v)
    if any(len(b) != n for b in basis):
        raise DimensionError("basis vectors and target differ in length")
    p = field.p
    if not basis:
        return [] if all(x % p == 0 for x in v) else None
    m = len(basis)
    # Augmented system: columns are basis vectors, last column is v.
    aug = [[basis[j][i] % p for j in range(m)] + [v[i] % p] for i in range(n)]
    aug, pivots = _echelon(aug, p, ncols=m)
    for row in aug[len(pivots):]:
        if row[m]:
            return None
    coeffs = [0] * m
    for r, c in enumerate(pivots):
        coeffs[c] = aug[r][m]
    return coeffs


def solve_left(m: Matrix, target: Sequence[int]) -> list[int] | None:
    """A row vector ``x`` with ``x @ m == target``, or ``None``."""
    return in_span(target, m.entries, m.field)
