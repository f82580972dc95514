"""Exact dense linear algebra over the rationals.

All entries are `fractions.Fraction`, so ranks, kernels and solutions are
computed exactly and every operation is deterministic: identical inputs give
identical outputs, bit for bit.  Dimensions here are desk scale, so the
implementation favours clarity over asymptotics (dense storage, plain
Gauss-Jordan elimination, no pivot-size heuristics).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value) -> Fraction:
    """Coerce an int/Fraction/rational-string into a Fraction.

    Floats are rejected: exactness is the whole point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected a rational entry, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# vectors (plain tuples of Fraction)
# ---------------------------------------------------------------------------

def vec(values) -> tuple[Fraction, ...]:
    return tuple(rat(v) for v in values)


def vec_zero(n: int) -> tuple[Fraction, ...]:
    return (ZERO,) * n


def vec_add(u, v) -> tuple[Fraction, ...]:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v) -> tuple[Fraction, ...]:
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u) -> tuple[Fraction, ...]:
    return tuple(-a for a in u)


def vec_scale(c, u) -> tuple[Fraction, ...]:
    return tuple(c * a for a in u)


def is_zero_vec(u) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with row-major Fraction entries."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        ent = tuple(rat(e) for e in self.entries)
        if len(ent) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(ent)}"
            )
        object.__setattr__(self, "entries", ent)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [tuple(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = 0 if cols is None else cols
        flat = tuple(e for r in rows for e in r)
        return cls(len(rows), width, flat)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [tuple(c) for c in columns]
        if columns:
            height = len(columns[0])
            if any(len(c) != height for c in columns):
                raise ValueError("ragged columns")
        else:
            height = 0 if rows is None else rows
        flat = tuple(columns[j][i] for i in range(height) for j in range(len(columns)))
        return cls(height, len(columns), flat)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    # -- access -------------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(self.row(i) for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __rmul__(self, scalar) -> "Matrix":
        c = rat(scalar)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum((r[k] * other.entries[k * other.cols + j]
                                for k in range(self.cols)), ZERO))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Matrix times coordinate vector."""
        if len(vector) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((self.entries[i * self.cols + k] * vector[k]
                 for k in range(self.cols) if vector[k]), ZERO)
            for i in range(self.rows)
        )

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j]
                            for j in range(self.cols) for i in range(self.rows)))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return Matrix.from_rows(rows, cols=self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def rank(self) -> int:
        return len(rref(self)[1])

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "Matrix":
        rows = [[self.entries[i * self.cols + j] for j in col_indices] for i in row_indices]
        return Matrix.from_rows(rows, cols=len(col_indices))

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    top = a.hstack(Matrix.zero(a.rows, b.cols))
    bottom = Matrix.zero(b.rows, a.cols).hstack(b)
    return top.vstack(bottom)


@dataclass(frozen=True)
class Subspace:
    """A subspace given by an explicit linearly independent basis.

    Basis vectors are columns, stored as coordinate tuples of length
    ``ambient_dim``.
    """

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        vecs = tuple(vec(v) for v in self.basis)
        for v in vecs:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector length != ambient dimension")
        object.__setattr__(self, "basis", vecs)
        if vecs and Matrix.from_columns(vecs, rows=self.ambient_dim).rank() != len(vecs):
            raise ValueError("basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        return Matrix.from_columns(self.basis, rows=self.ambient_dim)


# ---------------------------------------------------------------------------
# elimination and everything built on it
# ---------------------------------------------------------------------------

def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the sorted pivot-column list.

    Pivoting picks the first nonzero entry in each column, so the result is
    deterministic.
    """
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = None
        for i in range(r, m.rows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Matrix.from_rows(rows, cols=m.cols), tuple(pivots)


def kernel_basis(m: Matrix) -> Subspace:
    """Null-space basis built from the rref free columns, in increasing order."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r, free]
        basis.append(tuple(v))
    return Subspace(m.cols, tuple(basis))


def image_basis(m: Matrix) -> Subspace:
    """Column-space basis: the original columns at the pivot positions."""
    _, pivots = rref(m)
    return Subspace(m.rows, tuple(m.column(p) for p in pivots))


def complement(s: Subspace) -> Subspace:
    """Deterministic complement of a subspace.

    Extends the given basis by standard basis vectors chosen greedily in
    increasing index order, and returns only the added vectors.
    """
    columns = list(s.basis)
    added = []
    current_rank = len(columns)
    for i in range(s.ambient_dim):
        e = tuple(ONE if k == i else ZERO for k in range(s.ambient_dim))
        candidate = columns + [e]
        if Matrix.from_columns(candidate, rows=s.ambient_dim).rank() == current_rank + 1:
            columns = candidate
            added.append(e)
            current_rank += 1
        if current_rank == s.ambient_dim:
            break
    return Subspace(s.ambient_dim, tuple(added))


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """One exact solution of a @ x = b, or None if inconsistent.

    Free variables are set to zero, which pins the solution uniquely.
    ``b`` may have several columns; they are solved simultaneously.
    """
    if a.rows != b.rows:
        raise ValueError("a and b must have the same number of rows")
    red, pivots = rref(a.hstack(b))
    if any(p >= a.cols for p in pivots):
        return None
    x = [[ZERO] * b.cols for _ in range(a.cols)]
    for r, pc in enumerate(pivots):
        for j in range(b.cols):
            x[pc][j] = red[r, a.cols + j]
    return Matrix.from_rows(x, cols=b.cols)


def invert(m: Matrix) -> Matrix | None:
    """Exact inverse of a square matrix, or None if singular."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    return solve(m, Matrix.identity(m.rows))
