"""Dense exact matrices with reduced row echelon form, kernels and solving.

Matrices are immutable-by-convention row-major grids of field elements.
Everything downstream (syzygies, Hom spaces, certificates) reduces to the
three operations ``rref``, ``kernel_basis`` and ``solve``; they are kept
dense and exact, which is plenty for the module dimensions in scope.

Pivot selection over the rationals prefers entries with denominator 1 and
small numerator, which keeps intermediate fractions from growing.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .fields import PrimeField


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows: int, cols: int, data: List[list]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"ragged data for {rows}x{cols} matrix")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        one = field.one
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def from_rows(cls, field, rows: Sequence[Sequence]) -> "Matrix":
        data = [[field(x) for x in row] for row in rows]
        ncols = len(data[0]) if data else 0
        return cls(field, len(data), ncols, data)

    @classmethod
    def column(cls, field, entries: Sequence) -> "Matrix":
        return cls(field, len(entries), 1, [[field(x)] for x in entries])

    # -- basic algebra -----------------------------------------------------

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [row[:] for row in self.data])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        if isinstance(self.field, PrimeField):
            p = self.field.p
            data = [
                [(a + b) % p for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ]
        else:
            data = [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ]
        return Matrix(self.field, self.rows, self.cols, data)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        if isinstance(self.field, PrimeField):
            p = self.field.p
            data = [
                [(a - b) % p for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ]
        else:
            data = [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ]
        return Matrix(self.field, self.rows, self.cols, data)

    def __neg__(self) -> "Matrix":
        return self.scale(-self.field.one)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        if isinstance(self.field, PrimeField):
            p = self.field.p
            data = [[(c * x) % p for x in row] for row in self.data]
        else:
            data = [[c * x for x in row] for row in self.data]
        return Matrix(self.field, self.rows, self.cols, data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = Matrix.zeros(self.field, self.rows, other.cols)
        zero = self.field.zero
        bt = list(zip(*other.data)) if other.rows else [()] * other.cols
        modp = self.field.p if isinstance(self.field, PrimeField) else None
        for i, arow in enumerate(self.data):
            orow = out.data[i]
            for j in range(other.cols):
                bcol = bt[j]
                acc = zero
                for a, b in zip(arow, bcol):
                    if a and b:
                        acc += a * b
                orow[j] = acc % modp if modp else acc
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows, [list(r) for r in zip(*self.data)] if self.data and self.cols else [[] for _ in range(self.cols)])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      [r1 + r2 for r1, r2 in zip(self.data, other.data)])

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      [row[:] for row in self.data] + [row[:] for row in other.data])

    def submatrix_cols(self, cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, self.rows, len(cols),
                      [[row[j] for j in cols] for row in self.data])

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # -- elimination -------------------------------------------------------

    def rref(self) -> Tuple["Matrix", List[int], int]:
        """Reduced row echelon form; returns (matrix, pivot columns, rank)."""
        work = [row[:] for row in self.data]
        pivots = _rref_inplace(work, self.field)
        return Matrix(self.field, self.rows, self.cols, work), pivots, len(pivots)

    def rank(self) -> int:
        work = [row[:] for row in self.data]
        return len(_rref_inplace(work, self.field))

    def kernel_basis(self) -> "Matrix":
        """Matrix whose columns form a basis of the null space of self."""
        red, pivots, _rank = self.rref()
        field = self.field
        free = [j for j in range(self.cols) if j not in set(pivots)]
        out = Matrix.zeros(field, self.cols, len(free))
        one = field.one
        for k, j in enumerate(free):
            out.data[j][k] = one
            for i, pj in enumerate(pivots):
                val = red.data[i][j]
                if val:
                    out.data[pj][k] = -val if not isinstance(field, PrimeField) else (-val) % field.p
        return out

    def solve(self, b: "Matrix") -> Optional["Matrix"]:
        """One solution X of self @ X = b, or None when b is inconsistent."""
        if b.rows != self.rows:
            raise ValueError("right-hand side row count mismatch")
        aug = self.hstack(b)
        red, pivots, _ = aug.rref()
        field = self.field
        # Any pivot inside the appended block certifies inconsistency.
        if any(p >= self.cols for p in pivots):
            return None
        x = Matrix.zeros(field, self.cols, b.cols)
        for i, pj in enumerate(pivots):
            x.data[pj] = red.data[i][self.cols:]
        return x

    def inverse(self) -> Optional["Matrix"]:
        if self.rows != self.cols:
            return None
        sol = self.solve(Matrix.identity(self.field, self.rows))
        if sol is None:
            return None
        # A consistent square solve may still be rank deficient.
        if (self @ sol) != Matrix.identity(self.field, self.rows):
            return None
        return sol

    def image_basis(self) -> "Matrix":
        """Basis of the column space: the pivot columns of self."""
        _, pivots, _ = self.rref()
        # rref pivots are column indices of independent columns.
        return self.submatrix_cols(pivots)


def _rref_inplace(work: List[list], field) -> List[int]:
    """Gauss-Jordan elimination in place; returns the pivot column list."""
    if not work:
        return []
    nrows = len(work)
    ncols = len(work[0])
    if isinstance(field, PrimeField):
        return _rref_inplace_p(work, nrows, ncols, field.p)
    return _rref_inplace_q(work, nrows, ncols)


def _rref_inplace_q(work: List[list], nrows: int, ncols: int) -> List[int]:
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # Prefer integral pivots with small magnitude to limit fraction growth.
        best = -1
        best_key = None
        for i in range(r, nrows):
            v = work[i][c]
            if v:
                key = (v.denominator != 1, abs(v.numerator) + abs(v.denominator))
                if best < 0 or key < best_key:
                    best, best_key = i, key
                    if key == (False, 2):  # a unit entry; cannot do better
                        break
        if best < 0:
            continue
        if best != r:
            work[r], work[best] = work[best], work[r]
        row = work[r]
        inv = 1 / row[c]
        if inv != 1:
            work[r] = row = [x * inv for x in row]
        for i in range(nrows):
            if i == r:
                continue
            f = work[i][c]
            if f:
                other = work[i]
                work[i] = [a - f * b for a, b in zip(other, row)]
        pivots.append(c)
        r += 1
    return pivots


def _rref_inplace_p(work: List[list], nrows: int, ncols: int, p: int) -> List[int]:
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = -1
        for i in range(r, nrows):
            if work[i][c] % p:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        if pivot_row != r:
            work[r], work[pivot_row] = work[pivot_row], work[r]
        row = work[r]
        inv = pow(row[c], p - 2, p)
        if inv != 1:
            work[r] = row = [(x * inv) % p for x in row]
        for i in range(nrows):
            if i == r:
                continue
            f = work[i][c] % p
            if f:
                other = work[i]
                work[i] = [(a - f * b) % p for a, b in zip(other, row)]
        pivots.append(c)
        r += 1
    return pivots


def block_diag(field, blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = Matrix.zeros(field, rows, cols)
    ro = co = 0
    for b in blocks:
        for i in range(b.rows):
            out.data[ro + i][co:co + b.cols] = list(b.data[i])
        ro += b.rows
        co += b.cols
    return out
