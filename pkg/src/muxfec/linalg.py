"""Dense exact linear algebra over GF(q^2).

Matrices store their entries as integer display codes (see galois) in a
flat row-major tuple; all arithmetic goes through the FieldSpec code
methods.  Gaussian elimination uses first-nonzero pivoting, which is
deterministic and needs no stability considerations in an exact field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .galois import FieldSpec


@dataclass(frozen=True)
class UnitVector:
    dim: int
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.dim:
            raise ValueError(f"unit index {self.index} out of range for dim {self.dim}")

    def as_list(self) -> list[int]:
        v = [0] * self.dim
        v[self.index] = 1
        return v


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    field: FieldSpec
    data: tuple[int, ...]  # row-major display codes

    def __post_init__(self):
        if len(self.data) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        order = self.field.order
        if any(not 0 <= e < order for e in self.data):
            raise ValueError("entry out of field range")

    @staticmethod
    def from_rows(field: FieldSpec, rows: Sequence[Sequence[int]]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return Matrix(r, c, field, tuple(e for row in rows for e in row))

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Matrix":
        return Matrix.from_rows(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> int:
        return self.data[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.data[i * self.cols : (i + 1) * self.cols])

    def col(self, j: int) -> list[int]:
        return [self.data[i * self.cols + j] for i in range(self.rows)]

    def row_list(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def take_cols(self, cols: Iterable[int]) -> "Matrix":
        cols = list(cols)
        data = tuple(self.data[i * self.cols + j] for i in range(self.rows) for j in cols)
        return Matrix(self.rows, len(cols), self.field, data)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        rows, cols = list(rows), list(cols)
        data = tuple(self.data[i * self.cols + j] for i in rows for j in cols)
        return Matrix(len(rows), len(cols), self.field, data)

    def vec_mul(self, vec: Sequence[int]) -> list[int]:
        """Row vector times matrix: vec . M, the encoding map."""
        if len(vec) != self.rows:
            raise ValueError("vector length must equal row count")
        f = self.field
        out = []
        for j in range(self.cols):
            acc = 0
            for i, v in enumerate(vec):
                if v:
                    e = self.data[i * self.cols + j]
                    if e:
                        acc = f.add(acc, f.mul(v, e))
            out.append(acc)
        return out

    def mul_vec(self, vec: Sequence[int]) -> list[int]:
        """Matrix times column vector: M . vec."""
        if len(vec) != self.cols:
            raise ValueError("vector length must equal column count")
        f = self.field
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = 0
            for j, v in enumerate(vec):
                if v:
                    e = self.data[base + j]
                    if e:
                        acc = f.add(acc, f.mul(v, e))
            out.append(acc)
        return out

    def to_dump(self) -> dict:
        """Matrix dump format: JSON-ready dict with integer display codes."""
        return {
            "q": self.field.q,
            "ext_poly": list(self.field.ext_poly()),
            "rows": self.rows,
            "cols": self.cols,
            "entries": list(self.data),
        }

    @staticmethod
    def from_dump(d: dict) -> "Matrix":
        field = FieldSpec(d["q"], d["ext_poly"][0], d["ext_poly"][1])
        return Matrix(d["rows"], d["cols"], field, tuple(d["entries"]))


def _echelon(field: FieldSpec, rows: list[list[int]]) -> int:
    """In-place row echelon reduction; returns the rank."""
    if not rows:
        return 0
    ncols = len(rows[0])
    nrows = len(rows)
    sub, mul, inv = field.sub, field.mul, field.inv
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pe = inv(rows[r][c])
        rows[r] = [mul(pe, x) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [sub(x, mul(f, y)) for x, y in zip(rows[i], prow)]
        r += 1
        if r == nrows:
            break
    return r


def rank(m: Matrix) -> int:
    """Row rank via Gaussian elimination."""
    return _echelon(m.field, m.row_list())


def solve_for_unit(m: Matrix, j: int) -> Optional[list[int]]:
    """Coefficients h with M.h = e_j, or None when e_j is outside the column span.

    Free variables are fixed to zero, so the result is the canonical
    solution of the elimination and reproducible.
    """
    if not 0 <= j < m.rows:
        raise ValueError(f"unit index {j} out of range for {m.rows} rows")
    field = m.field
    # augmented rows [M | e_j]
    rows = [m.row(i) + [1 if i == j else 0] for i in range(m.rows)]
    nc = m.cols
    sub, mul, inv = field.sub, field.mul, field.inv
    pivots: list[tuple[int, int]] = []  # (row, col)
    r = 0
    for c in range(nc):
        pivot = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pe = inv(rows[r][c])
        rows[r] = [mul(pe, x) for x in rows[r]]
        prow = rows[r]
        for i in range(m.rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [sub(x, mul(f, y)) for x, y in zip(rows[i], prow)]
        pivots.append((r, c))
        r += 1
        if r == m.rows:
            break
    # rows without a pivot must have zero right-hand side
    for i in range(r, m.rows):
        if rows[i][nc]:
            return None
    h = [0] * nc
    for i, c in pivots:
        h[c] = rows[i][nc]
    return h


def is_mds(g: Matrix) -> bool:
    """True iff every selection of `rows` columns is linearly independent.

    A 0-row matrix is vacuously MDS (degenerate sub-blocks of short codes).
    """
    if g.rows > g.cols:
        raise ValueError("is_mds requires rows <= cols")
    if g.rows == 0:
        return True
    for sel in itertools.combinations(range(g.cols), g.rows):
        if rank(g.take_cols(sel)) < g.rows:
            return False
    return True


class ColumnSpan:
    """Incrementally grown column space with unit-vector membership queries.

    Basis columns are kept reduced (each pivot row is zeroed in all other
    basis columns), so testing e_j against the span is a single reduction
    pass.  Used by the decoder to process erasure patterns in one sweep
    over time instead of one elimination per (symbol, time) pair.
    """

    def __init__(self, field: FieldSpec, dim: int):
        self.field = field
        self.dim = dim
        self.basis: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def add(self, col: Sequence[int]) -> bool:
        """Append a column; True if it enlarged the span."""
        f = self.field
        sub, mul = f.sub, f.mul
        r = list(col)
        for b, p in zip(self.basis, self.pivots):
            c = r[p]
            if c:
                r = [sub(x, mul(c, y)) for x, y in zip(r, b)]
        p = next((i for i, x in enumerate(r) if x), None)
        if p is None:
            return False
        pinv = f.inv(r[p])
        r = [mul(pinv, x) for x in r]
        for idx, b in enumerate(self.basis):
            c = b[p]
            if c:
                self.basis[idx] = [sub(x, mul(c, y)) for x, y in zip(b, r)]
        self.basis.append(r)
        self.pivots.append(p)
        return True

    def contains_unit(self, j: int) -> bool:
        if len(self.basis) == self.dim:
            return True
        f = self.field
        sub, mul = f.sub, f.mul
        r = [0] * self.dim
        r[j] = 1
        for b, p in zip(self.basis, self.pivots):
            c = r[p]
            if c:
                r = [sub(x, mul(c, y)) for x, y in zip(r, b)]
        return not any(r)
