"""Dense exact matrices and the elimination routines built on them."""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .exactfield import FieldContext, FieldError, FieldScalar

__all__ = ["ExactMatrix", "rank", "rref", "kernel_basis", "solve_in_span"]


def _entry_in(ctx: FieldContext, value):
    raw = ctx.raw(value)
    return raw if ctx.kind != "cyclotomic" else FieldScalar(ctx, raw)


class ExactMatrix:
    """A dense ``rows x cols`` matrix over a single exact field."""

    __slots__ = ("ctx", "data")

    def __init__(self, ctx: FieldContext, data: np.ndarray):
        if data.ndim != 2:
            raise ValueError("matrix data must be 2-dimensional")
        self.ctx = ctx
        self.data = data

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows: Sequence[Sequence], cols: Optional[int] = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        m = cls.zeros(ctx, len(rows), cols)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                m.data[i, j] = _entry_in(ctx, v)
        return m

    @classmethod
    def from_columns(cls, ctx: FieldContext, columns: Sequence[Sequence], rows: int):
        m = cls.zeros(ctx, rows, len(columns))
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("column length mismatch")
            for i, v in enumerate(col):
                m.data[i, j] = _entry_in(ctx, v)
        return m

    @classmethod
    def zeros(cls, ctx: FieldContext, rows: int, cols: int):
        if ctx.kind == "Fp":
            return cls(ctx, np.zeros((rows, cols), dtype=np.int64))
        zero = _entry_in(ctx, 0)
        data = np.empty((rows, cols), dtype=object)
        data.fill(zero)
        return cls(ctx, data)

    @classmethod
    def identity(cls, ctx: FieldContext, n: int):
        m = cls.zeros(ctx, n, n)
        one = _entry_in(ctx, 1)
        for i in range(n):
            m.data[i, i] = one
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __getitem__(self, idx) -> FieldScalar:
        v = self.data[idx]
        if isinstance(v, np.ndarray):
            raise TypeError("use .data for slicing")
        if self.ctx.kind == "cyclotomic":
            return v
        return FieldScalar(self.ctx, int(v) if self.ctx.kind == "Fp" else v)

    def __setitem__(self, idx, value):
        self.data[idx] = _entry_in(self.ctx, value)

    def column(self, j: int) -> list[FieldScalar]:
        return [self[i, j] for i in range(self.rows)]

    def row(self, i: int) -> list[FieldScalar]:
        return [self[i, j] for j in range(self.cols)]

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.ctx, self.data.copy())

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.ctx, self.data.T.copy())

    transpose = T.fget

    def is_zero(self) -> bool:
        if self.ctx.kind == "Fp":
            return not self.data.any()
        return all(v == 0 for v in self.data.flat)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.ctx != other.ctx or self.shape != other.shape:
            return False
        return bool(np.all(self.data == other.data))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ctx != other.ctx:
            raise FieldError("context mismatch")
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.shape} @ {other.shape}")
        if self.ctx.kind == "Fp":
            return ExactMatrix(self.ctx, _kernels.matmul_mod_p(self.data, other.data, self.ctx.p))
        if self.cols == 0:
            return ExactMatrix.zeros(self.ctx, self.rows, other.cols)
        return ExactMatrix(self.ctx, self.data.dot(other.data))

    def apply(self, vec: Sequence) -> list[FieldScalar]:
        """Matrix-vector product with a list of scalars."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        col = ExactMatrix.from_columns(self.ctx, [vec], self.cols)
        return (self @ col).column(0)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return ExactMatrix(self.ctx, np.concatenate([self.data, other.data], axis=1))

    def __repr__(self):
        return f"ExactMatrix({self.ctx}, {self.rows}x{self.cols})"

    def tolist(self) -> list[list[str]]:
        return [[str(self[i, j]) for j in range(self.cols)] for i in range(self.rows)]


def _reduce(m: ExactMatrix, full: bool) -> tuple[np.ndarray, int, np.ndarray]:
    a = m.data.copy()
    if m.ctx.kind == "Fp":
        r, piv = _kernels.rref_mod_p(a, m.ctx.p, full)
    else:
        r, piv = _kernels.rref_object(a, full)
    return a, r, piv


def rank(m: ExactMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    # eliminate along the shorter side
    src = m.T if m.rows > m.cols and m.ctx.kind != "Fp" else m
    _, r, _ = _reduce(src, full=False)
    return r


def rref(m: ExactMatrix) -> ExactMatrix:
    a, _, _ = _reduce(m, full=True)
    return ExactMatrix(m.ctx, a)


def rref_with_pivots(m: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    a, r, piv = _reduce(m, full=True)
    return ExactMatrix(m.ctx, a), [int(c) for c in piv]


def kernel_basis(m: ExactMatrix) -> list[list[FieldScalar]]:
    """Basis of {v : m v = 0}, one vector per free column."""
    red, piv = rref_with_pivots(m)
    ctx = m.ctx
    pivset = set(piv)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [ctx.zero] * m.cols
        v[free] = ctx.one
        for row, pc in enumerate(piv):
            v[pc] = -red[row, free]
        basis.append(v)
    return basis


def solve_in_span(m: ExactMatrix, vec: Sequence) -> Optional[list[FieldScalar]]:
    """Coordinates c with ``m c = vec``, or None when vec is not in the column span.

    When the columns are dependent the free coordinates are set to zero.
    """
    if len(vec) != m.rows:
        raise ValueError(f"vector length {len(vec)} != {m.rows} rows")
    aug = m.hstack(ExactMatrix.from_columns(m.ctx, [list(vec)], m.rows))
    red, piv = rref_with_pivots(aug)
    if piv and piv[-1] == m.cols:
        return None
    ctx = m.ctx
    out = [ctx.zero] * m.cols
    for row, pc in enumerate(piv):
        out[pc] = red[row, m.cols]
    return out


def independent_columns(m: ExactMatrix) -> list[int]:
    """Indices of the pivot columns: a maximal independent subset, greedy from the left."""
    _, piv = rref_with_pivots(m)
    return piv

