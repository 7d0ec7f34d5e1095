"""The four-dimensional algebra Lambda_q = k<x,y>/(x^2, xy + q yx, y^2).

Elements are stored over the normal-form basis ``(1, x, y, yx)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactfield import FieldContext, FieldError, FieldScalar, INFINITE, mult_order

__all__ = [
    "BASIS",
    "LambdaQ",
    "AlgebraElement",
    "CaseDescriptor",
    "classify",
    "centre_basis",
    "CASE_TAGS",
]

BASIS = ("1", "x", "y", "yx")
ONE, X, Y, YX = range(4)

CASE_TAGS = ("Generic", "OddRoot", "EvenRootOrChar2", "Char2Q1", "QMinusOne", "QOne", "QZero")


class LambdaQ:
    """Lambda_q over a fixed field with a fixed parameter q."""

    def __init__(self, ctx: FieldContext, q):
        self.ctx = ctx
        self.q = ctx(q)
        zero, one = ctx.zero, ctx.one
        # products of basis elements: table[a][b] = (index, coefficient) or None
        t = [[None] * 4 for _ in range(4)]
        for b in range(4):
            t[ONE][b] = (b, one)
            t[b][ONE] = (b, one)
        t[X][Y] = (YX, -self.q)
        t[Y][X] = (YX, one)
        self.table = t
        # dense structure constants: const[a][b][c] = coefficient of basis c in a*b
        const = [[[zero] * 4 for _ in range(4)] for _ in range(4)]
        for a in range(4):
            for b in range(4):
                if t[a][b] is not None:
                    c, coef = t[a][b]
                    const[a][b][c] = coef
        self.structure = const

    def __eq__(self, other):
        return isinstance(other, LambdaQ) and self.ctx == other.ctx and self.q == other.q

    def __hash__(self):
        return hash((self.ctx, self.q))

    def __repr__(self):
        return f"LambdaQ({self.ctx}, q={self.q})"

    def element(self, coeffs: Sequence) -> "AlgebraElement":
        if len(coeffs) != 4:
            raise ValueError("an element of Lambda_q has 4 coordinates")
        return AlgebraElement(self, tuple(self.ctx(c) for c in coeffs))

    def basis(self, i: int) -> "AlgebraElement":
        c = [0, 0, 0, 0]
        c[i] = 1
        return self.element(c)

    @property
    def zero(self) -> "AlgebraElement":
        return self.element((0, 0, 0, 0))

    @property
    def one(self) -> "AlgebraElement":
        return self.basis(ONE)

    @property
    def x(self) -> "AlgebraElement":
        return self.basis(X)

    @property
    def y(self) -> "AlgebraElement":
        return self.basis(Y)

    @property
    def yx(self) -> "AlgebraElement":
        return self.basis(YX)

    def multiply(self, a: "AlgebraElement", b: "AlgebraElement") -> "AlgebraElement":
        if a.alg != self or b.alg != self:
            raise FieldError("elements belong to different algebras")
        out = [self.ctx.zero] * 4
        for i, ai in enumerate(a.coeffs):
            if not ai:
                continue
            row = self.table[i]
            for j, bj in enumerate(b.coeffs):
                entry = row[j]
                if entry is None or not bj:
                    continue
                k, coef = entry
                out[k] = out[k] + ai * bj * coef
        return AlgebraElement(self, tuple(out))


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    alg: LambdaQ
    coeffs: tuple

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.alg, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.alg, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.alg, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.alg.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar) -> "AlgebraElement":
        s = self.alg.ctx(scalar)
        return AlgebraElement(self.alg, tuple(s * a for a in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.alg == other.alg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        terms = []
        for c, name in zip(self.coeffs, BASIS):
            if not c:
                continue
            cs = str(c)
            if name == "1":
                terms.append(cs if " " not in cs else f"({cs})")
            elif cs == "1":
                terms.append(name)
            elif cs == "-1":
                terms.append("-" + name)
            elif any(ch in cs[1:] for ch in "+-") or "z" in cs:
                terms.append(f"({cs}){name}")
            else:
                terms.append(f"{cs}{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    __repr__ = __str__


def centre_basis(ctx: FieldContext, q) -> list[AlgebraElement]:
    """Basis of the centre Z(Lambda_q): {1, yx} unless q = -1, when Lambda is commutative."""
    alg = LambdaQ(ctx, q)
    if alg.q == -1:
        return [alg.basis(i) for i in range(4)]
    return [alg.one, alg.yx]


@dataclass(frozen=True)
class CaseDescriptor:
    """Which parameter regime (field, q) falls into; ``r`` is the order of q when relevant."""

    tag: str
    r: Optional[int] = None

    def __str__(self):
        return f"{self.tag}({self.r})" if self.tag in ("OddRoot", "EvenRootOrChar2") else self.tag


def classify(ctx: FieldContext, q) -> CaseDescriptor:
    q = ctx(q)
    order = mult_order(q)
    if order == 0:
        return CaseDescriptor("QZero")
    if order == INFINITE:
        return CaseDescriptor("Generic")
    if order == 1:
        return CaseDescriptor("Char2Q1" if ctx.characteristic == 2 else "QOne", 1)
    if order == 2:
        return CaseDescriptor("QMinusOne", 2)
    if order % 2 == 1 and ctx.characteristic != 2:
        return CaseDescriptor("OddRoot", order)
    return CaseDescriptor("EvenRootOrChar2", order)
