"""Minimal bimodule resolution of Lambda_q and the cochain complex it induces.

Hom(P^n, Lambda) is identified with Lambda^(n+1): a degree-n cochain is the
tuple (lambda_0, ..., lambda_n) of values on the generators f~^n_i.  In vector
form coordinate ``4*i + b`` holds the coefficient of basis element ``b`` of
lambda_i, with the basis ordered (1, x, y, yx).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .algebra import BASIS, CaseDescriptor, LambdaQ, AlgebraElement, classify
from .exactfield import FieldContext, FieldScalar
from .linalg import ExactMatrix, kernel_basis, rank, rref_with_pivots
from .report import Report

__all__ = [
    "WordCombination",
    "Cochain",
    "CohomologySpace",
    "Resolution",
    "get_resolution",
    "f_word_coefficients",
    "delta_star_matrix",
    "hh_dimension",
    "hh_basis",
    "verify_complex",
    "verify_comultiplication",
    "verify_minimality",
]

# radical degree of each basis element
BASIS_DEGREE = (0, 1, 1, 2)


@dataclass(frozen=True)
class WordCombination:
    """A combination of words in x, y of a fixed length whose coefficients are
    powers of q; ``terms`` maps each word to its exponent."""

    degree: int
    terms: dict

    def evaluate(self, q: FieldScalar) -> dict[str, FieldScalar]:
        return {w: q ** e for w, e in self.terms.items()}

    def __str__(self):
        parts = []
        for w, e in sorted(self.terms.items()):
            word = "⊗".join(w) if w else "1"
            coef = "" if e == 0 else ("q·" if e == 1 else f"q^{e}·")
            parts.append(coef + word)
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def _f_words(n: int) -> tuple:
    if n == 0:
        return (WordCombination(0, {"": 0}),)
    prev = _f_words(n - 1)
    out = []
    for i in range(n + 1):
        terms = {}
        # f^n_i = f^{n-1}_{i-1} (x) y + q^i f^{n-1}_i (x) x
        if i >= 1:
            for w, e in prev[i - 1].terms.items():
                terms[w + "y"] = e
        if i <= n - 1:
            for w, e in prev[i].terms.items():
                terms[w + "x"] = e + i
        out.append(WordCombination(n, terms))
    return tuple(out)


def f_word_coefficients(n: int) -> list[WordCombination]:
    """The generators f^n_0, ..., f^n_n as word combinations."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(_f_words(n))


@dataclass(frozen=True, eq=False)
class Cochain:
    """A map P^n -> Lambda, stored as its n + 1 values."""

    degree: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.degree + 1:
            raise ValueError(f"degree-{self.degree} cochain needs {self.degree + 1} entries")

    @property
    def alg(self) -> LambdaQ:
        return self.entries[0].alg

    @classmethod
    def zero(cls, alg: LambdaQ, n: int) -> "Cochain":
        return cls(n, tuple(alg.zero for _ in range(n + 1)))

    @classmethod
    def standard(cls, alg: LambdaQ, n: int, j: int, b) -> "Cochain":
        """The map sending f~^n_j to basis element ``b`` and the rest to 0."""
        b = BASIS.index(b) if isinstance(b, str) else b
        entries = [alg.zero] * (n + 1)
        entries[j] = alg.basis(b)
        return cls(n, tuple(entries))

    @classmethod
    def of(cls, alg: LambdaQ, *entries) -> "Cochain":
        """Build from entries given as AlgebraElements, basis names or 0.

        ``Cochain.of(alg, "x", 0)`` is the degree-1 cochain (x, 0).
        """
        vals = []
        for e in entries:
            if isinstance(e, AlgebraElement):
                vals.append(e)
            elif isinstance(e, str):
                vals.append(alg.basis(BASIS.index(e)))
            elif e == 0:
                vals.append(alg.zero)
            elif e == 1:
                vals.append(alg.one)
            else:
                raise TypeError(f"cannot read cochain entry {e!r}")
        return cls(len(vals) - 1, tuple(vals))

    @classmethod
    def from_vector(cls, alg: LambdaQ, n: int, vec: Sequence) -> "Cochain":
        if len(vec) != 4 * (n + 1):
            raise ValueError("vector length does not match degree")
        return cls(n, tuple(alg.element(vec[4 * i: 4 * i + 4]) for i in range(n + 1)))

    def to_vector(self) -> list[FieldScalar]:
        return [c for e in self.entries for c in e.coeffs]

    def __add__(self, other: "Cochain") -> "Cochain":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Cochain(self.degree, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(-1)

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def scale(self, s) -> "Cochain":
        return Cochain(self.degree, tuple(e.scale(s) for e in self.entries))

    def __rmul__(self, s):
        return self.scale(s)

    def left(self, a: AlgebraElement) -> "Cochain":
        """Pointwise left multiplication, i.e. the action of HH^0 = Z(Lambda)."""
        return Cochain(self.degree, tuple(a * e for e in self.entries))

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self.entries == other.entries

    def __hash__(self):
        return hash((self.degree, self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    __repr__ = __str__


def coboundary(eta: Cochain, q: Optional[FieldScalar] = None) -> Cochain:
    """eta o delta^(m+1) evaluated entrywise from the closed formula.

    Independent of :func:`delta_star_matrix`; the tests compare the two.
    """
    alg = eta.alg
    q = alg.q if q is None else q
    n = eta.degree + 1
    lam = eta.entries
    x, y = alg.x, alg.y
    sign = 1 if n % 2 == 0 else -1
    out = []
    for j in range(n + 1):
        v = alg.zero
        if j <= n - 1:
            v = v + x * lam[j] + (lam[j] * x).scale(q ** j * sign)
        if j >= 1:
            v = v + (y * lam[j - 1]).scale(q ** (n - j)) + (lam[j - 1] * y).scale(sign)
        out.append(v)
    return Cochain(n, tuple(out))


def standard_representatives(case: CaseDescriptor, n: int) -> list[tuple[int, str]]:
    """Preferred representatives of HH^n as (coordinate j, basis element) pairs.

    These are the coordinate maps e_j times 1, x, y or yx that form a basis in
    each parameter regime.  An empty list means "no preference".
    """
    tag, r = case.tag, case.r
    every = [(j, b) for j in range(n + 1) for b in BASIS]
    if tag == "Char2Q1":
        return every
    if n == 0:
        return [(0, b) for b in BASIS] if tag == "QMinusOne" else [(0, "1"), (0, "yx")]
    if tag == "QMinusOne":
        if n == 1:
            return [(0, "x"), (0, "yx"), (1, "yx"), (1, "y")]
        if n == 2:
            return [(0, "1"), (0, "y"), (1, "yx"), (2, "x"), (2, "1")]
        if n % 2 == 0:
            return ([(j, "1") for j in range(0, n + 1, 2)] + [(0, "y"), (n, "x")]
                    + [(j, "yx") for j in range(1, n, 2)])
        return ([(j - 1, "x") for j in range(1, n + 1, 2)] + [(j, "y") for j in range(1, n + 1, 2)]
                + [(0, "yx"), (n, "yx")])
    if tag == "QOne":
        if n == 1:
            return [(0, "x"), (0, "y"), (1, "x"), (1, "y")]
        if n % 2 == 0:
            return [(j, "1") for j in range(n + 1)] + [(j, "yx") for j in range(n + 1)]
        return [(j, "x") for j in range(n + 1)] + [(j, "y") for j in range(n + 1)]
    if n == 1:
        return [(0, "x"), (1, "y")]
    if tag == "QZero":
        return [(i, "x") for i in range(n - 1)] + [(n, "y")] + [(i, "yx") for i in range(1, n)]
    if n == 2:
        return [(1, "yx")]
    if tag in ("OddRoot", "EvenRootOrChar2"):
        period = 2 * r if tag == "OddRoot" else r
        s, rem = divmod(n, period)
        count = (2 * s if tag == "OddRoot" else s) + 1
        if rem == 0:
            return [(t * r, "1") for t in range(count)]
        if rem == 1:
            return [(t * r, "x") for t in range(count)] + [(t * r + 1, "y") for t in range(count)]
        if rem == 2:
            return [(t * r + 1, "yx") for t in range(count)]
    return []


class CohomologySpace:
    """HH^n with chosen representatives and the data to reduce cocycles.

    ``projection`` maps a cochain vector to its canonical form modulo
    coboundaries; ``coord_map`` turns that into coordinates on the
    representatives.
    """

    def __init__(self, res: "Resolution", n: int, representatives: list[Cochain],
                 projection: ExactMatrix, coord_map: ExactMatrix, rep_matrix: ExactMatrix):
        self.resolution = res
        self.degree = n
        self.representatives = representatives
        self.projection = projection
        self.coord_map = coord_map
        self.rep_matrix = rep_matrix

    @property
    def dimension(self) -> int:
        return len(self.representatives)

    def __len__(self):
        return self.dimension

    def is_cocycle(self, c: Cochain) -> bool:
        return self.resolution.is_cocycle(c)

    def reduce(self, c: Cochain, check: bool = True) -> list[FieldScalar]:
        """Coordinates of the class of the cocycle ``c``; zero iff c is a coboundary."""
        if c.degree != self.degree:
            raise ValueError(f"expected a degree-{self.degree} cochain, got degree {c.degree}")
        if check and not self.is_cocycle(c):
            raise ValueError(f"{c} is not a cocycle")
        vec = c.to_vector()
        ctx = self.resolution.ctx
        if not self.representatives:
            return []
        col = ExactMatrix.from_columns(ctx, [vec], len(vec))
        coords = self.coord_map @ (self.projection @ col)
        return coords.column(0)

    def lift(self, coords: Sequence) -> Cochain:
        """The cochain sum(coords[k] * representative[k])."""
        alg = self.resolution.alg
        out = Cochain.zero(alg, self.degree)
        for c, rep in zip(coords, self.representatives):
            if c:
                out = out + rep.scale(c)
        return out

    def describe(self) -> list[str]:
        return [str(r) for r in self.representatives]


class Resolution:
    """The induced cochain complex for one (field, q), with per-degree caches."""

    def __init__(self, ctx: FieldContext, q):
        self.ctx = ctx
        self.alg = LambdaQ(ctx, q)
        self.q = self.alg.q
        self.case = classify(ctx, self.q)
        self._delta: dict[int, ExactMatrix] = {}
        self._rank: dict[int, int] = {}
        self._spaces: dict[int, CohomologySpace] = {}
        st = self.alg.structure
        # left_mult[a][out][in], right_mult[a][out][in]
        self.left_mult = [[[st[a][b][c] for b in range(4)] for c in range(4)] for a in range(4)]
        self.right_mult = [[[st[b][a][c] for b in range(4)] for c in range(4)] for a in range(4)]

    def delta_star(self, n: int) -> ExactMatrix:
        """Matrix (4(n+1) x 4n) of eta -> eta o delta^n on degree n-1 cochains."""
        if n < 1:
            raise ValueError("delta^n is defined for n >= 1")
        if n in self._delta:
            return self._delta[n]
        ctx, q = self.ctx, self.q
        sign = 1 if n % 2 == 0 else -1
        Lx, Ly = self.left_mult[1], self.left_mult[2]
        Rx, Ry = self.right_mult[1], self.right_mult[2]
        m = ExactMatrix.zeros(ctx, 4 * (n + 1), 4 * n)
        for j in range(n + 1):
            # block (j, j): L_x + (-1)^n q^j R_x
            if j <= n - 1:
                c = q ** j * sign
                for o in range(4):
                    for i in range(4):
                        v = Lx[o][i] + c * Rx[o][i]
                        if v:
                            m[4 * j + o, 4 * j + i] = v
            # block (j, j-1): q^(n-j) L_y + (-1)^n R_y
            if j >= 1:
                c = q ** (n - j)
                for o in range(4):
                    for i in range(4):
                        v = c * Ly[o][i] + sign * Ry[o][i]
                        if v:
                            m[4 * j + o, 4 * (j - 1) + i] = v
        self._delta[n] = m
        return m

    def rank(self, n: int) -> int:
        if n < 1:
            return 0
        if n not in self._rank:
            self._rank[n] = rank(self.delta_star(n))
        return self._rank[n]

    def is_cocycle(self, c: Cochain) -> bool:
        return coboundary(c).is_zero()

    def hh_dimension(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be >= 0")
        return 4 * (n + 1) - self.rank(n + 1) - self.rank(n)

    def hh_basis(self, n: int) -> CohomologySpace:
        if n in self._spaces:
            return self._spaces[n]
        ctx, alg = self.ctx, self.alg
        size = 4 * (n + 1)
        dim = self.hh_dimension(n)

        # projection onto the complement of the coboundaries spanned by non-pivot coords
        proj = ExactMatrix.identity(ctx, size)
        if n >= 1 and self.rank(n):
            ech, piv = rref_with_pivots(self.delta_star(n).T)
            for r, pc in enumerate(piv):
                for k in range(size):
                    e = ech[r, k]
                    if e:
                        proj[k, pc] = proj[k, pc] - e

        # preferred maps for the case, then any standard cochain e_j * b, then kernel vectors
        nxt = self.delta_star(n + 1)
        order = [4 * j + BASIS.index(b) for j, b in standard_representatives(self.case, n)]
        order += [idx for idx in range(size) if idx not in order]
        candidates = []
        for idx in order:
            if all(not nxt[r, idx] for r in range(nxt.rows)):
                candidates.append(Cochain.standard(alg, n, idx // 4, idx % 4))
        for v in kernel_basis(nxt):
            candidates.append(Cochain.from_vector(alg, n, v))
        reps: list[Cochain] = []
        if dim:
            cand = ExactMatrix.from_columns(ctx, [c.to_vector() for c in candidates], size)
            reduced = proj @ cand
            _, piv = rref_with_pivots(reduced)
            reps = [candidates[k] for k in piv]
            assert len(reps) == dim, (len(reps), dim)

        # coordinates: invert the reduced representatives on a set of pivot rows
        if reps:
            rep_mat = proj @ ExactMatrix.from_columns(ctx, [r.to_vector() for r in reps], size)
            _, rows = rref_with_pivots(rep_mat.T)
            sq = ExactMatrix.zeros(ctx, dim, dim)
            for a, r in enumerate(rows):
                for b in range(dim):
                    sq[a, b] = rep_mat[r, b]
            inv_aug, _ = rref_with_pivots(sq.hstack(ExactMatrix.identity(ctx, dim)))
            select = ExactMatrix.zeros(ctx, dim, size)
            for a, r in enumerate(rows):
                select[a, r] = 1
            inv = ExactMatrix(ctx, inv_aug.data[:, dim:].copy())
            coord_map = inv @ select
        else:
            rep_mat = ExactMatrix.zeros(ctx, size, 0)
            coord_map = ExactMatrix.zeros(ctx, 0, size)
        space = CohomologySpace(self, n, reps, proj, coord_map, rep_mat)
        self._spaces[n] = space
        return space


@lru_cache(maxsize=64)
def get_resolution(ctx: FieldContext, q) -> Resolution:
    return Resolution(ctx, q)


def _res(ctx: FieldContext, q) -> Resolution:
    return get_resolution(ctx, ctx(q))


def delta_star_matrix(n: int, ctx: FieldContext, q) -> ExactMatrix:
    return _res(ctx, q).delta_star(n)


def hh_dimension(n: int, ctx: FieldContext, q) -> int:
    """dim HH^n(Lambda_q) = dim ker (delta^(n+1))* - rank (delta^n)*."""
    return _res(ctx, q).hh_dimension(n)


def hh_basis(n: int, ctx: FieldContext, q) -> CohomologySpace:
    return _res(ctx, q).hh_basis(n)


def verify_complex(nmax: int, ctx: FieldContext, q) -> Report:
    """Check (delta^(n+1))* (delta^n)* = 0 for 1 <= n < nmax."""
    res = _res(ctx, q)
    report = Report()
    bad = [n for n in range(1, nmax) if not (res.delta_star(n + 1) @ res.delta_star(n)).is_zero()]
    report.add(
        "complex: delta^2 = 0",
        not bad,
        f"n = 1..{nmax - 1}" if not bad else f"first failure at n = {bad[0]}",
        failures=bad,
    )
    return report


def verify_minimality(nmax: int, ctx: FieldContext, q) -> Report:
    """Every nonzero entry of (delta^n)* raises radical degree by exactly one.

    This is the cochain-side shadow of the differential having entries in the
    radical of the enveloping algebra, i.e. of the resolution being minimal.
    """
    res = _res(ctx, q)
    bad = []
    for n in range(1, nmax + 1):
        m = res.delta_star(n)
        for r in range(m.rows):
            for c in range(m.cols):
                if m[r, c] and BASIS_DEGREE[r % 4] != BASIS_DEGREE[c % 4] + 1:
                    bad.append((n, r, c))
    report = Report()
    report.add(
        "minimality: differential entries in the radical",
        not bad,
        f"n = 1..{nmax}" if not bad else f"{len(bad)} entries outside the radical",
        failures=bad[:10],
    )
    return report


def verify_comultiplication(nmax: int, ctx: Optional[FieldContext] = None, q=None) -> Report:
    """Check f^n_i = sum_j q^(j(n-i+j-t)) f^t_j (x) f^(n-t)_(i-j) for all t, i, n <= nmax.

    Without a field the identity is checked on exponents of q, which is the
    statement for a formal parameter; with ``ctx`` and ``q`` both sides are
    evaluated in the field.
    """
    qv = ctx(q) if ctx is not None else None
    bad = []
    for n in range(nmax + 1):
        fn = _f_words(n)
        for t in range(n + 1):
            ft, fs = _f_words(t), _f_words(n - t)
            for i in range(n + 1):
                rhs: dict[str, list] = {}
                for j in range(max(0, i + t - n), min(t, i) + 1):
                    shift = j * (n - i + j - t)
                    for w1, e1 in ft[j].terms.items():
                        for w2, e2 in fs[i - j].terms.items():
                            rhs.setdefault(w1 + w2, []).append(e1 + e2 + shift)
                lhs = fn[i].terms
                if qv is None:
                    ok = set(rhs) == set(lhs) and all(rhs[w] == [lhs[w]] for w in lhs)
                else:
                    zero = ctx.zero
                    words = set(rhs) | set(lhs)
                    ok = all(
                        (qv ** lhs[w] if w in lhs else zero)
                        == sum((qv ** e for e in rhs.get(w, [])), zero)
                        for w in words
                    )
                if not ok:
                    bad.append((n, t, i))
    report = Report()
    where = "formal q" if qv is None else f"q = {qv} in {ctx}"
    report.add(
        "comultiplication identity for f^n_i",
        not bad,
        f"n <= {nmax}, {where}" if not bad else f"{len(bad)} failures",
        failures=bad[:10],
    )
    return report
