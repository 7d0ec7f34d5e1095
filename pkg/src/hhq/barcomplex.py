"""Brute-force Hochschild cochains from the bar resolution.

Hom(B^n, Lambda) = Hom_k(Lambda^(x)n, Lambda) has dimension 4^(n+1).  A
cochain phi is a dense vector indexed by ``word * 4 + b`` where ``word`` is
the base-4 number of the input tensor (a_1 most significant) and ``b`` the
output basis element.  Used only as an independent check on the minimal
resolution; cost grows like 4^(2n).
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

from .algebra import LambdaQ
from .exactfield import FieldContext
from .linalg import ExactMatrix, rank
from .report import Report

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "oracle_cap",
    "bar_differential_matrix",
    "oracle_hh_dimension",
    "verify_bar_complex",
    "compare_with_resolution",
]

DEFAULT_ORACLE_CAP = 4
MAX_ORACLE_CAP = 5


def oracle_cap() -> int:
    """The degree cap, overridable with HHQ_ORACLE_CAP (at most 5)."""
    raw = os.environ.get("HHQ_ORACLE_CAP")
    if not raw:
        return DEFAULT_ORACLE_CAP
    cap = int(raw)
    if not 0 <= cap <= MAX_ORACLE_CAP:
        raise ValueError(f"HHQ_ORACLE_CAP must be in 0..{MAX_ORACLE_CAP}, got {cap}")
    return cap


def _index(word) -> int:
    w = 0
    for a in word:
        w = 4 * w + a
    return w


@lru_cache(maxsize=32)
def _bar_matrix(ctx: FieldContext, q, n: int) -> ExactMatrix:
    alg = LambdaQ(ctx, q)
    const = alg.structure
    entries: dict = {}

    def put(row, col, v):
        entries[row, col] = entries.get((row, col), 0) + v

    last_sign = -1 if n % 2 == 0 else 1  # (-1)^(n+1)
    for word in itertools.product(range(4), repeat=n + 1):
        base = _index(word) * 4
        a1, an1 = word[0], word[-1]
        head = _index(word[:-1]) * 4
        tail = _index(word[1:]) * 4
        for b in range(4):
            for bo in range(4):
                c = const[a1][b][bo]
                if c:
                    put(base + bo, tail + b, c)
                c = const[b][an1][bo]
                if c:
                    put(base + bo, head + b, c * last_sign)
        for i in range(1, n + 1):
            sign = -1 if i % 2 else 1
            ai, aj = word[i - 1], word[i]
            for mid in range(4):
                c = const[ai][aj][mid]
                if not c:
                    continue
                col = _index(word[:i - 1] + (mid,) + word[i + 1:]) * 4
                for b in range(4):
                    put(base + b, col + b, c * sign)
    m = ExactMatrix.zeros(ctx, 4 ** (n + 2), 4 ** (n + 1))
    for (r, c), v in entries.items():
        if v:
            m[r, c] = v
    return m


def bar_differential_matrix(n: int, ctx: FieldContext, q) -> ExactMatrix:
    """Matrix (4^(n+2) x 4^(n+1)) of the Hochschild coboundary on n-cochains.

    (d phi)(a_1..a_(n+1)) = a_1 phi(a_2..) + sum_i (-1)^i phi(..a_i a_(i+1)..)
    + (-1)^(n+1) phi(a_1..a_n) a_(n+1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return _bar_matrix(ctx, ctx(q), n)


@lru_cache(maxsize=64)
def _bar_rank(ctx: FieldContext, q, n: int) -> int:
    return rank(_bar_matrix(ctx, q, n))


def oracle_hh_dimension(n: int, ctx: FieldContext, q, cap: int | None = None) -> int:
    """dim ker d^n - rank d^(n-1), computed from bar matrices only."""
    cap = oracle_cap() if cap is None else cap
    if n > cap:
        raise ValueError(f"degree {n} above oracle cap {cap}")
    if n < 0:
        raise ValueError("n must be >= 0")
    q = ctx(q)
    below = _bar_rank(ctx, q, n - 1) if n >= 1 else 0
    return 4 ** (n + 1) - _bar_rank(ctx, q, n) - below


def verify_bar_complex(nmax: int, ctx: FieldContext, q) -> Report:
    """d^(n+1) d^n = 0 for n < nmax."""
    q = ctx(q)
    bad = [n for n in range(nmax)
           if not (bar_differential_matrix(n + 1, ctx, q) @ bar_differential_matrix(n, ctx, q)).is_zero()]
    report = Report()
    report.add("bar complex: d^2 = 0", not bad, f"n < {nmax}" if not bad else f"fails at n = {bad}")
    return report


def compare_with_resolution(nmax: int, ctx: FieldContext, q) -> Report:
    """Oracle dimensions against the minimal-resolution dimensions for n <= nmax."""
    from .resolution import hh_dimension

    q = ctx(q)
    oracle = [oracle_hh_dimension(n, ctx, q, cap=max(nmax, oracle_cap())) for n in range(nmax + 1)]
    fast = [hh_dimension(n, ctx, q) for n in range(nmax + 1)]
    report = Report()
    report.add(
        f"oracle: bar complex = minimal resolution, n <= {nmax}",
        oracle == fast,
        "" if oracle == fast else f"bar {oracle} vs resolution {fast}",
        bar=oracle,
        resolution=fast,
    )
    return report
