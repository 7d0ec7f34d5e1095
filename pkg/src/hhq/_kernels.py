"""Row-reduction kernels.

Modular elimination (int64 arrays, entries in [0, p)) has a numba ``@njit``
implementation and a vectorised numpy one.  Set ``HHQ_NO_NUMBA=1`` to force
the numpy path; it is also used when numba cannot be imported.

Exact elimination over Q and cyclotomic fields works on numpy object arrays
whose entries support ``+ - * /`` and comparison with 0.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

__all__ = [
    "BACKEND",
    "NUMBA_AVAILABLE",
    "rref_mod_p",
    "rref_mod_p_numpy",
    "rref_mod_p_numba",
    "rref_object",
    "matmul_mod_p",
]

NUMBA_AVAILABLE = numba is not None
_DISABLED = os.environ.get("HHQ_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")
BACKEND = "numba" if NUMBA_AVAILABLE and not _DISABLED else "numpy"

# p * p must fit in int64
MAX_PRIME = 2**31


def rref_mod_p_numpy(a, p, full=True):
    """In-place row reduction of ``a`` modulo ``p``.

    Returns ``(rank, pivots)``.  With ``full=False`` only the entries below
    each pivot are cleared (row echelon form), which is enough for rank.
    """
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        if full:
            hit = np.flatnonzero(a[:, c])
            hit = hit[hit != r]
        else:
            hit = r + 1 + np.flatnonzero(a[r + 1:, c])
        if hit.size:
            a[hit, c:] = (a[hit, c:] - np.outer(a[hit, c], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return r, np.array(pivots, dtype=np.int64)


def _rref_mod_p_loop(a, p, full):
    rows, cols = a.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                t = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = t
        # inverse via Fermat; p is prime
        inv = 1
        base = a[r, c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for j in range(c, cols):
            a[r, j] = a[r, j] * inv % p
        start = 0 if full else r + 1
        for i in range(start, rows):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                v = a[r, j]
                if v != 0:
                    a[i, j] = (a[i, j] - f * v) % p
        pivots[r] = c
        r += 1
    return r, pivots[:r].copy()


if NUMBA_AVAILABLE:
    _rref_mod_p_jit = numba.njit(cache=True)(_rref_mod_p_loop)
else:  # pragma: no cover
    _rref_mod_p_jit = None


def rref_mod_p_numba(a, p, full=True):
    """Same contract as :func:`rref_mod_p_numpy`, compiled with numba."""
    if _rref_mod_p_jit is None:  # pragma: no cover
        raise RuntimeError("numba is not available")
    rank, piv = _rref_mod_p_jit(a, np.int64(p), full)
    return int(rank), piv


def rref_mod_p(a, p, full=True):
    if p >= MAX_PRIME:
        raise ValueError(f"prime {p} too large for int64 elimination")
    if BACKEND == "numba":
        return rref_mod_p_numba(a, p, full)
    return rref_mod_p_numpy(a, p, full)


def matmul_mod_p(a, b, p):
    if a.shape[1] * (p - 1) ** 2 < 2**63:
        return (a @ b) % p
    out = a.astype(object) @ b.astype(object)
    return np.array(out % p, dtype=np.int64)


def rref_object(a, full=True):
    """In-place exact row reduction of an object array. Returns (rank, pivots)."""
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = a[r:, c]
        nz = [i for i, v in enumerate(col) if v != 0]
        if not nz:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = 1 / a[r, c]
        a[r, c:] = a[r, c:] * inv
        lo = 0 if full else r + 1
        hit = [i for i in range(lo, rows) if i != r and a[i, c] != 0]
        if hit:
            a[hit, c:] = a[hit, c:] - np.outer(a[hit, c], a[r, c:])
        pivots.append(c)
        r += 1
    return r, np.array(pivots, dtype=np.int64)
