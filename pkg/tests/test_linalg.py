import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hhq import _kernels
from hhq.exactfield import cyclotomic, prime_field, rationals
from hhq.linalg import ExactMatrix, independent_columns, kernel_basis, rank, rref, rref_with_pivots, solve_in_span

FIELDS = [rationals(), prime_field(2), prime_field(7), cyclotomic(3)]


def matrices(ctx, max_dim=7):
    entry = st.integers(-3, 3)
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(lambda rows: ExactMatrix.from_rows(ctx, rows))


def test_identity_and_small_kernel():
    i2 = ExactMatrix.identity(prime_field(5), 2)
    assert rank(i2) == 2 and kernel_basis(i2) == []
    k = kernel_basis(ExactMatrix.from_rows(prime_field(2), [[1, 1]]))
    assert k == [[1, 1]]


def test_rank_invariant_under_row_shuffle():
    ctx = prime_field(7)
    rnd = random.Random(3)
    for _ in range(25):
        rows = [[rnd.randrange(7) for _ in range(5)] for _ in range(8)]
        shuffled = rows[:]
        rnd.shuffle(shuffled)
        assert rank(ExactMatrix.from_rows(ctx, rows)) == rank(ExactMatrix.from_rows(ctx, shuffled))


@pytest.mark.parametrize("ctx", FIELDS, ids=str)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_rank_nullity_and_transpose(ctx, data):
    m = data.draw(matrices(ctx))
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    assert rank(m) == rank(m.T)
    for v in ker:
        assert all(c == 0 for c in m.apply(v))
    if ker:
        assert rank(ExactMatrix.from_columns(ctx, ker, m.cols)) == len(ker)


@pytest.mark.parametrize("ctx", FIELDS, ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_rref_idempotent(ctx, data):
    m = data.draw(matrices(ctx))
    r = rref(m)
    assert rref(r) == r
    _, piv = rref_with_pivots(m)
    assert len(piv) == rank(m)
    assert len(independent_columns(m)) == rank(m)


@pytest.mark.parametrize("ctx", FIELDS, ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_solve_in_span(ctx, data):
    m = data.draw(matrices(ctx, 6))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=m.cols, max_size=m.cols))
    target = m.apply(coeffs)
    sol = solve_in_span(m, target)
    assert sol is not None
    assert m.apply(sol) == target


def test_solve_outside_span():
    ctx = rationals()
    m = ExactMatrix.from_rows(ctx, [[1, 0], [0, 0]])
    assert solve_in_span(m, [0, 1]) is None
    assert solve_in_span(m, [Fraction(1, 3), 0]) == [Fraction(1, 3), 0]


def test_kernels_agree():
    rnd = np.random.default_rng(11)
    for p in (2, 3, 7, 65521):
        for shape in [(5, 9), (30, 12), (64, 64)]:
            a = rnd.integers(0, p, size=shape).astype(np.int64)
            if rnd.random() < 0.5:
                a[:, -1] = (a[:, 0] + a[:, 1]) % p
            b = a.copy()
            ra, pa = _kernels.rref_mod_p_numpy(a, p)
            rb, pb = _kernels.rref_mod_p_numba(b, p)
            assert ra == rb and list(pa) == list(pb)
            assert np.array_equal(a, b)


def test_matmul_mod_p_large_modulus():
    p = 2_147_483_629
    a = np.full((3, 3), p - 1, dtype=np.int64)
    out = _kernels.matmul_mod_p(a, a, p)
    assert (out == 3 % p).all()  # (-1)(-1) summed three times


def test_dimension_mismatch():
    ctx = rationals()
    a = ExactMatrix.zeros(ctx, 2, 3)
    with pytest.raises(ValueError):
        a @ a


@pytest.mark.parametrize("flag,backend", [("1", "numpy"), ("", "numba")])
def test_backend_env_flag(flag, backend):
    import os
    import subprocess
    import sys

    env = dict(os.environ, HHQ_NO_NUMBA=flag)
    out = subprocess.run([sys.executable, "-c", "from hhq import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout.strip()
    assert out == (backend if _kernels.NUMBA_AVAILABLE else "numpy")
