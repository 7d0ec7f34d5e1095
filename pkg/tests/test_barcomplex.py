import pytest

from hhq import barcomplex
from hhq.barcomplex import bar_differential_matrix, compare_with_resolution, oracle_hh_dimension, verify_bar_complex
from hhq.linalg import kernel_basis

from conftest import params


def test_degree_zero_kernel_is_centre():
    ctx, q = params("Q", "2")
    d0 = bar_differential_matrix(0, ctx, q)
    assert d0.shape == (16, 4)
    assert len(kernel_basis(d0)) == 2


def test_shapes():
    ctx, q = params("Fp:7", "2")
    for n in range(3):
        assert bar_differential_matrix(n, ctx, q).shape == (4 ** (n + 2), 4 ** (n + 1))


@pytest.mark.parametrize("field,q,nmax", [("Fp:7", "2", 3), ("Q", "0", 2), ("Q", "-1", 2), ("Fp:2", "1", 3)])
def test_d_squared(field, q, nmax):
    ctx, qv = params(field, q)
    assert verify_bar_complex(nmax, ctx, qv).ok


def test_oracle_examples():
    ctx, q = params("Q", "2")
    assert [oracle_hh_dimension(n, ctx, q) for n in range(4)] == [2, 2, 1, 0]
    ctx, q = params("Q", "-1")
    assert oracle_hh_dimension(2, ctx, q) == 5
    ctx, q = params("Fp:2", "1")
    assert oracle_hh_dimension(1, ctx, q) == 8


@pytest.mark.parametrize("field,q,nmax", [("Q", "1", 3), ("Q", "0", 3), ("cyclo:3", "zeta", 2), ("Fp:3", "2", 3)])
def test_agrees_with_resolution(field, q, nmax):
    ctx, qv = params(field, q)
    assert compare_with_resolution(nmax, ctx, qv).ok


def test_cap(monkeypatch):
    ctx, q = params("Q", "2")
    with pytest.raises(ValueError):
        oracle_hh_dimension(5, ctx, q)
    monkeypatch.setenv("HHQ_ORACLE_CAP", "2")
    assert barcomplex.oracle_cap() == 2
    with pytest.raises(ValueError):
        oracle_hh_dimension(3, ctx, q)
    monkeypatch.setenv("HHQ_ORACLE_CAP", "9")
    with pytest.raises(ValueError):
        barcomplex.oracle_cap()
