import math
import random

import pytest

from hhq.algebra import LambdaQ, centre_basis
from hhq.exactfield import rationals
from hhq.linalg import ExactMatrix, kernel_basis, rank
from hhq.resolution import (
    Cochain,
    coboundary,
    delta_star_matrix,
    f_word_coefficients,
    get_resolution,
    hh_basis,
    hh_dimension,
    verify_comultiplication,
    verify_complex,
    verify_minimality,
)

from conftest import EXTRA, REPRESENTATIVES, ids, params

ALL = REPRESENTATIVES + EXTRA


def inversions(word):
    """Number of (y, x) pairs with the y to the left: x's each y has to move across."""
    count, ys = 0, 0
    for letter in word:
        if letter == "y":
            ys += 1
        else:
            count += ys
    return count


def test_f_words_small():
    f1 = f_word_coefficients(1)
    assert f1[0].terms == {"x": 0} and f1[1].terms == {"y": 0}
    assert f_word_coefficients(2)[1].terms == {"xy": 0, "yx": 1}
    assert f_word_coefficients(3)[1].terms == {"xxy": 0, "xyx": 1, "yxx": 2}
    assert f_word_coefficients(0)[0].terms == {"": 0}


@pytest.mark.parametrize("n", range(0, 9))
def test_f_words_binomial_and_coefficient_rule(n):
    for i, f in enumerate(f_word_coefficients(n)):
        assert len(f.terms) == math.comb(n, i)
        for w, e in f.terms.items():
            assert len(w) == n and w.count("y") == i
            assert e == inversions(w)


@pytest.mark.parametrize("field,q", ALL, ids=ids(ALL))
def test_matrix_columns_match_closed_formula(field, q):
    ctx, qv = params(field, q)
    alg = LambdaQ(ctx, qv)
    for n in range(1, 7):
        m = delta_star_matrix(n, ctx, qv)
        assert m.shape == (4 * (n + 1), 4 * n)
        for idx in range(4 * n):
            eta = Cochain.standard(alg, n - 1, idx // 4, idx % 4)
            assert m.column(idx) == coboundary(eta).to_vector()


def test_delta_examples():
    ctx = rationals()
    for qv in (2, 3, -5):
        alg = LambdaQ(ctx, qv)
        assert coboundary(Cochain.of(alg, 1)).is_zero()
        assert coboundary(Cochain.of(alg, 0, 1)) == Cochain.of(alg, 0, alg.x.scale(1 + qv), alg.y.scale(2))
        assert coboundary(Cochain.of(alg, "y", 0)) == Cochain.of(alg, alg.yx.scale(1 - qv), 0, 0)


@pytest.mark.parametrize("field,q", ALL, ids=ids(ALL))
def test_rank_nullity(field, q):
    ctx, qv = params(field, q)
    for n in range(1, 9):
        m = delta_star_matrix(n, ctx, qv)
        assert rank(m) + len(kernel_basis(m)) == 4 * n


@pytest.mark.parametrize("q", [2, 3, "1/2", -7])
def test_generic_image_dimension(q):
    ctx, qv = params("Q", str(q))
    for n in range(3, 11):
        assert rank(delta_star_matrix(n, ctx, qv)) == 2 * n + 1


@pytest.mark.parametrize("field,q,dims", [
    ("Q", "2", [2, 2, 1, 0, 0, 0]),
    ("Q", "-1", [4, 4, 5, 6]),
    ("Fp:2", "1", [4 * (n + 1) for n in range(7)]),
    ("Q", "1", [2 * (n + 1) for n in range(7)]),
    ("Fp:7", "2", [2, 2, 1, 0, 0, 0, 3, 6, 3]),
    ("cyclo:3", "zeta", [2, 2, 1, 0, 0, 0, 3, 6, 3]),
])
def test_dimensions(field, q, dims):
    ctx, qv = params(field, q)
    assert [hh_dimension(n, ctx, qv) for n in range(len(dims))] == dims


@pytest.mark.parametrize("field,q", ALL, ids=ids(ALL))
def test_hh0_is_centre(field, q):
    ctx, qv = params(field, q)
    space = hh_basis(0, ctx, qv)
    z = centre_basis(ctx, qv)
    assert space.dimension == len(z)
    both = [list(r.entries[0].coeffs) for r in space.representatives] + [list(c.coeffs) for c in z]
    assert rank(ExactMatrix.from_columns(ctx, both, 4)) == len(z)


@pytest.mark.parametrize("q,n,described", [
    ("2", 1, ["(x, 0)", "(0, y)"]),
    ("2", 2, ["(0, yx, 0)"]),
    ("-1", 1, ["(x, 0)", "(yx, 0)", "(0, yx)", "(0, y)"]),
    ("-1", 2, ["(1, 0, 0)", "(y, 0, 0)", "(0, yx, 0)", "(0, 0, x)", "(0, 0, 1)"]),
    ("1", 1, ["(x, 0)", "(y, 0)", "(0, x)", "(0, y)"]),
    ("1", 2, ["(1, 0, 0)", "(0, 1, 0)", "(0, 0, 1)", "(yx, 0, 0)", "(0, yx, 0)", "(0, 0, yx)"]),
])
def test_low_degree_bases(q, n, described):
    ctx, qv = params("Q", q)
    assert hh_basis(n, ctx, qv).describe() == described


def test_char2_q1_everything_is_a_cocycle():
    ctx, qv = params("Fp:2", "1")
    for n in range(1, 9):
        assert delta_star_matrix(n, ctx, qv).is_zero()


def test_odd_root_degree_seven_basis():
    ctx, qv = params("Fp:7", "2")
    space = hh_basis(7, ctx, qv)
    alg = LambdaQ(ctx, qv)
    expected = {Cochain.standard(alg, 7, j - 1, "x") for j in (1, 4, 7)}
    expected |= {Cochain.standard(alg, 7, j, "y") for j in (1, 4, 7)}
    assert set(space.representatives) == expected


def classes_independent(space, cochains):
    coords = [space.reduce(c) for c in cochains]
    return rank(ExactMatrix.from_columns(space.resolution.ctx, coords, space.dimension)) == len(cochains)


@pytest.mark.parametrize("field,q,n,listed", [
    ("Q", "-1", 2, [(1, 0, 0), ("y", 0, 0), (0, "yx", 0), (0, 0, "x"), (0, 0, 1)]),
    ("Q", "-1", 1, [("x", 0), ("yx", 0), (0, "yx"), (0, "y")]),
    ("Q", "1", 2, [(1, 0, 0), (0, 1, 0), (0, 0, 1), ("yx", 0, 0), (0, "yx", 0), (0, 0, "yx")]),
    ("Q", "1", 1, [("x", 0), ("y", 0), (0, "x"), (0, "y")]),
    ("Q", "0", 2, [("x", 0, 0), (0, 0, "y"), (0, "yx", 0)]),
])
def test_listed_cocycles_form_bases(field, q, n, listed):
    ctx, qv = params(field, q)
    alg = LambdaQ(ctx, qv)
    space = hh_basis(n, ctx, qv)
    cochains = [Cochain.of(alg, *e) for e in listed]
    assert all(space.is_cocycle(c) for c in cochains)
    assert len(cochains) == space.dimension
    assert classes_independent(space, cochains)


@pytest.mark.parametrize("field,q", ALL, ids=ids(ALL))
def test_reduce_and_lift(field, q):
    ctx, qv = params(field, q)
    res = get_resolution(ctx, qv)
    rnd = random.Random(5)
    for n in range(0, 7):
        space = res.hh_basis(n)
        for k, rep in enumerate(space.representatives):
            assert space.reduce(rep) == [1 if i == k else 0 for i in range(space.dimension)]
        if n:
            eta = Cochain.from_vector(res.alg, n - 1, [ctx(rnd.randint(-3, 3)) for _ in range(4 * n)])
            assert all(c == 0 for c in space.reduce(coboundary(eta)))
        coords = [ctx(rnd.randint(-3, 3)) for _ in range(space.dimension)]
        assert space.reduce(space.lift(coords)) == coords


def test_reduce_rejects_non_cocycle():
    ctx, qv = params("Q", "2")
    space = hh_basis(1, ctx, qv)
    with pytest.raises(ValueError):
        space.reduce(Cochain.of(LambdaQ(ctx, qv), 1, 0))


@pytest.mark.parametrize("field,q", ALL, ids=ids(ALL))
def test_structural_reports(field, q):
    ctx, qv = params(field, q)
    assert verify_complex(8, ctx, qv).ok
    assert verify_minimality(8, ctx, qv).ok
    assert verify_comultiplication(6, ctx, qv).ok


def test_comultiplication_formal():
    assert verify_comultiplication(10).ok


def test_comultiplication_example():
    f1 = f_word_coefficients(1)
    f2 = f_word_coefficients(2)
    # f^2_1 = f^1_0 (x) f^1_1 + q f^1_1 (x) f^1_0
    rhs = {a + b: e for a, b, e in [(next(iter(f1[0].terms)), next(iter(f1[1].terms)), 0),
                                    (next(iter(f1[1].terms)), next(iter(f1[0].terms)), 1)]}
    assert rhs == f2[1].terms


def test_cochain_validation():
    alg = LambdaQ(rationals(), 2)
    with pytest.raises(ValueError):
        Cochain(2, (alg.one,))
    with pytest.raises(ValueError):
        Cochain.from_vector(alg, 1, [0] * 5)
    with pytest.raises(ValueError):
        delta_star_matrix(0, rationals(), 2)
    with pytest.raises(ValueError):
        hh_dimension(-1, rationals(), 2)
