import itertools
import random

import pytest

from hhq.algebra import LambdaQ, centre_basis, classify
from hhq.exactfield import INFINITE, make_field, mult_order, parse_scalar, prime_field, rationals
from hhq.linalg import ExactMatrix, kernel_basis, rank

from conftest import EXTRA, REPRESENTATIVES, ids, params, random_scalar


def test_multiplication_table():
    alg = LambdaQ(rationals(), 2)
    x, y, yx, one = alg.x, alg.y, alg.yx, alg.one
    assert x * y == yx.scale(-2)
    assert y * x == yx
    assert (x * x).is_zero() and (y * y).is_zero()
    for a in (x, y, yx):
        assert (a * yx).is_zero() and (yx * a).is_zero()
    assert (one + x) * (one + y) == one + x + y - yx.scale(2)


@pytest.mark.parametrize("field,q", REPRESENTATIVES + EXTRA, ids=ids(REPRESENTATIVES + EXTRA))
def test_associative_on_basis(field, q):
    ctx, qv = params(field, q)
    alg = LambdaQ(ctx, qv)
    b = [alg.basis(i) for i in range(4)]
    for u, v, w in itertools.product(b, repeat=3):
        assert (u * v) * w == u * (v * w)


@pytest.mark.parametrize("ctx", [rationals(), prime_field(5), prime_field(11), make_field("cyclo:5")], ids=str)
def test_associative_random_q(ctx):
    rnd = random.Random(7)
    for _ in range(5):
        alg = LambdaQ(ctx, random_scalar(ctx, rnd, -9, 9))
        b = [alg.basis(i) for i in range(4)]
        assert all((u * v) * w == u * (v * w) for u, v, w in itertools.product(b, repeat=3))


def brute_centre_dimension(alg):
    # kernel of a -> (xa - ax, ya - ay) as a map k^4 -> k^8
    cols = []
    for i in range(4):
        a = alg.basis(i)
        cols.append(list((alg.x * a - a * alg.x).coeffs) + list((alg.y * a - a * alg.y).coeffs))
    m = ExactMatrix.from_columns(alg.ctx, cols, 8)
    return 4 - rank(m), kernel_basis(m)


@pytest.mark.parametrize("field,q", REPRESENTATIVES + EXTRA + [("Fp:3", "2")], ids=ids(REPRESENTATIVES + EXTRA + [("Fp:3", "2")]))
def test_centre_matches_commutant(field, q):
    ctx, qv = params(field, q)
    alg = LambdaQ(ctx, qv)
    z = centre_basis(ctx, qv)
    for c in z:
        assert c * alg.x == alg.x * c and c * alg.y == alg.y * c
    dim, _ = brute_centre_dimension(alg)
    span = ExactMatrix.from_columns(ctx, [list(c.coeffs) for c in z], 4)
    assert rank(span) == len(z) == dim


def test_centre_examples():
    assert [str(c) for c in centre_basis(rationals(), 2)] == ["1", "yx"]
    assert len(centre_basis(rationals(), -1)) == 4
    assert len(centre_basis(prime_field(2), 1)) == 4


@pytest.mark.parametrize("field,q,case", [
    ("Q", "2", "Generic"), ("Fp:7", "2", "OddRoot(3)"), ("Fp:5", "2", "EvenRootOrChar2(4)"),
    ("Fp:2", "1", "Char2Q1"), ("Q", "-1", "QMinusOne"), ("Q", "1", "QOne"), ("Q", "0", "QZero"),
    ("Fp:3", "2", "QMinusOne"), ("cyclo:3", "zeta", "OddRoot(3)"), ("cyclo:3", "-zeta", "EvenRootOrChar2(6)"),
    ("Fp:13", "5", "EvenRootOrChar2(4)"), ("Fp:2", "0", "QZero"),
])
def test_classify(field, q, case):
    ctx, qv = params(field, q)
    assert str(classify(ctx, qv)) == case


@pytest.mark.parametrize("field", ["Q", "Fp:2", "Fp:3", "Fp:7", "Fp:11", "Fp:13", "cyclo:4", "cyclo:5"])
def test_classify_consistent_with_order(field):
    ctx = make_field(field)
    rnd = random.Random(field)
    for _ in range(20):
        q = random_scalar(ctx, rnd, -12, 12)
        case, order = classify(ctx, q), mult_order(q)
        if order == 0:
            assert case.tag == "QZero"
        elif order == INFINITE:
            assert case.tag == "Generic"
        elif order == 1:
            assert case.tag == ("Char2Q1" if ctx.characteristic == 2 else "QOne")
        elif order == 2:
            assert case.tag == "QMinusOne"
        else:
            assert case.r == order
            assert case.tag == ("OddRoot" if order % 2 and ctx.characteristic != 2 else "EvenRootOrChar2")


def test_element_errors():
    alg = LambdaQ(rationals(), 2)
    with pytest.raises(ValueError):
        alg.element([1, 2, 3])
    other = LambdaQ(rationals(), 3)
    with pytest.raises(ValueError):
        alg.x * other.y
    assert parse_scalar(rationals(), "2") == alg.q
