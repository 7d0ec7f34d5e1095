import random
import sys

from hhq.exactfield import make_field, parse_scalar
from hhq.resolution import Cochain, coboundary

# One parameter choice per regime, plus a characteristic-0 root of unity.
REPRESENTATIVES = [
    ("Q", "2"),       # Generic
    ("Fp:7", "2"),    # OddRoot(3)
    ("Fp:5", "2"),    # EvenRootOrChar2(4)
    ("Fp:2", "1"),    # Char2Q1
    ("Q", "-1"),      # QMinusOne
    ("Q", "1"),       # QOne
    ("Q", "0"),       # QZero
]
EXTRA = [("cyclo:3", "zeta"), ("Fp:13", "5")]


def params(field, q):
    ctx = make_field(field)
    return ctx, parse_scalar(ctx, q)


def ids(cases):
    return [f"{f}|q={q}" for f, q in cases]


def random_scalar(ctx, rng, lo=-3, hi=3):
    v = ctx(rng.randint(lo, hi))
    if ctx.kind == "cyclotomic":
        v = v + ctx(rng.randint(lo, hi)) * ctx.generator()
    return v


def random_cocycle(res, n, rnd, with_coboundary=True):
    """A random cocycle of degree n: random class plus (optionally) a random coboundary."""
    ctx = res.ctx
    space = res.hh_basis(n)
    c = space.lift([random_scalar(ctx, rnd) for _ in range(space.dimension)])
    if with_coboundary and n:
        eta = Cochain.from_vector(res.alg, n - 1, [random_scalar(ctx, rnd) for _ in range(4 * n)])
        c = c + coboundary(eta)
    return c


def random_degrees(rnd, k, total):
    while True:
        ds = [rnd.randint(0, total) for _ in range(k)]
        if sum(ds) <= total:
            return ds


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines.values()):
            terminalreporter.write_line(line)
