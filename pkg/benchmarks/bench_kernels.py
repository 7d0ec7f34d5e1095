"""Compare the numba and pure-numpy mod-p elimination kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--oracle-degree 4]

Workloads: bar-complex coboundary matrices over F_7 (the real hot path) and
dense random matrices.  Every run also checks that both kernels return the
same rank and pivots.
"""

import argparse
import statistics
import time

import numpy as np

from hhq import _kernels
from hhq.barcomplex import bar_differential_matrix
from hhq.exactfield import prime_field


def timed(fn, a, p, repeat):
    times, result = [], None
    for _ in range(repeat):
        work = a.copy()
        t0 = time.perf_counter()
        result = fn(work, p)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def workloads(oracle_degree, seed):
    ctx = prime_field(7)
    for n in range(2, oracle_degree + 1):
        m = bar_differential_matrix(n, ctx, 2)
        yield f"bar d^{n} over F_7 {m.shape}", np.asarray(m.data, dtype=np.int64), 7
    rng = np.random.default_rng(seed)
    for shape in [(512, 512), (2048, 512), (1024, 1024)]:
        yield f"random {shape} mod 65521", rng.integers(0, 65521, size=shape, dtype=np.int64), 65521


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--oracle-degree", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if not _kernels.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")

    # compile once outside the timings
    _kernels.rref_mod_p_numba(np.eye(3, dtype=np.int64), 7)

    print(f"{'workload':42s} {'numpy s':>9s} {'numba s':>9s} {'speedup':>8s}")
    for name, a, p in workloads(args.oracle_degree, args.seed):
        t_np, r_np = timed(_kernels.rref_mod_p_numpy, a, p, args.repeat)
        t_nb, r_nb = timed(_kernels.rref_mod_p_numba, a, p, args.repeat)
        if r_np[0] != r_nb[0] or list(r_np[1]) != list(r_nb[1]):
            raise SystemExit(f"kernels disagree on {name}")
        print(f"{name:42s} {t_np:9.3f} {t_nb:9.3f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
