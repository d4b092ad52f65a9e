#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Times the three hot paths (polynomial multiplication, polynomial-matrix
rank, rational RREF) on deterministic random inputs and prints one table
row per case.  Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 11]
"""

import argparse
import random
import time
from fractions import Fraction

from alphadet.kernels import _kernel_py

try:
    from alphadet.kernels import _kernel_c
except ImportError:
    _kernel_c = None


def rand_poly(rng, deg, bound=50):
    return [rng.randint(-bound, bound) for _ in range(deg + 1)]


def rand_zmatrix(rng, rows, cols, deg):
    return [[rand_poly(rng, rng.randint(0, deg)) for _ in range(cols)] for _ in range(rows)]


def rand_qmatrix(rng, rows, cols):
    return [
        [Fraction(rng.randint(-30, 30), rng.randint(1, 12)) for _ in range(cols)]
        for _ in range(rows)
    ]


def bench(fn, args_list, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


CASES = {
    "zp_mul deg 40, 200 products": lambda rng: [
        (rand_poly(rng, 40), rand_poly(rng, 40)) for _ in range(200)
    ],
    "zpm_rank 12x12 deg 6": lambda rng: [
        (rand_zmatrix(rng, 12, 12, 6),) for _ in range(4)
    ],
    "zpm_rank 8x20 deg 4": lambda rng: [
        (rand_zmatrix(rng, 8, 20, 4),) for _ in range(6)
    ],
    "qm_rref 30x30": lambda rng: [(rand_qmatrix(rng, 30, 30),) for _ in range(4)],
    "qm_rref 20x50": lambda rng: [(rand_qmatrix(rng, 20, 50),) for _ in range(4)],
}

FUNCS = {
    "zp_mul deg 40, 200 products": "zp_mul",
    "zpm_rank 12x12 deg 6": "zpm_rank",
    "zpm_rank 8x20 deg 4": "zpm_rank",
    "qm_rref 30x30": "qm_rref",
    "qm_rref 20x50": "qm_rref",
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="best-of repetitions")
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()

    if _kernel_c is None:
        print("compiled kernel not built; timing the Python fallback only")

    width = max(len(name) for name in CASES)
    header = f"{'case':<{width}}  {'python':>10}"
    if _kernel_c is not None:
        header += f"  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, make in CASES.items():
        fname = FUNCS[name]
        rng = random.Random(args.seed)
        args_list = make(rng)
        t_py = bench(getattr(_kernel_py, fname), args_list, args.repeat)
        line = f"{name:<{width}}  {t_py * 1e3:>8.2f}ms"
        if _kernel_c is not None:
            t_c = bench(getattr(_kernel_c, fname), args_list, args.repeat)
            line += f"  {t_c * 1e3:>8.2f}ms  {t_py / t_c:>7.1f}x"
            # both backends must agree on the answer
            out_py = getattr(_kernel_py, fname)(*args_list[0])
            out_c = getattr(_kernel_c, fname)(*args_list[0])
            assert out_py == out_c, f"backend mismatch in {fname}"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
