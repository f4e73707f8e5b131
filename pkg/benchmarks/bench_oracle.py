#!/usr/bin/env python3
"""Time the chain-oracle kernel: numba vs numpy vs the plain Python loop.

    python benchmarks/bench_oracle.py [--repeat N] [--skip-python]

Each case is (ovals on chains, min runs, max runs, vertex base); the
numba kernel is warmed up once so compile time is reported separately.
"""

import argparse
import time

from mcurve_schemes import _kernels

CASES = [
    # (label, n, r_min, r_max, with_base)
    ("k=4 a=0 b=27 vertex", 26, 2, 2, True),
    ("k=5 a=3 b=14 vertex", 13, 3, 6, True),
    ("k=5 a=3 b=14 exterior", 14, 3, 5, False),
    ("k=6 a=4 b=20 vertex", 19, 4, 8, True),
    ("k=7 a=4 b=22 vertex", 21, 5, 9, True),
]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-python", action="store_true", help="skip the uncompiled loop")
    args = ap.parse_args()

    if _kernels.HAVE_NUMBA:
        t0 = time.perf_counter()
        _kernels.extremes_numba(3, 1, 2, True)
        print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.2f}s\n")

    header = f"{'case':<24}{'configs':>12}{'numba s':>11}{'numpy s':>11}{'python s':>11}  extremes"
    print(header)
    print("-" * len(header))
    for label, n, r_min, r_max, base in CASES:
        size = _kernels.configuration_count(n, r_min, r_max, base)
        t_np, res_np = best_of(lambda: _kernels.extremes_numpy(n, r_min, r_max, base), args.repeat)
        t_nb = float("nan")
        if _kernels.HAVE_NUMBA:
            t_nb, res_nb = best_of(lambda: _kernels.extremes_numba(n, r_min, r_max, base), args.repeat)
            assert res_nb == res_np, (label, res_nb, res_np)
        t_py = float("nan")
        if not args.skip_python and size <= 2_000_000:
            t_py, res_py = best_of(lambda: _kernels.extremes_loop_python(n, r_min, r_max, base), 1)
            assert res_py == res_np
        print(f"{label:<24}{size:>12,}{t_nb:>11.4f}{t_np:>11.4f}{t_py:>11.4f}  ({res_np[0]}, {res_np[1]})")


if __name__ == "__main__":
    main()
