#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the pure-Python reference kernels.

Runs the same workloads through both implementations and prints a timing
table.  Requires the compiled extension to be built (pip install -e . or
python setup.py build_ext --inplace).
"""

import argparse
import math
import sys
import time

from ordlift import _pykernels

try:
    from ordlift import _kernels
except ImportError:
    _kernels = None


def bench(fn, *args, repeat=3):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def order_scan_sweep(kernels, n_max, a_max):
    total = 0
    for n in range(1, n_max + 1):
        for a in range(2, a_max + 1):
            if math.gcd(a, n) == 1:
                total += kernels.order_scan(a, n)
    return total


def proj_scan_sweep(kernels, n_max, a_max):
    total = 0
    for n in range(1, n_max + 1):
        for a in range(2, a_max + 1):
            if math.gcd(a, n) == 1:
                total += kernels.proj_order_scan(a, n)
    return total


def triangle_batch(kernels, modulus, length, reps):
    seq = [(3 + 7 * k) % modulus for k in range(length)]
    for _ in range(reps):
        kernels.triangle_counts(seq, modulus)


def search_batch(kernels, modulus, length):
    return kernels.search_balanced_ap(modulus, length)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=1200,
                        help="modulus bound for the scan sweeps")
    parser.add_argument("--a-max", type=int, default=40,
                        help="base bound for the scan sweeps")
    args = parser.parse_args(argv)

    if _kernels is None:
        print("compiled kernels are not built; nothing to compare")
        return 1

    workloads = [
        (
            f"order scans (n <= {args.n_max}, a <= {args.a_max})",
            lambda impl: order_scan_sweep(impl, args.n_max, args.a_max),
        ),
        (
            f"projective scans (n <= {args.n_max}, a <= {args.a_max})",
            lambda impl: proj_scan_sweep(impl, args.n_max, args.a_max),
        ),
        (
            "triangle counts (m = 600 mod 101, 50 reps)",
            lambda impl: triangle_batch(impl, 101, 600, 50),
        ),
        (
            "balanced-AP search (n = 15, m = 30)",
            lambda impl: search_batch(impl, 15, 30),
        ),
        (
            "balanced-AP search (n = 45, m = 45)",
            lambda impl: search_batch(impl, 45, 45),
        ),
    ]

    name_width = max(len(name) for name, _ in workloads)
    print(f"{'workload'.ljust(name_width)}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, run in workloads:
        t_py = bench(run, _pykernels)
        t_c = bench(run, _kernels)
        print(f"{name.ljust(name_width)}  {t_py:>9.4f}s  {t_c:>9.4f}s  {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
