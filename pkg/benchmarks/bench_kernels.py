#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the pure-Python twins.

Usage: python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from cubictrace import _kernels
from cubictrace.algebra import ZpCubicAlgebra, canonical_algebra


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not _kernels.HAVE_SPEEDUPS:
        print("compiled kernels not built: benchmarking pure path only")

    print(f"{'kernel':<42}{'pure':>10}{'compiled':>10}{'speedup':>9}")

    for p in (31, 61, 101):
        B = canonical_algebra(p, "inert")
        t_pure, h1 = bench(
            lambda: _kernels.trace_norm_histogram(p, B.f, force_pure=True), args.repeat
        )
        if _kernels.HAVE_SPEEDUPS:
            t_fast, h2 = bench(
                lambda: _kernels.trace_norm_histogram(p, B.f), args.repeat
            )
            assert h1 == h2
            print(f"{'trace_norm_histogram p=%d' % p:<42}{t_pure:>9.3f}s{t_fast:>9.3f}s{t_pure / t_fast:>8.1f}x")
        else:
            print(f"{'trace_norm_histogram p=%d' % p:<42}{t_pure:>9.3f}s{'-':>10}{'-':>9}")

    for p, k, total in ((7, 5, 200_000), (11, 5, 500_000)):
        A = ZpCubicAlgebra(p, k, canonical_algebra(p, "inert").f)
        eta, gamma, c = (1, 1, 0), (1, 2, 3), 0
        t_pure, z1 = bench(
            lambda: _kernels.zero_class_sweep(
                p, k, total, eta, gamma, A.f_int, c, force_pure=True
            ),
            args.repeat,
        )
        if _kernels.HAVE_SPEEDUPS:
            t_fast, z2 = bench(
                lambda: _kernels.zero_class_sweep(p, k, total, eta, gamma, A.f_int, c),
                args.repeat,
            )
            assert z1 == z2
            label = f"zero_class_sweep p={p} k={k} n={total}"
            print(f"{label:<42}{t_pure:>9.3f}s{t_fast:>9.3f}s{t_pure / t_fast:>8.1f}x")
        else:
            label = f"zero_class_sweep p={p} k={k} n={total}"
            print(f"{label:<42}{t_pure:>9.3f}s{'-':>10}{'-':>9}")


if __name__ == "__main__":
    main()
