#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Run:  python benchmarks/bench_backends.py [--repeats 3]

Covers the four hot paths: uniform stream generation, digit extraction,
product log-sums, and fresh-factor geometric sequences.  The numba path
is warmed up first so JIT compilation never lands in a timing.
"""
import argparse
import time

import numpy as np

from benfordlab import _backend, kernels
from benfordlab.rng import uniform_stream

if not _backend.HAVE_NUMBA:
    raise SystemExit("numba is not installed; nothing to compare")


def timeit(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    digits_input = uniform_stream(1, 0, 2_000_000) * 6.0 - 3.0

    cases = [
        (
            "uniform stream (1e7)",
            lambda: kernels.uniforms_numba(np.uint64(3), np.uint64(0), np.int64(10_000_000)),
            lambda: kernels.uniforms_numpy(3, 0, 10_000_000),
        ),
        (
            "digits base 10 pos 1 (2e6)",
            lambda: kernels.digits_numba(digits_input, 10, 1),
            lambda: kernels.digits_numpy(digits_input, 10, 1),
        ),
        (
            "digits base 8 pos 2 (2e6)",
            lambda: kernels.digits_numba(digits_input, 8, 2),
            lambda: kernels.digits_numpy(digits_input, 8, 2),
        ),
        (
            "product sums M=400 (1e5 samples)",
            lambda: kernels.product_sums_uniform_numba(np.uint64(5), 100_000, 400, 5.0, 1.0),
            lambda: kernels.product_sums_uniform_numpy(5, 100_000, 400, 5.0, 1.0),
        ),
        (
            "geometric fresh (1e4 terms, 5e7 draws)",
            lambda: kernels.geometric_fresh_numba(np.uint64(7), 10_000, 1.0, 8.9),
            lambda: kernels.geometric_fresh_numpy(7, 10_000, 1.0, 8.9),
        ),
    ]

    # warm up JIT outside the timings
    for _, numba_fn, _np_fn in cases:
        numba_fn()

    print(f"{'kernel':<40} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    for name, numba_fn, numpy_fn in cases:
        t_nb = timeit(numba_fn, args.repeats)
        t_np = timeit(numpy_fn, args.repeats)
        print(f"{name:<40} {t_nb:>9.3f}s {t_np:>9.3f}s {t_np / t_nb:>8.2f}x")


if __name__ == "__main__":
    main()
