#!/usr/bin/env python3
"""Benchmark the compiled sampling kernel against the numpy fallback.

Runs the full Monte Carlo rounding loop on a few instances with each
backend, reports throughput, and checks that both backends produce the
same statistics.

Usage:
    python benchmarks/bench_kernels.py [--samples N] [--seed S]
"""

import argparse
import time

import numpy as np

from girthcut import _kernel_py
from girthcut.graph import builtin, random_regular
from girthcut.rounding import monte_carlo
from girthcut.solution import build_vectors, optimal_profile

try:
    from girthcut import _kernel_cy
except ImportError:
    _kernel_cy = None


def instances():
    yield "heawood k=3", build_vectors(builtin("heawood"), optimal_profile(3, 3), "strict")
    yield "tutte_coxeter k=4", build_vectors(builtin("tutte_coxeter"), optimal_profile(3, 4), "strict")
    g = random_regular(400, 3, min_girth=6, seed=5)
    yield "random n=400 d=3 k=3", build_vectors(g, optimal_profile(3, 3), "strict")


def bench(kernel_env: str, sol, samples: int, seed: int):
    import os

    os.environ["GIRTHCUT_KERNEL"] = kernel_env
    start = time.perf_counter()
    report = monte_carlo(sol, samples, seed=seed)
    elapsed = time.perf_counter() - start
    return elapsed, report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=200_000)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    if _kernel_cy is None:
        print("compiled kernel not built; benchmarking the python kernel only")
        backends = ["python"]
    else:
        backends = ["python", "compiled"]

    print(f"{'instance':<24} {'kernel':<9} {'samples':>9} {'time [s]':>9} "
          f"{'samples/s':>12} {'mean':>9}")
    for name, sol in instances():
        results = {}
        for backend in backends:
            elapsed, report = bench(backend, sol, args.samples, args.seed)
            results[backend] = report
            print(f"{name:<24} {backend:<9} {args.samples:>9} {elapsed:>9.3f} "
                  f"{args.samples / elapsed:>12.0f} {report.mean_fraction:>9.6f}")
        if len(results) == 2:
            same = (
                results["python"].mean_fraction == results["compiled"].mean_fraction
                and results["python"].std_error == results["compiled"].std_error
                and np.array_equal(results["python"].best.assignment,
                                   results["compiled"].best.assignment)
            )
            print(f"{'':<24} backends agree: {same}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
