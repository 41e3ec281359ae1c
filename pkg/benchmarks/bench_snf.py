"""Benchmark: compiled Smith-normal-form kernel vs the pure-Python path.

Usage::

    python3 benchmarks/bench_snf.py [--sizes 20,40,80,120] [--repeats 3]

Matrices are cellular-boundary-like: a few small entries per column, the
regime the homology engine lives in. Two workloads are timed on identical
inputs:

* ``full``      the complete decomposition with unimodular transforms,
* ``diagonal``  invariant factors only (what homology computations need).

``fallbacks`` counts inputs whose reduction legitimately left the 64-bit
range and was redone exactly in the pure path; those timings include the
retry, mirroring what the automatic dispatcher does.
"""

from __future__ import annotations

import argparse
import random
import time

from towercalc.matrix import Matrix
from towercalc.snf import HAVE_COMPILED_KERNEL, invariant_diagonal, smith_normal_form


def boundary_like(rng: random.Random, rows: int, cols: int) -> Matrix:
    data = [[0] * cols for _ in range(rows)]
    for j in range(cols):
        for i in rng.sample(range(rows), min(rows, rng.randint(2, 4))):
            data[i][j] = rng.choice((1, -1, 1, -1, 2, -2))
    return Matrix.from_rows(data, cols=cols)


def run_full(mats, method: str) -> tuple[float, int]:
    fallbacks = 0
    start = time.perf_counter()
    for m in mats:
        if method == "compiled":
            try:
                smith_normal_form(m, method="compiled")
            except OverflowError:
                fallbacks += 1
                smith_normal_form(m, method="pure")
        else:
            smith_normal_form(m, method="pure")
    return time.perf_counter() - start, fallbacks


def run_diagonal(mats, method: str) -> tuple[float, int]:
    fallbacks = 0
    start = time.perf_counter()
    for m in mats:
        if method == "compiled":
            try:
                invariant_diagonal(m, method="compiled")
            except OverflowError:
                fallbacks += 1
                invariant_diagonal(m, method="pure")
        else:
            invariant_diagonal(m, method="pure")
    return time.perf_counter() - start, fallbacks


def main() -> None:
    parser = argparse.ArgumentParser(
        description="compare the compiled and pure Smith-normal-form paths"
    )
    parser.add_argument("--sizes", default="20,40,80,120")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)

    print(f"compiled kernel available: {HAVE_COMPILED_KERNEL}")
    header = (
        f"{'workload':>9} {'size':>6} {'pure (s)':>10} {'compiled (s)':>13}"
        f" {'speedup':>8} {'fallbacks':>10}"
    )
    print(header)
    print("-" * len(header))
    for size in sizes:
        mats = [boundary_like(rng, size, size) for _ in range(args.repeats)]
        for label, runner in (("full", run_full), ("diagonal", run_diagonal)):
            t_pure, _ = runner(mats, "pure")
            if HAVE_COMPILED_KERNEL:
                t_fast, fallbacks = runner(mats, "compiled")
                speedup = t_pure / t_fast if t_fast > 0 else float("inf")
                print(
                    f"{label:>9} {size:>6} {t_pure:>10.4f} {t_fast:>13.4f}"
                    f" {speedup:>7.1f}x {fallbacks:>10}"
                )
            else:
                print(f"{label:>9} {size:>6} {t_pure:>10.4f} {'n/a':>13} {'n/a':>8} {'n/a':>10}")


if __name__ == "__main__":
    main()
