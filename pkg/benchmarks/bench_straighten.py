#!/usr/bin/env python3
"""Benchmark the straightening kernels on the bar-involution workload.

For each degree m the workload straightens the fully reversed basis words of
every partition of m (the dominant cost of computing bar matrices and the
canonical bases).  Both kernels run on identical inputs; differences are
reported as a speedup factor.

Usage: python3 benchmarks/bench_straighten.py [--max-m 10] [-n 2]
"""

from __future__ import annotations

import argparse
import time

from fockcanon import _straighten_py
from fockcanon.partitions import partitions_of
from fockcanon.wedge import partition_to_word

try:
    from fockcanon import _straighten as _compiled
except ImportError:
    _compiled = None


def workload(n: int, m: int):
    return [
        (partition_to_word(lam, max(m, 1))[::-1], {0: 1})
        for lam in partitions_of(m)
    ]


def run(kernel, items, n: int) -> tuple[float, int]:
    t0 = time.perf_counter()
    total_terms = 0
    for word, poly in items:
        out = kernel.straighten_terms([(word, dict(poly))], n)
        total_terms += len(out)
    return time.perf_counter() - t0, total_terms


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=10)
    parser.add_argument("-n", type=int, default=2)
    args = parser.parse_args()

    kernels = [("python", _straighten_py)]
    if _compiled is not None:
        kernels.append(("cython", _compiled))
    else:
        print("compiled kernel not available; timing the fallback only")

    print(f"{'m':>3} {'words':>6}", *(f"{name:>12}" for name, _ in kernels),
          f"{'speedup':>9}" if _compiled else "")
    for m in range(2, args.max_m + 1):
        items = workload(args.n, m)
        times = []
        terms = None
        for name, kernel in kernels:
            elapsed, total = run(kernel, items, args.n)
            if terms is None:
                terms = total
            elif total != terms:
                raise AssertionError(f"kernel outputs differ at m={m}")
            times.append(elapsed)
        row = [f"{m:>3} {len(items):>6}"]
        row += [f"{t:>11.4f}s" for t in times]
        if len(times) == 2 and times[1] > 0:
            row.append(f"{times[0] / times[1]:>8.1f}x")
        print(" ".join(row))


if __name__ == "__main__":
    main()
