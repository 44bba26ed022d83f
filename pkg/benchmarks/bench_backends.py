#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the hot paths behind the library: disc enumeration, overlap
counting over a verification sweep grid, boundary tests, and Hausdorff
distance.  Run after ``pip install -e . --no-build-isolation``:

    python benchmarks/bench_backends.py
"""

import random
import time

from discprox._backend import available_backends


def best_of(runs, fn):
    best = None
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_disc_points(k):
    def run():
        for _ in range(20):
            k.disc_points(0, 0, 64)
    return run


def bench_intersection_grid(k):
    def run():
        for r1 in range(13):
            for r2 in range(13):
                for g in range(13):
                    k.intersection_card(0, 0, r1, g, g // 2, r2)
    return run


def bench_boundaries_grid(k):
    def run():
        for r1 in range(25):
            for r2 in range(25):
                for g in range(25):
                    k.boundaries_share_pixel(0, 0, r1, g, 0, r2)
    return run


def bench_hausdorff(k):
    rng = random.Random(42)
    pa = [(rng.randint(-300, 300), rng.randint(-300, 300)) for _ in range(1500)]
    pb = [(rng.randint(-300, 300), rng.randint(-300, 300)) for _ in range(1500)]

    def run():
        k.hausdorff_points(pa, pb)
    return run


CASES = (
    ("disc_points r=64 x20", bench_disc_points),
    ("intersection sweep 13^3", bench_intersection_grid),
    ("boundary sweep 25^3", bench_boundaries_grid),
    ("hausdorff 1500x1500", bench_hausdorff),
)


def main():
    backends = available_backends()
    names = sorted(backends)
    print(f"backends: {', '.join(names)}")
    header = f"{'case':<26}" + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, make in CASES:
        times = {}
        for name in names:
            times[name] = best_of(3, make(backends[name]))
        row = f"{label:<26}" + "".join(f"{times[n] * 1e3:>10.1f}ms" for n in names)
        if len(names) == 2:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
