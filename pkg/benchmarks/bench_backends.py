#!/usr/bin/env python3
"""Race the compiled kernels against the pure-Python fallback.

Three workloads cover the package's hot loops:

* scalar digamma evaluations (the density formulas),
* rotated-zeta Z(t) over a scan-sized grid (the zero oracle),
* a coupled flow + Pinney trajectory at tight tolerance (the dynamics).

Usage:  python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

import numpy as np

from milnezeta import CoulombParams, PhaseState, backend, integrate_coupled
from milnezeta.zeros_oracle import _z_many


def time_best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_digamma() -> None:
    zs = [complex(0.25, 0.5 * t) for t in np.linspace(0.1, 400.0, 20_000)]
    for z in zs:
        backend.digamma(z)


def bench_z_scan() -> None:
    _z_many(np.arange(10.0, 60.0, 0.01))


def bench_coupled() -> None:
    p = CoulombParams(eps=2.0, k=1.0)
    grid = np.linspace(1.0, 10.0, 50)
    integrate_coupled(PhaseState(y=1.0, q=0.7, p=-0.3), 1.2, 0.1, p, 10.0,
                      rtol=1e-10, atol=1e-12, y_eval=grid)


WORKLOADS = (
    ("digamma x 20000", bench_digamma),
    ("Z(t) scan grid [10,60) step 0.01", bench_z_scan),
    ("coupled trajectory rtol 1e-10", bench_coupled),
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    names = backend.available_backends()
    print(f"available backends: {', '.join(names)}")
    if "cython" not in names:
        print("compiled kernels not built; timing the pure backend only")

    rows = []
    for label, fn in WORKLOADS:
        timings = {}
        for name in names:
            with backend.force(name):
                fn()  # warm-up (coefficient caches, allocator)
                timings[name] = time_best(fn, args.repeat)
        rows.append((label, timings))

    width = max(len(label) for label, _ in WORKLOADS)
    header = f"{'workload':<{width}}  " + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, timings in rows:
        line = f"{label:<{width}}  " + "".join(
            f"{timings[n] * 1e3:>10.2f}ms" for n in names
        )
        if len(names) == 2:
            line += f"{timings['python'] / timings['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
