#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Times the raw kernels and the full hierarchy build they power. Run:

    python benchmarks/bench_kernels.py [--points 1000000]
"""

import argparse
import random
import time
from array import array

from synopsviz import HierarchyConfig, build_hierarchy, kernels
from synopsviz import _kernels_py

try:
    from synopsviz import _kernels
except ImportError:
    _kernels = None

from synopsviz.facets import PointSet


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_impl(impl, values, subjects, objects, kinds, out_counts, in_counts):
    rows = {}
    rows["slice_stats (1 pass)"], _ = timed(impl.slice_stats, values, 0, len(values))
    for arr in (out_counts, in_counts):
        for i in range(len(arr)):
            arr[i] = 0
    rows["degree_counts"], _ = timed(
        impl.degree_counts, subjects, objects, kinds, out_counts, in_counts, repeat=1
    )
    return rows


def bench_build(point_set, strategy):
    best, _ = timed(
        build_hierarchy, point_set, HierarchyConfig(strategy, 3, 10), repeat=3
    )
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--points", type=int, default=1_000_000)
    args = parser.parse_args()
    n = args.points

    rng = random.Random(99)
    raw = [rng.uniform(0.0, 1e6) for _ in range(n)]

    build_start = time.perf_counter()
    point_set = PointSet(
        "numeric", [(f"http://ex/s{i % 4096}", v, i) for i, v in enumerate(raw)]
    )
    construct = time.perf_counter() - build_start

    values = point_set.values
    n_terms = 200_000
    kinds = array("b", [rng.randrange(3) for _ in range(n_terms)])
    subjects = array("q", [rng.randrange(n_terms) for _ in range(n)])
    objects = array("q", [rng.randrange(n_terms) for _ in range(n)])
    out_counts = array("q", bytes(8 * n_terms))
    in_counts = array("q", bytes(8 * n_terms))

    print(f"points: {n:,}   (PointSet construction incl. sort: {construct:.2f}s)")
    print(f"active kernel implementation: {kernels.IMPLEMENTATION}\n")

    impls = [("python", _kernels_py)]
    if _kernels is not None:
        impls.insert(0, ("cython", _kernels))

    kernel_rows = {}
    for name, impl in impls:
        kernel_rows[name] = bench_impl(
            impl, values, subjects, objects, kinds, out_counts, in_counts
        )

    build_rows = {}
    for name, impl in impls:
        kernels.slice_stats = impl.slice_stats
        kernels.degree_counts = impl.degree_counts
        build_rows[name] = {
            strategy: bench_build(point_set, strategy)
            for strategy in ("equal-width", "equal-frequency")
        }
    # restore the import-time selection
    kernels.slice_stats = kernels._impl.slice_stats
    kernels.degree_counts = kernels._impl.degree_counts

    width = 34
    names = [name for name, _ in impls]
    header = "benchmark".ljust(width) + "".join(f"{n:>14}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    all_keys = list(kernel_rows[names[0]]) + [
        f"build_hierarchy {s}" for s in ("equal-width", "equal-frequency")
    ]
    for key in all_keys:
        cells = []
        for name in names:
            source = kernel_rows[name] if key in kernel_rows[name] else None
            if source is None:
                value = build_rows[name][key.split()[-1]]
            else:
                value = source[key]
            cells.append(value)
        line = key.ljust(width) + "".join(f"{c * 1000:>11.1f} ms" for c in cells)
        if len(cells) == 2 and cells[0] > 0:
            line += f"{cells[1] / cells[0]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
