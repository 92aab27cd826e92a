"""Compiled kernel against the pure-Python fallback on the hot path.

The hot path is type_histogram: stream a conjugacy class of G wr S_n
and histogram the types of w^-1 z (or one of the other three sides)
against a fixed element z.  Everything above it (c_coeff,
product_classes, the polynomial sweeps) is a thin layer over this loop.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--heavy]
"""
import argparse
import time

from wreath_centers.groups import builtin_group
from wreath_centers.kernels import available_backends, type_histogram
from wreath_centers.wreath import (
    PartitionFamily, canonical_representative, class_order,
)

CASES = [
    # label, group spec, streamed family, n, z family
    ("trivial n=8", "trivial", {0: (3, 3, 2)}, 8, {0: (2, 2, 2, 1, 1)}),
    ("order 2  n=7", "cyclic:2", {0: (2, 2), 1: (2, 1)}, 7, {1: (3, 2, 2)}),
    ("order 3  n=6", "cyclic:3", {1: (2, 2, 1, 1)}, 6, {2: (4, 2)}),
    ("sym 3    n=5", "sym:3", {0: (2,), 1: (2,), 2: (1,)}, 5, {1: (3, 2)}),
]

HEAVY = [
    ("order 2  n=9", "cyclic:2", {0: (2, 2, 2), 1: (2, 1)}, 9, {1: (4, 3, 2)}),
    ("sym 3    n=6", "sym:3", {0: (2, 2), 1: (1, 1)}, 6, {2: (3, 2, 1)}),
]


def time_side(G, fam, z, backend, repeat):
    best = None
    hist = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        hist = type_histogram(G, fam, z, side=0, backend=backend)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, hist


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="timed repetitions, best run reported (default 3)")
    ap.add_argument("--heavy", action="store_true",
                    help="add two larger cases (tens of seconds in pure Python)")
    args = ap.parse_args()

    backends = available_backends()
    cases = CASES + (HEAVY if args.heavy else [])
    print("backends available: %s" % ", ".join(backends))
    print()
    header = "%-14s %12s %12s %12s %9s" % (
        "case", "class size", "python", "cython", "speedup")
    print(header)
    print("-" * len(header))
    for label, spec, fam_items, n, z_items in cases:
        G = builtin_group(spec)
        fam = PartitionFamily(fam_items).pad(n)
        zfam = PartitionFamily(z_items).pad(n)
        z = canonical_representative(zfam, n, G)
        size = class_order(fam, G)[1]
        t_py, h_py = time_side(G, fam, z, "python", args.repeat)
        if "cython" in backends:
            t_cy, h_cy = time_side(G, fam, z, "cython", args.repeat)
            if h_py != h_cy:
                raise SystemExit("backend mismatch on %s" % label)
            print("%-14s %12d %11.4fs %11.4fs %8.1fx"
                  % (label, size, t_py, t_cy, t_py / t_cy))
        else:
            print("%-14s %12d %11.4fs %12s %9s" % (label, size, t_py, "-", "-"))
    print()
    print("histograms from both backends compared equal on every case")


if __name__ == "__main__":
    main()
