#!/usr/bin/env python3
"""Timing comparison of the pure-Python and compiled scan kernels.

Runs the permutation scan and the affine zero count on a few representative
sizes with each backend and prints a table with speedups.  Both backends
return bit-identical results; the script asserts that while it times them.

Usage:
    python benchmarks/bench_backends.py [--repeat N] [--full]
"""

import argparse
import time

from permrat import backend
from permrat.curves import collision_curve, count_affine, criterion_sextic
from permrat.field import make_field
from permrat.maps import MapSpec, is_permutation, trace_class_reps


def time_call(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def scenarios(full):
    scans = [(5, 4), (5, 5), (7, 4)]
    if full:
        scans += [(11, 5), (13, 5)]
    for p, n in scans:
        ctx = make_field(p, n)
        spec = MapSpec(ctx, trace_class_reps(ctx)[0])
        yield (
            f"perm_scan F_{p}^{n} ({ctx.order} elements)",
            lambda name, s=spec: is_permutation(s, backend_name=name),
        )
    counts = [("G", 97, 2), ("G", 61, 5)]
    for builtin, p, tau in counts:
        ctx = make_field(p, 1)
        poly = criterion_sextic(ctx, tau)
        yield (
            f"count_zeros {builtin} over F_{p} ({p * p} points)",
            lambda name, q=poly: count_affine(q, backend_name=name),
        )
    ctx = make_field(5, 3)
    poly = collision_curve(ctx, trace_class_reps(ctx)[0])
    yield (
        f"count_zeros collision curve over F_125 ({125 * 125} points)",
        lambda name, q=poly: count_affine(q, backend_name=name),
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--full", action="store_true",
                        help="include the large F_{11^5} and F_{13^5} scans")
    args = parser.parse_args()

    if not backend.have_compiled():
        print("compiled kernel not built; timing the pure backend only\n")

    header = f"{'scenario':<52} {'pure':>10} {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, fn in scenarios(args.full):
        t_pure, r_pure = time_call(lambda: fn("pure"), args.repeat)
        if backend.have_compiled():
            t_comp, r_comp = time_call(lambda: fn("compiled"), args.repeat)
            assert r_pure == r_comp, f"backend mismatch in {name}"
            print(f"{name:<52} {t_pure:>9.4f}s {t_comp:>9.4f}s {t_pure / t_comp:>8.1f}x")
        else:
            print(f"{name:<52} {t_pure:>9.4f}s {'-':>10} {'-':>9}")


if __name__ == "__main__":
    main()
