#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Two workloads mirror the package's hot paths:

* series: truncated products of the kind the jet-coefficient expansion
  performs (dense term dicts with a capped t slot);
* reduction: complete normal forms against a fixed basis, the inner loop
  of every Groebner run.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time
from fractions import Fraction

from jetfibers import _kernel_py as pure

try:
    from jetfibers import _kernel as compiled
except ImportError:
    compiled = None


def _series_workload(kernel):
    # (sum_i z_i t^i)^4 truncated at t^10, 12 slots: t plus 11 variables
    width = 12
    cap = 10
    series = {}
    for i in range(1, width):
        mono = [0] * width
        mono[0] = i - 1
        mono[i] = 1
        series[tuple(mono)] = Fraction(1)
    acc = {tuple([0] * width): Fraction(1)}
    for _ in range(4):
        acc = kernel.mul_terms(acc, series, 0, cap)
    return len(acc)


def _reduction_workload(kernel):
    # reduce a fat polynomial against a three-element basis, grevlex
    width = 6
    basis_src = [
        {(2, 0, 0, 0, 0, 0): Fraction(1), (0, 1, 0, 1, 0, 0): Fraction(-1)},
        {(0, 2, 0, 0, 0, 0): Fraction(1), (0, 0, 1, 0, 1, 0): Fraction(-2)},
        {(0, 0, 2, 0, 0, 1): Fraction(1), (0, 0, 0, 1, 1, 0): Fraction(3)},
    ]
    gens, leads, lcs = [], [], []
    for g in basis_src:
        lead, lc = kernel.lead_term(g, 0, 0)
        gens.append({m: c / lc for m, c in g.items()})
        leads.append(lead)
        lcs.append(Fraction(1))
    p = {}
    for a in range(4):
        for b in range(3):
            for c in range(3):
                p[(a, b, c, (a + b) % 3, (b + c) % 2, a % 2)] = Fraction(
                    a * 9 + b * 3 + c + 1, 2
                )
    out = kernel.normal_form(p, gens, leads, lcs, 0, 0)
    return len(out)


WORKLOADS = [("series", _series_workload), ("reduction", _reduction_workload)]


def run(kernel, repeat):
    results = {}
    for name, fn in WORKLOADS:
        best = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            for _ in range(20):
                fn(kernel)
            elapsed = (time.perf_counter() - t0) / 20
            best = elapsed if best is None else min(best, elapsed)
        results[name] = best
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rows = [("workload", "pure (ms)", "compiled (ms)", "speedup")]
    pure_times = run(pure, args.repeat)
    compiled_times = run(compiled, args.repeat) if compiled else {}
    for name, _ in WORKLOADS:
        p = pure_times[name] * 1e3
        if compiled:
            c = compiled_times[name] * 1e3
            rows.append((name, f"{p:.3f}", f"{c:.3f}", f"{p / c:.2f}x"))
        else:
            rows.append((name, f"{p:.3f}", "not built", "-"))

    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    if compiled is None:
        print("\ncompiled kernel missing; run: pip install -e . --no-build-isolation")


if __name__ == "__main__":
    main()
