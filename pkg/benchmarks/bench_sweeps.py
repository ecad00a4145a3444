#!/usr/bin/env python3
"""Benchmark the compiled sweep kernels against the pure-Python fallback.

Workloads: full identity sweeps on elementary abelian loops (the Moufang and
ID4 identities hold there, so nothing short-circuits) and a term-fingerprint
batch like the one the identity explorer runs.  Usage::

    python3 benchmarks/bench_sweeps.py
"""

import time

from steinerloops import _pysweep
from steinerloops.constructions import elementary_abelian_loop, steiner_loop_10
from steinerloops.explorer import enumerate_terms
from steinerloops.terms import BUILTIN_IDENTITIES, compile_rpn

try:
    from steinerloops import _fastsweep
except ImportError:
    _fastsweep = None

REPEATS = 3


def best_of(fn):
    times = []
    for _ in range(REPEATS):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def identity_workloads():
    for order_exp, name in ((5, "MOUFANG"), (5, "ID4"), (6, "MOUFANG")):
        loop = elementary_abelian_loop(order_exp)
        ident = BUILTIN_IDENTITIES[name]
        var_order = {v: i for i, v in enumerate(ident.variables)}
        lhs = compile_rpn(ident.lhs, var_order)
        rhs = compile_rpn(ident.rhs, var_order)
        k = len(ident.variables)
        label = f"{name} sweep on order {loop.m} ({loop.m ** k} assignments)"
        yield label, lambda b, a=(lhs, rhs, loop.m, loop.flat(), k): b.first_divergence(*a)


def fingerprint_workload():
    loop = steiner_loop_10()
    flat = loop.flat()
    var_order = {"x": 0, "y": 1, "z": 2}
    codes = [compile_rpn(t, var_order) for t in enumerate_terms("xyz", 6)]
    label = f"fingerprint batch: {len(codes)} terms x 1000 assignments"

    def run(backend):
        for code in codes:
            backend.fingerprint(code, loop.m, flat, 3)

    yield label, run


def main():
    backends = [("python", _pysweep)]
    if _fastsweep is not None:
        backends.insert(0, ("compiled", _fastsweep))
    else:
        print("note: compiled extension not built; timing the fallback only")
    width = 58
    print(f"{'workload':<{width}} " + " ".join(f"{name:>10}" for name, _ in backends)
          + ("    speedup" if len(backends) == 2 else ""))
    for label, work in list(identity_workloads()) + list(fingerprint_workload()):
        timings = [best_of(lambda b=backend: work(b)) for _, backend in backends]
        row = f"{label:<{width}} " + " ".join(f"{t * 1000:>8.1f}ms" for t in timings)
        if len(timings) == 2:
            row += f"    {timings[1] / timings[0]:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
