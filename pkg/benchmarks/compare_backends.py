#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Each workload builds its groups from scratch inside the selected backend so
construction, closure sweeps and verdicts all run on the same code path.
Run after warming the JIT cache once:

    python3 benchmarks/compare_backends.py --repeat 3
"""

import argparse
import time

import numpy as np

from flexgroup import backends
from flexgroup.flexibility import cycliciser, flexibility_profile, min_generators
from flexgroup.gengraph import get_graph
from flexgroup.specs import parse_group_spec


def w_closure_sweep():
    g = parse_group_spec("Aff(5,2,2)")
    table, e = g.table, g.identity
    for x in range(g.order):
        backends.closure_mask(table, np.array([x], dtype=np.int64), e)
    for x in range(0, g.order, 5):
        for y in range(x + 1, g.order, 5):
            backends.closure_mask(table, np.array([x, y], dtype=np.int64), e)


def w_cycliciser():
    for spec in ("Aff(5,2,2)", "MM(13,3,1,3)", "E(3,4)"):
        g = parse_group_spec(spec)
        cycliciser(g)


def w_rank_and_profile():
    for spec in ("E(2,5)", "E(3,3)", "Aff(3,3,2)"):
        g = parse_group_spec(spec)
        min_generators(g)
        flexibility_profile(g)


def w_generation_graph():
    g = parse_group_spec("E(2,6)")
    get_graph(g).ensure_full()


WORKLOADS = [
    ("closure sweep, order 100", w_closure_sweep),
    ("cycliciser, three groups", w_cycliciser),
    ("rank + profile, three groups", w_rank_and_profile),
    ("full generation graph, order 64", w_generation_graph),
]


def run(repeat: int) -> None:
    names = backends.available_backends()
    print(f"backends: {', '.join(names)}  (repeat={repeat}, best-of shown)")
    header = f"{'workload':<34}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, fn in WORKLOADS:
        best = {}
        for name in names:
            with backends.use_backend(name):
                fn()  # warm-up: JIT compile, page in tables
                times = []
                for _ in range(repeat):
                    t0 = time.perf_counter()
                    fn()
                    times.append(time.perf_counter() - t0)
                best[name] = min(times)
        row = f"{label:<34}"
        for name in names:
            row += f"{best[name] * 1000:>10.1f}ms"
        if "numba" in best and "numpy" in best:
            row += f"{best['numpy'] / best['numba']:>9.1f}x"
        print(row)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    run(args.repeat)


if __name__ == "__main__":
    main()
