"""Time the compiled kernels against their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case runs once per backend (best of ``--repeat``) and the two results
are checked for equality before the timings are reported.
"""

from __future__ import annotations

import argparse
import itertools
import random
import time

from k3colorings import kernels
from k3colorings.counting import closing_pairs
from k3colorings.graph import Graph, complete_graph, triangles


def _counter_case(g: Graph, r: int, symmetry: bool):
    start, pa, pb = closing_pairs(g, list(g.edges))
    hi = 1 if symmetry else r

    def run(mod):
        counts, nodes, _ = mod.count_triangle_pattern(g.m, start, pa, pb, r, 1 << 2, 0, hi, symmetry, 10**12)
        return tuple(counts), nodes

    return run


def _naive_case(g: Graph, r: int):
    idx = g.edge_index()
    ts = triangles(g)
    ta = [idx[(i, j)] for i, j, k in ts]
    tb = [idx[(i, k)] for i, j, k in ts]
    tc = [idx[(j, k)] for i, j, k in ts]
    return lambda mod: int(mod.naive_count(g.m, ta, tb, tc, r, 1 << 2))


def _bipartition_case(n: int, seed: int):
    rng = random.Random(seed)
    g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])
    return lambda mod: tuple(mod.min_internal_bipartition(g.n, list(g.adj)))


CASES = [
    ("pruned counter, K4, r=12", _counter_case(complete_graph(4), 12, False)),
    ("pruned counter, K5, r=6", _counter_case(complete_graph(5), 6, False)),
    ("pruned counter, K5, r=27, up to renaming", _counter_case(complete_graph(5), 27, True)),
    ("full enumeration, K4, r=8", _naive_case(complete_graph(4), 8)),
    ("bipartition scan, n=14", _bipartition_case(14, 1)),
    ("bipartition scan, n=16", _bipartition_case(16, 2)),
]


def _best(fn, mod, repeat: int):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(mod)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    if not kernels.has_compiled():
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'case':44} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in CASES:
        tp, out_p = _best(fn, kernels.BACKENDS["python"], a.repeat)
        if kernels.has_compiled():
            tc, out_c = _best(fn, kernels.BACKENDS["compiled"], a.repeat)
            if out_c != out_p:
                raise SystemExit(f"backends disagree on {name}: {out_p} vs {out_c}")
            print(f"{name:44} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")
        else:
            print(f"{name:44} {tp:10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
