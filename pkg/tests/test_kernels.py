import itertools
import random

import pytest

from k3colorings import kernels
from k3colorings.counting import closing_pairs
from k3colorings.graph import Graph, complete_graph, petersen_graph

from .oracles import brute_count, brute_min_internal


def _csr(g):
    return closing_pairs(g, list(g.edges))


def _run(name, g, r, forbid=1 << 2, lo=0, hi=1, symmetry=False, budget=10**9):
    start, pa, pb = _csr(g)
    return kernels.BACKENDS[name].count_triangle_pattern(g.m, start, pa, pb, r, forbid, lo, hi, symmetry, budget)


def test_backend_switching_restores_previous():
    before = kernels.backend_name()
    with kernels.backend("python"):
        assert kernels.backend_name() == "python"
    assert kernels.backend_name() == before


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@pytest.mark.skipif(not kernels.has_compiled(), reason="compiled kernels not built")
class TestBackendsAgree:
    def test_counter_on_random_graphs(self):
        rng = random.Random(9)
        for _ in range(40):
            n = rng.randint(2, 5)
            g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.7])
            r = rng.randint(1, 4)
            for forbid in (1 << 1, 1 << 2, 1 << 3):
                for symmetry in (False, True):
                    if symmetry:
                        lo, hi = 0, 1
                    else:
                        lo, hi = 0, r
                    a = _run("python", g, r, forbid, lo, hi, symmetry)
                    b = _run("compiled", g, r, forbid, lo, hi, symmetry)
                    assert list(a[0]) == list(b[0]) and a[1] == b[1] and a[2] == b[2]

    def test_first_edge_split_sums_to_whole(self):
        g = complete_graph(4)
        whole = _run("compiled", g, 6, lo=0, hi=6)[0][0]
        parts = sum(_run(name, g, 6, lo=k, hi=k + 1)[0][0] for k in range(6) for name in ["compiled"])
        assert whole == parts == brute_count(4, g.edges, 6)

    def test_budget_flag(self):
        for name in kernels.BACKENDS:
            counts, nodes, done = _run(name, complete_graph(5), 5, budget=10)
            assert not done

    def test_naive_count(self):
        g = complete_graph(4)
        idx = g.edge_index()
        tris = [(idx[(a, b)], idx[(a, c)], idx[(b, c)]) for a, b, c in itertools.combinations(range(4), 3)]
        ta, tb, tc = (list(x) for x in zip(*tris))
        expect = brute_count(4, g.edges, 4)
        for name in kernels.BACKENDS:
            assert int(kernels.BACKENDS[name].naive_count(g.m, ta, tb, tc, 4, 1 << 2)) == expect

    def test_bipartition_scan(self):
        rng = random.Random(4)
        graphs = [petersen_graph(), Graph(1, []), Graph(2, [(0, 1)])]
        for _ in range(30):
            n = rng.randint(2, 10)
            graphs.append(Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]))
        for g in graphs:
            a = kernels.BACKENDS["python"].min_internal_bipartition(g.n, list(g.adj))
            b = kernels.BACKENDS["compiled"].min_internal_bipartition(g.n, list(g.adj))
            assert tuple(a) == tuple(b)
            assert a[0] == brute_min_internal(g.n, g.edges)


def test_python_bipartition_petersen():
    assert kernels.BACKENDS["python"].min_internal_bipartition(10, list(petersen_graph().adj))[0] == 3
