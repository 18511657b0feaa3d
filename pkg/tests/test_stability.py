import itertools
import random

import pytest

from k3colorings.errors import InvariantViolation, PreconditionViolation, SizeLimit
from k3colorings.graph import Graph, complete_graph, cycle_graph, ex_k3, path_graph, petersen_graph, turan_graph
from k3colorings.stability import AugmentedGraph, ay_find_triangle, furedi_partition, max_bipartite_subgraph

from .generators import random_ay_instance, random_triangle_free
from .oracles import brute_min_internal


class TestFuredi:
    def test_c5(self):
        part, internal = furedi_partition(cycle_graph(5))
        assert internal == 1 and part.internal_edges(cycle_graph(5)) == 1

    def test_bipartite(self):
        part, internal = furedi_partition(turan_graph(6, 2))
        assert internal == 0 and sorted(map(sorted, part.parts)) == [[0, 1, 2], [3, 4, 5]]

    def test_petersen(self):
        assert furedi_partition(petersen_graph())[1] == 3

    def test_triangle_rejected(self):
        with pytest.raises(PreconditionViolation):
            furedi_partition(complete_graph(3))

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            max_bipartite_subgraph(Graph(25, []))

    def test_random_triangle_free(self):
        rng = random.Random(31)
        for _ in range(200):
            g = random_triangle_free(rng, rng.randint(3, 14))
            part, internal = furedi_partition(g)
            assert internal <= ex_k3(g.n) - g.m
            assert internal == part.internal_edges(g)
            if g.n <= 10:
                assert internal == brute_min_internal(g.n, g.edges)


def test_max_bipartite_exceeds_half_on_dense_graphs():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(2, 10)
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.8])
        b = max_bipartite_subgraph(g)
        assert g.m == 0 or 2 * len(b.crossing) > g.m
        assert len(b.crossing) + len(b.internal) == g.m and 0 in b.side_one


class TestAlonYuster:
    def test_c5_with_chords(self):
        base = cycle_graph(5)
        chords = [e for e in itertools.combinations(range(5), 2) if not base.has_edge(*e)]
        w = ay_find_triangle(AugmentedGraph(base, chords))
        assert w.vertices == (0, 1, 2) and w.new_edge == (0, 2)

    def test_t_zero(self):
        with pytest.raises(PreconditionViolation):
            ay_find_triangle(AugmentedGraph(turan_graph(6, 2), [(0, 1)]))

    def test_p4_violates_t_bound(self):
        base = path_graph(4)
        new = [e for e in itertools.combinations(range(4), 2) if not base.has_edge(*e)]
        with pytest.raises(PreconditionViolation):
            ay_find_triangle(AugmentedGraph(base, new))

    def test_too_few_new_edges(self):
        base = turan_graph(8, 2).induced(range(8))
        base = Graph(8, list(base.edges)[1:])
        with pytest.raises(PreconditionViolation):
            ay_find_triangle(AugmentedGraph(base, [(0, 1)]))

    def test_validation(self):
        with pytest.raises(PreconditionViolation):
            AugmentedGraph(complete_graph(3), [])
        with pytest.raises(PreconditionViolation):
            AugmentedGraph(cycle_graph(5), [(0, 1)])
        with pytest.raises(ValueError):
            AugmentedGraph(cycle_graph(5), [(0, 0)])

    def test_random_instances(self):
        rng = random.Random(77)
        done = 0
        while done < 100:
            inst = random_ay_instance(rng)
            if inst is None:
                continue
            base, new = inst
            w = ay_find_triangle(AugmentedGraph(base, new))
            combined = base.add_edges(new)
            i, j, k = w.vertices
            assert combined.has_edge(i, j) and combined.has_edge(i, k) and combined.has_edge(j, k)
            newset = {tuple(sorted(e)) for e in new}
            assert [e for e in ((i, j), (i, k), (j, k)) if e in newset] == [w.new_edge]
            done += 1
