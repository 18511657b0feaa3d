import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from k3colorings.errors import ParseError, SizeLimit
from k3colorings.graph import (
    Graph,
    VertexPartition,
    all_labeled_graphs,
    canonical_graph6,
    clique_number,
    complete_graph,
    cycle_graph,
    emit_graph6,
    empty_graph,
    ex_k3,
    find_clique,
    parse_graph6,
    path_graph,
    petersen_graph,
    read_graph6_lines,
    triangles,
    turan_graph,
    turan_parts,
)

from .conftest import random_graph
from .oracles import max_clique_brute, naive_triangles


graphs = st.integers(0, 12).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))
                      .filter(lambda e: e[0] != e[1]), max_size=30).map(lambda es: Graph(n, es))
)


class TestGraphBasics:
    def test_edges_sorted_and_deduplicated(self):
        g = Graph(4, [(3, 1), (0, 2), (1, 3), (2, 0)])
        assert g.edges == ((0, 2), (1, 3))

    def test_rejects_loops_and_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_common_neighbors_and_degree(self):
        k4 = complete_graph(4)
        assert k4.common_neighbors(0, 1) == [2, 3]
        assert k4.degree(2) == 3

    def test_induced_relabels_in_order(self):
        g = cycle_graph(5).induced([1, 2, 4])
        assert g.edges == ((0, 1),)

    def test_complement_of_c5_is_c5(self):
        assert len(cycle_graph(5).complement().edges) == 5

    def test_partition_rejects_overlap_and_gaps(self):
        with pytest.raises(ValueError):
            VertexPartition([{0, 1}, {1, 2}])
        with pytest.raises(ValueError):
            VertexPartition([{0}, {2}], n=3)
        assert VertexPartition([{0, 2}, {1}], n=3).internal_edges(complete_graph(3)) == 1


class TestTuran:
    def test_t2_5_parts_and_edges(self):
        assert [list(p) for p in turan_parts(5, 2)] == [[0, 1, 2], [3, 4]]
        assert turan_graph(5, 2).m == 6

    def test_t4_4_is_k4(self):
        assert turan_graph(4, 4).edges == complete_graph(4).edges

    def test_t4_8_edge_count(self):
        # 8^2 (1 - 1/4) / 2
        assert turan_graph(8, 4).m == 24

    def test_t2_edges_equal_ex(self):
        for n in range(1, 201):
            assert turan_graph(n, 2).m == ex_k3(n)

    @pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 13) for k in range(1, 6)])
    def test_turan_is_clique_free(self, n, k):
        assert clique_number(turan_graph(n, k)) == min(n, k)


def test_ex_k3_values():
    assert (ex_k3(3), ex_k3(4), ex_k3(1000)) == (2, 4, 250000)


class TestTriangles:
    def test_k4(self):
        assert triangles(complete_graph(4)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

    def test_bipartite_has_none(self):
        assert triangles(turan_graph(6, 2)) == []

    def test_c5_with_chord(self):
        assert triangles(cycle_graph(5).add_edges([(0, 2)])) == [(0, 1, 2)]

    def test_random_against_triple_loop(self):
        rng = random.Random(11)
        for _ in range(200):
            g = random_graph(rng, rng.randint(0, 12), rng.random())
            assert triangles(g) == naive_triangles(g.n, g.edges)


class TestClique:
    def test_known(self):
        assert clique_number(complete_graph(6)) == 6
        assert clique_number(turan_graph(8, 4)) == 4
        assert clique_number(petersen_graph()) == 2
        assert clique_number(empty_graph(3)) == 1

    def test_random_against_brute_force(self):
        rng = random.Random(5)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 9), rng.random())
            assert clique_number(g) == max_clique_brute(g.n, g.edges)

    def test_find_clique_returns_clique(self):
        c = find_clique(turan_graph(9, 3), 3)
        assert c is not None and all(turan_graph(9, 3).has_edge(a, b) for a, b in itertools.combinations(c, 2))
        assert find_clique(petersen_graph(), 3) is None

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            clique_number(empty_graph(33))


class TestGraph6:
    def test_k3(self):
        assert emit_graph6(complete_graph(3)) == "Bw"

    def test_round_trip_literal(self):
        g = parse_graph6("D?{")
        assert g.n == 5 and emit_graph6(g) == "D?{"

    @pytest.mark.parametrize("bad", ["", "A", "B", "Bwx", "~??", "B\x7f", "Bx"])
    def test_malformed(self, bad):
        with pytest.raises(ParseError):
            parse_graph6(bad)

    def test_error_reports_offset(self):
        with pytest.raises(ParseError) as info:
            parse_graph6("C~~~~")
        assert "at byte" in str(info.value)

    def test_header_and_lines(self):
        got = list(read_graph6_lines([">>graph6<<Bw\n", "\n", "A_\n"]))
        assert [g.m for g in got] == [3, 1]

    @settings(max_examples=200, deadline=None)
    @given(graphs)
    def test_round_trip_property(self, g):
        assert parse_graph6(emit_graph6(g)) == g

    @settings(max_examples=100, deadline=None)
    @given(graphs)
    def test_matches_networkx_encoding(self, g):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        ref = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert emit_graph6(g) == ref


class TestCanonical:
    def test_isomorphic_graphs_share_canonical_form(self):
        rng = random.Random(2)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 7))
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_graph6(g) == canonical_graph6(g.relabel(perm))

    def test_labeled_graph_count(self):
        assert sum(1 for _ in all_labeled_graphs(4)) == 64

    def test_paths_distinguished_from_stars(self):
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert canonical_graph6(star) != canonical_graph6(path_graph(4))
