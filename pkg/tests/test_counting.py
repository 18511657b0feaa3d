import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from k3colorings.counting import (
    build_construction,
    count_pattern_free,
    exhaustive_extremal,
    full_enumeration_count,
    naive_count_pattern_free,
    triangle_components,
    verify_construction_identity,
)
from k3colorings.errors import BudgetExceeded, InvalidPartition, SizeLimit
from k3colorings.graph import Graph, complete_graph, cycle_graph, ex_k3, petersen_graph, turan_graph
from k3colorings.patterns import MONO, RAINBOW, TWO, Pattern, is_pattern_free
from k3colorings.graph import path_graph

from .oracles import brute_count, partition_count

# values produced by tests/oracles.py (set-partition sums, no package code)
K4_R27 = 245155977
K5_R5 = 22325
K5_R27 = 64751652201627
K4_MINUS_EDGE_R27 = 11442627

K4 = complete_graph(4)
K4_MINUS = Graph(4, list(K4.edges)[:-1])


class TestFrozenCounts:
    def test_k4_r27(self, backend):
        assert count_pattern_free(K4, 27, symmetry=True).value == K4_R27

    def test_k4_r27_no_symmetry_compiled(self):
        assert count_pattern_free(K4, 27).value == K4_R27

    def test_k5_r5(self, backend):
        assert count_pattern_free(complete_graph(5), 5).value == K5_R5

    def test_k5_r27(self):
        assert count_pattern_free(complete_graph(5), 27, symmetry=True).value == K5_R27

    def test_k4_minus_edge_r27(self, backend):
        assert count_pattern_free(K4_MINUS, 27, symmetry=True).value == K4_MINUS_EDGE_R27

    def test_k4_small_r(self, backend):
        for r in range(1, 6):
            assert count_pattern_free(K4, r).value == partition_count(4, K4.edges, r)


class TestSmallCases:
    def test_k3(self, backend):
        # one color class, or three distinct colors
        for r in range(1, 10):
            assert count_pattern_free(complete_graph(3), r).value == r + r * (r - 1) * (r - 2)

    def test_triangle_free_host_is_r_to_the_m(self, backend):
        assert count_pattern_free(turan_graph(7, 2), 4).value == 4**12
        assert count_pattern_free(petersen_graph(), 3).value == 3**15

    def test_empty_graph(self, backend):
        assert count_pattern_free(Graph(3, []), 5).value == 1

    def test_needs_a_color(self):
        with pytest.raises(ValueError):
            count_pattern_free(K4, 0)

    def test_budget(self, backend):
        with pytest.raises(BudgetExceeded) as info:
            count_pattern_free(complete_graph(5), 6, node_budget=50)
        assert info.value.nodes_visited >= 0

    def test_other_triangle_patterns(self, backend):
        for p, allowed in ((MONO, (2, 3)), (RAINBOW, (1, 2))):
            for r in (2, 3, 4):
                assert count_pattern_free(K4, r, p).value == partition_count(4, K4.edges, r, allowed)

    def test_generic_pattern_matches_enumeration(self):
        p = Pattern(path_graph(3), [{0}, {1}])
        g = cycle_graph(4)
        assert count_pattern_free(g, 3, p).value == naive_count_pattern_free(g, 3, p) == 3


class TestDecomposition:
    def test_components_of_two_triangles_sharing_a_vertex(self):
        g = Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)])
        comps, free = triangle_components(g)
        assert comps == [[(0, 1), (0, 2), (1, 2)], [(2, 3), (2, 4), (3, 4)]] and free == 1

    def test_decompose_flag_agrees(self, backend):
        rng = random.Random(3)
        for _ in range(25):
            n = rng.randint(3, 6)
            g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6])
            r = rng.randint(1, 4)
            a = count_pattern_free(g, r).value
            assert a == count_pattern_free(g, r, decompose=False).value
            assert a == count_pattern_free(g, r, symmetry=True).value


graphs_small = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2)
    .map(lambda bits: Graph(n, [e for e, b in zip(itertools.combinations(range(n), 2), bits) if b])))


@settings(max_examples=60, deadline=None)
@given(graphs_small, st.integers(1, 3))
def test_count_matches_brute_force(g, r):
    if r ** g.m > 3**10:
        r = 2
    assert count_pattern_free(g, r).value == brute_count(g.n, g.edges, r)


@settings(max_examples=40, deadline=None)
@given(graphs_small, st.integers(1, 4), st.integers(1, 4))
def test_threads_do_not_change_the_count(g, r, threads):
    assert count_pattern_free(g, r, threads=threads).value == count_pattern_free(g, r).value


@settings(max_examples=40, deadline=None)
@given(graphs_small, st.integers(1, 4))
def test_adding_an_edge_never_loses_more_than_factor_r(g, r):
    # every coloring of g extends in at least one way: copy a neighbouring triangle edge's color
    missing = [e for e in itertools.combinations(range(g.n), 2) if not g.has_edge(*e)]
    if not missing:
        return
    h = g.add_edges([missing[0]])
    assert count_pattern_free(h, r).value <= r * count_pattern_free(g, r).value


class TestFullEnumeration:
    def test_small_agreement(self, backend):
        for g, r in ((K4, 3), (K4_MINUS, 4), (complete_graph(3), 5)):
            assert full_enumeration_count(g, r) == count_pattern_free(g, r).value

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            full_enumeration_count(complete_graph(7), 27)

    def test_naive_against_oracle(self):
        assert naive_count_pattern_free(K4, 3) == brute_count(4, K4.edges, 3) == 9


class TestExtremal:
    def test_n3_r3_tie(self):
        # K3 gives r + r(r-1)(r-2) against r^2 for the path; both are 9 at r = 3
        res = exhaustive_extremal(3, 3)
        assert res.value == 9 and res.graphs_examined == 8
        assert "Bw" in res.argmax and len(res.argmax) == 2

    @pytest.mark.parametrize("r", [4, 5, 25, 26, 27])
    def test_n3_k3_wins_from_r4(self, r):
        res = exhaustive_extremal(3, r)
        assert res.value == r + r * (r - 1) * (r - 2) > r * r
        assert res.argmax == ("Bw",)

    def test_n3_r26_closed_form(self):
        assert exhaustive_extremal(3, 26).value == 15626 > 26**2

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            exhaustive_extremal(7, 2)


class TestConstruction:
    def test_family_size_matches_turan_power(self):
        for n in (4, 8, 12):
            fam = build_construction(n)
            assert fam.size == 27 ** (n * n // 4) == 9 ** (6 * n * n // 16)
            assert fam.host.m == 6 * n * n // 16
            assert verify_construction_identity(n)

    def test_samples_are_two_free(self):
        rng = random.Random(0)
        fam = build_construction(8)
        for _ in range(20):
            assert is_pattern_free(fam.sample(rng), TWO)
        assert is_pattern_free(fam.sample(), TWO)

    def test_family_beats_bipartite_count(self):
        n = 8
        assert build_construction(n).size >= 27 ** ex_k3(n)

    @pytest.mark.parametrize("kwargs", [
        {"classes": (tuple(range(1, 10)), tuple(range(1, 10)), tuple(range(19, 28)))},
        {"classes": (tuple(range(1, 9)), tuple(range(9, 19)), tuple(range(19, 28)))},
        {"assignment": (0, 0, 1)},
    ])
    def test_invalid_partitions(self, kwargs):
        with pytest.raises(InvalidPartition):
            build_construction(8, **kwargs)

    def test_n_not_divisible(self):
        with pytest.raises(ValueError):
            build_construction(6)
