"""Acceptance criteria 1 to 11, each under its runtime limit.

Every criterion prints one PASS/FAIL line (also collected into the pytest
terminal summary).
"""

import itertools
import json
import random
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from math import prod

import pytest

from k3colorings.certify import CERTIFICATE_NAMES, Verdict, decide, run_certificate_suite
from k3colorings.cli import main
from k3colorings.cluster import colors_form_matchings, is_two_free, peel_blue, peel_upper_bound_expr
from k3colorings.counting import (
    build_construction,
    count_pattern_free,
    full_enumeration_count,
    naive_count_pattern_free,
    verify_construction_identity,
)
from k3colorings.graph import Graph, all_labeled_graphs, canonical_graph6, complete_graph, turan_graph
from k3colorings.optimize import c_k, c_k_star, cbar_k, ctilde_k, r0_r1, solve_s1
from k3colorings.patterns import TWO, is_pattern_free
from k3colorings.stability import AugmentedGraph, ay_find_triangle, furedi_partition, max_bipartite_subgraph

from . import conftest
from .generators import random_ay_instance, random_triangle_free, random_two_free_cluster, random_two_free_complete

Q = Fraction


@contextmanager
def criterion(number: int, title: str, limit: float):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        passed = ok and elapsed < limit
        line = f"criterion {number} {'PASS' if passed else 'FAIL'} {elapsed:.2f}s (limit {limit:g}s) {title}"
        conftest.ACCEPTANCE_LINES.append(line)
        print(line, file=sys.stderr)
    assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"


def cli_lines(capsys, *argv):
    capsys.readouterr()
    assert main(list(argv)) == 0
    return [json.loads(s) for s in capsys.readouterr().out.splitlines()]


def test_criterion_01_table1(capsys):
    expected = [(6, 2, "5/3"), (7, 3, "7/5"), (8, 4, "14/11"), (9, 5, "6/5"),
                (10, 4, "3/2"), (11, 4, "55/34"), (12, 3, "11/5")]
    with criterion(1, "Table 1 reproduction", 1):
        lines = cli_lines(capsys, "table1", "--no-timing")
        got = [(l["r"], l["factors"][0]["base"], l["factors"][0]["exp"]) for l in lines]
        assert got == expected and all(len(l["factors"]) == 1 for l in lines)


def test_criterion_02_s1_lp():
    with criterion(2, "LP for 13 <= r <= 26", 1):
        for r in range(13, 27):
            r0, _ = r0_r1(r)
            sol = solve_s1(r)
            values = dict(zip(sol.problem.names, sol.values))
            assert values.pop("x3") == Q(1, 12) and values.pop(f"x{r0}") == Q(1, 4)
            assert all(v == 0 for v in values.values())


def test_criterion_03_construction():
    rng = random.Random(3)
    with criterion(3, "construction identity and samples", 5):
        for n in (4, 8, 12):
            fam = build_construction(n)
            assert fam.size == 27 ** (n * n // 4) and verify_construction_identity(n)
            for _ in range(50):
                assert is_pattern_free(fam.sample(rng), TWO)


def test_criterion_04_oracle_equivalence():
    rng = random.Random(4)
    with criterion(4, "pruned counter vs full enumeration", 60):
        for n in range(1, 5):
            for g in all_labeled_graphs(n):
                for r in (2, 3):
                    assert count_pattern_free(g, r).value == naive_count_pattern_free(g, r)
        pairs = list(itertools.combinations(range(5), 2))
        for _ in range(100):
            g = Graph(5, [e for e in pairs if rng.random() < 0.5])
            assert count_pattern_free(g, 2).value == naive_count_pattern_free(g, 2)


def test_criterion_05_triangle_closed_form():
    k3 = complete_graph(3)
    with criterion(5, "K3 closed form", 10):
        for r in range(2, 7):
            assert naive_count_pattern_free(k3, r) == r + r * (r - 1) * (r - 2)
        for r in range(2, 28):
            assert count_pattern_free(k3, r).value == r + r * (r - 1) * (r - 2)


def test_criterion_06_k4_r27():
    k4 = complete_graph(4)
    t0 = time.perf_counter()
    pruned = count_pattern_free(k4, 27).value
    pruned_time = time.perf_counter() - t0
    with criterion(6, "K4 at r = 27 beats 27^4, full 27^6 cross-check", 600):
        assert pruned_time < 10
        assert pruned == 245155977 > 27**4
        assert full_enumeration_count(k4, 27) == pruned


def test_criterion_07_certificates():
    with criterion(7, "certificate suite", 5):
        suite = run_certificate_suite(Q(1, 1000))
        assert [c.name for c in suite] == list(CERTIFICATE_NAMES)
        for c in suite:
            assert c.ok, c.name
            if c.threshold is not None:
                assert c.threshold_verdict is Verdict.PROVED, c.name
            if c.probe is not None:
                assert c.probe_verdict is Verdict.REFUTED, c.name
        for alpha in (Q(1, 10**6), Q(1, 1000)):
            (w,) = run_certificate_suite(alpha, names=["C-W4-R27"])
            assert w.verdict is Verdict.REFUTED


def test_criterion_08_optimization_chain():
    rng = random.Random(8)
    with criterion(8, "optimization chain", 30):
        for k in range(2, 8):
            for r in range(2, 28):
                assert c_k_star(k, r) <= cbar_k(k, r).value
        done = 0
        while done < 500:
            k, r = rng.randint(2, 7), rng.randint(2, 27)
            h = random_two_free_complete(rng, k, r)
            if h is None:
                continue
            assert is_two_free(h)
            total = prod(len(L) for L in h.lists)
            assert total <= ctilde_k(k, r)
            if colors_form_matchings(h):
                assert total <= c_k(k, r)
            done += 1


def test_criterion_09_peeling():
    rng = random.Random(9)
    with criterion(9, "peeling accounting", 30):
        for _ in range(200):
            r = rng.choice([13, 20, 26])
            h = random_two_free_cluster(rng, rng.randint(1, 10), r, r0_r1(r)[1])
            t = peel_blue(h)
            assert t.identity_holds()
            peeled = set(range(h.m)) - set(t.remainder_vertices)
            actual = prod(len(L) for (i, j), L in h.list_map().items() if i in peeled or j in peeled)
            verdict, _ = decide(actual, "<=", peel_upper_bound_expr(t, r, Q(1, 1000)))
            assert verdict is Verdict.PROVED


def test_criterion_10_stability():
    rng = random.Random(10)
    with criterion(10, "stability procedures", 60):
        done = 0
        while done < 100:
            inst = random_ay_instance(rng)
            if inst is None:
                continue
            base, new = inst
            w = ay_find_triangle(AugmentedGraph(base, new))
            i, j, k = w.vertices
            combined = base.add_edges(new)
            assert combined.has_edge(i, j) and combined.has_edge(i, k) and combined.has_edge(j, k)
            newset = {tuple(sorted(e)) for e in new}
            assert sum(e in newset for e in ((i, j), (i, k), (j, k))) == 1
            done += 1
        for _ in range(200):
            g = random_triangle_free(rng, rng.randint(3, 14))
            _, internal = furedi_partition(g)
            assert internal <= (g.n * g.n // 4) - g.m
            b = max_bipartite_subgraph(g)
            assert g.m == 0 or 2 * len(b.crossing) > g.m


def test_criterion_11_extremal_search(capsys):
    with criterion(11, "exhaustive extremal search", 60):
        (five,) = cli_lines(capsys, "search", "--n", "5", "--r", "2", "--pattern", "two", "--no-timing")
        assert five["value"] == "64" and five["argmax"] == [canonical_graph6(turan_graph(5, 2))]
        (three,) = cli_lines(capsys, "search", "--n", "3", "--r", "27", "--no-timing")
        assert three["value"] == "17577" and three["argmax"] == [canonical_graph6(complete_graph(3))]
