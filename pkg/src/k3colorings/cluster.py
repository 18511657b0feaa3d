"""Cluster graphs whose edges carry lists of colors.

A cluster graph ``H`` on ``m`` vertices assigns each edge ``e`` a nonempty list
``L_e`` of colors.  The key quantity is ``c(H) = prod |L_e|^(1/m^2)``; for
the larger color counts edges are split into blue (long lists) and green
(short lists), and blue edges are peeled off two vertices at a time.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .certify.interval import CertValue, power
from .certify.lognum import LogNumber
from .errors import InvariantViolation, PreconditionViolation, SizeLimit
from .graph import Edge, Graph, emit_graph6, is_triangle_free, parse_graph6, triangles
from .optimize.params import b_of_r, r0_r1
from .optimize.programs import appendix_coefficient
from .patterns import MAX_TEMPLATE_VERTICES, TWO, Pattern, embeddings


@dataclass(frozen=True)
class ClusterGraph:
    g: Graph
    r: int
    lists: tuple[frozenset[int], ...]  # aligned with g.edges

    def __post_init__(self):
        if len(self.lists) != self.g.m:
            raise ValueError("one list per edge required")
        for e, L in zip(self.g.edges, self.lists):
            if not L:
                raise ValueError(f"edge {e} has an empty list")
            if not all(1 <= c <= self.r for c in L):
                raise ValueError(f"list of {e} leaves the colors 1..{self.r}")

    @classmethod
    def build(cls, g: Graph, r: int, lists: Mapping[Edge, Iterable[int]]) -> "ClusterGraph":
        norm = {tuple(sorted(e)): frozenset(L) for e, L in lists.items()}
        missing = [e for e in g.edges if e not in norm]
        if missing:
            raise ValueError(f"no list for edges {missing}")
        extra = set(norm) - set(g.edges)
        if extra:
            raise ValueError(f"lists given for non-edges {sorted(extra)}")
        return cls(g, r, tuple(norm[e] for e in g.edges))

    @property
    def m(self) -> int:
        return self.g.n

    def list_of(self, i: int, j: int) -> frozenset[int]:
        return self.lists[self.g.edge_index()[(min(i, j), max(i, j))]]

    def list_map(self) -> dict[Edge, frozenset[int]]:
        return dict(zip(self.g.edges, self.lists))

    def sizes(self) -> dict[Edge, int]:
        return {e: len(L) for e, L in zip(self.g.edges, self.lists)}

    def induced(self, vertices: Iterable[int]) -> "ClusterGraph":
        vs = sorted(vertices)
        pos = {v: k for k, v in enumerate(vs)}
        sub = self.g.induced(vs)
        lm = self.list_map()
        return ClusterGraph.build(
            sub, self.r, {(pos[i], pos[j]): L for (i, j), L in lm.items() if i in pos and j in pos}
        )

    def to_json(self) -> str:
        return json.dumps({
            "graph6": emit_graph6(self.g),
            "r": self.r,
            "lists": {f"{i},{j}": sorted(L) for (i, j), L in zip(self.g.edges, self.lists)},
        })

    @classmethod
    def from_json(cls, text: str | Mapping) -> "ClusterGraph":
        d = json.loads(text) if isinstance(text, str) else text
        g = parse_graph6(d["graph6"])
        lists = {tuple(int(x) for x in k.split(",")): v for k, v in d["lists"].items()}
        return cls.build(g, int(d["r"]), lists)


def edge_size_histogram(h: ClusterGraph) -> dict[int, int]:
    return dict(sorted(Counter(len(L) for L in h.lists).items()))


def log_c_of_h(h: ClusterGraph) -> LogNumber:
    """``ln c(H)`` exactly."""
    if h.m < 1:
        raise PreconditionViolation("c(H) needs at least one vertex")
    total = LogNumber.zero()
    for j, e_j in edge_size_histogram(h).items():
        total = total + LogNumber.log_of(j, e_j)
    return total / (h.m * h.m)


def c_of_h(h: ClusterGraph, bits: int = 64) -> CertValue:
    e = log_c_of_h(h).exp_expr()
    q = e.exact()
    return CertValue.exact_value(q) if q is not None else e.interval(bits)


def two_free_witness(h: ClusterGraph) -> tuple[int, int, int] | None:
    """First triangle (lexicographically) whose lists are not pairwise disjoint."""
    lm = h.list_map()
    for i, j, k in triangles(h.g):
        a, b, c = lm[(i, j)], lm[(i, k)], lm[(j, k)]
        if a & b or a & c or b & c:
            return (i, j, k)
    return None


def is_two_free(h: ClusterGraph) -> bool:
    return two_free_witness(h) is None


def _distinct_representatives(options: list[frozenset[int]]) -> bool:
    order = sorted(range(len(options)), key=lambda t: len(options[t]))
    used: set[int] = set()

    def go(t: int) -> bool:
        if t == len(order):
            return True
        for c in options[order[t]]:
            if c not in used:
                used.add(c)
                if go(t + 1):
                    return True
                used.discard(c)
        return False

    return go(0)


def cluster_contains_pattern(h: ClusterGraph, p: Pattern) -> bool:
    """Is there a copy of the template and a choice ``c(e) in L_e`` inducing exactly ``p``?"""
    if p.template.n > MAX_TEMPLATE_VERTICES:
        raise SizeLimit(f"templates limited to {MAX_TEMPLATE_VERTICES} vertices")
    lm = h.list_map()
    classes = [sorted(c) for c in p.classes]
    t_edges = p.template.edges
    for phi in embeddings(p.template, h.g):
        host_lists = [lm[tuple(sorted((phi[a], phi[b])))] for a, b in t_edges]
        options = []
        for cls in classes:
            common = frozenset.intersection(*(host_lists[k] for k in cls))
            if not common:
                break
            options.append(common)
        else:
            if _distinct_representatives(options):
                return True
    return False


def colors_form_matchings(h: ClusterGraph) -> bool:
    """Each color's edges are pairwise vertex-disjoint."""
    for c in range(1, h.r + 1):
        seen = 0
        for (i, j), L in zip(h.g.edges, h.lists):
            if c in L:
                bits = (1 << i) | (1 << j)
                if seen & bits:
                    return False
                seen |= bits
    return True


# blue/green machinery for 13 <= r <= 26


def _require_min_two(h: ClusterGraph) -> None:
    bad = [e for e, L in zip(h.g.edges, h.lists) if not 2 <= len(L) <= h.r]
    if bad:
        raise InvariantViolation(f"list sizes outside [2, r] on edges {bad}")


def classify_blue_green(h: ClusterGraph) -> tuple[frozenset[Edge], frozenset[Edge]]:
    r0, r1 = r0_r1(h.r)
    _require_min_two(h)
    blue = frozenset(e for e, L in zip(h.g.edges, h.lists) if len(L) >= r1)
    green = frozenset(e for e, L in zip(h.g.edges, h.lists) if len(L) <= r0)
    return blue, green


@dataclass(frozen=True)
class PeelStep:
    edge: Edge  # original labels
    n1: int
    n2: int


@dataclass(frozen=True)
class PeelTrace:
    m: int
    r: int
    steps: tuple[PeelStep, ...]
    remainder_vertices: tuple[int, ...]
    remainder: ClusterGraph

    @property
    def k1(self) -> int:
        return len(self.steps)

    @property
    def sum_n2(self) -> int:
        return sum(s.n2 for s in self.steps)

    def identity_holds(self) -> bool:
        lhs = self.k1 + sum(s.n1 + s.n2 for s in self.steps)
        return lhs == self.k1 * self.m - self.k1**2

    def to_dict(self) -> dict:
        return {
            "m": self.m, "r": self.r, "k1": self.k1,
            "steps": [{"edge": list(s.edge), "n1": s.n1, "n2": s.n2} for s in self.steps],
            "remainder_vertices": list(self.remainder_vertices),
            "identity": self.identity_holds(),
        }


def peel_blue(h: ClusterGraph) -> PeelTrace:
    """Remove blue edges (longest list first, then lexicographic) with both endpoints."""
    _, r1 = r0_r1(h.r)
    _require_min_two(h)
    if not is_two_free(h):
        raise PreconditionViolation(f"cluster graph is not two-free (triangle {two_free_witness(h)})")
    size = h.sizes()
    alive = set(range(h.m))
    steps = []
    while True:
        blue = [e for e in h.g.edges if e[0] in alive and e[1] in alive and size[e] >= r1]
        if not blue:
            break
        u, v = min(blue, key=lambda e: (-size[e], e))
        n1 = n2 = 0
        for w in sorted(alive - {u, v}):
            touching = [tuple(sorted((w, x))) for x in (u, v) if h.g.has_edge(w, x)]
            if len(touching) == 1 and size[touching[0]] >= r1:
                n1 += 1
            else:
                n2 += 1
        steps.append(PeelStep((u, v), n1, n2))
        alive -= {u, v}
    rest = tuple(sorted(alive))
    trace = PeelTrace(h.m, h.r, tuple(steps), rest, h.induced(rest))
    if not trace.identity_holds():
        raise InvariantViolation("peeling counts violate the accounting identity")
    return trace


def peel_upper_bound_expr(trace: PeelTrace, r: int, alpha):
    alpha = Fraction(alpha)
    if not 0 < alpha <= Fraction(1, 1000):
        raise PreconditionViolation("alpha must lie in (0, 1/1000]")
    m, k1 = trace.m, trace.k1
    ratio = Fraction(b_of_r(r), r)
    return power(ratio, trace.sum_n2) * power(r, Fraction(m * m, 4) - alpha * (m - 2 * k1) ** 2)


def peel_upper_bound(trace: PeelTrace, r: int, alpha, bits: int = 64) -> CertValue:
    """``(B(r)/r)^(sum n2) * r^(m^2/4 - alpha (m - 2 k1)^2)``, a bound on ``c(H)^(m^2)``."""
    e = peel_upper_bound_expr(trace, r, alpha)
    q = e.exact()
    return CertValue.exact_value(q) if q is not None else e.interval(bits)


def peeled_part_bound(trace: PeelTrace, r: int) -> int:
    """Product bound over edges touching peeled pairs: ``r`` per blue edge and ``r``/``B(r)`` per vertex type."""
    b = b_of_r(r)
    total = 1
    for s in trace.steps:
        total *= r ** (1 + s.n1) * b**s.n2
    return total


# color-pair averaging for r <= 12


@dataclass(frozen=True)
class ColorPairResult:
    S: tuple[int, int] | None
    covered: frozenset[Edge]
    bound: CertValue
    bound_exact: Fraction
    triangle_free_a: bool

    def to_dict(self) -> dict:
        return {
            "S": list(self.S) if self.S else None,
            "covered": sorted(list(e) for e in self.covered),
            "bound": str(self.bound_exact),
            "achieved": len(self.covered),
            "triangle_free": self.triangle_free_a,
        }


def best_color_pair(h: ClusterGraph) -> ColorPairResult:
    r = h.r
    if r > 12:
        raise PreconditionViolation("color-pair averaging is for r <= 12")
    _require_min_two(h)
    mid = [(e, L) for e, L in zip(h.g.edges, h.lists) if 2 <= len(L) <= r - 4]
    bound = sum((appendix_coefficient(r, len(L)) for _, L in mid), Fraction(0))
    best_S, best_cov = None, frozenset()
    for S in itertools.combinations(range(1, r + 1), 2):
        cov = frozenset(e for e, L in mid if L & set(S))
        if best_S is None or len(cov) > len(best_cov):
            best_S, best_cov = S, cov
    if len(best_cov) < bound:
        raise InvariantViolation("best pair covers fewer edges than the average")
    long_edges = [e for e, L in zip(h.g.edges, h.lists) if len(L) >= r - 3]
    sub = Graph(h.m, list(best_cov) + long_edges)
    tf = is_triangle_free(sub)
    if is_two_free(h) and not tf:
        raise InvariantViolation("covered subgraph has a triangle although H is two-free")
    return ColorPairResult(best_S, best_cov, CertValue.exact_value(bound), bound, tf)
