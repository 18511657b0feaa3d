"""Color patterns of small template graphs and pattern detection in edge colorings.

A pattern is a partition of the template's edges into classes.  A coloring
contains the pattern when some (not necessarily induced) copy of the template
in the host induces exactly that partition, up to renaming of classes and
automorphisms of the template.  Automorphisms are handled implicitly: every
injective vertex map is tried.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import SizeLimit
from .graph import Edge, Graph, complete_graph, emit_graph6, parse_graph6, triangles

MAX_TEMPLATE_VERTICES = 5


class TriangleKind(enum.Enum):
    MONO = "mono"
    RAINBOW = "rainbow"
    TWO = "two"


@dataclass(frozen=True)
class Pattern:
    template: Graph
    classes: frozenset[frozenset[int]]

    def __init__(self, template: Graph, classes: Iterable[Iterable[int]]):
        cs = [frozenset(c) for c in classes]
        if any(not c for c in cs):
            raise ValueError("pattern classes must be nonempty")
        flat = [e for c in cs for e in c]
        if len(flat) != len(set(flat)):
            raise ValueError("pattern classes overlap")
        if set(flat) != set(range(template.m)):
            raise ValueError("pattern classes must cover every template edge")
        object.__setattr__(self, "template", template)
        object.__setattr__(self, "classes", frozenset(cs))

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def is_triangle(self) -> bool:
        return self.template.n == 3 and self.template.m == 3

    def to_json(self) -> str:
        classes = sorted(sorted(c) for c in self.classes)
        return json.dumps({"template": emit_graph6(self.template), "classes": classes})

    @classmethod
    def from_json(cls, text: str | Mapping) -> "Pattern":
        d = json.loads(text) if isinstance(text, str) else text
        return cls(parse_graph6(d["template"]), d["classes"])


def triangle_pattern(kind: TriangleKind | str) -> Pattern:
    """The three patterns of ``K_3``; edges are indexed (0,1), (0,2), (1,2)."""
    kind = TriangleKind(kind.lower()) if isinstance(kind, str) else kind
    k3 = complete_graph(3)
    if kind is TriangleKind.MONO:
        return Pattern(k3, [{0, 1, 2}])
    if kind is TriangleKind.RAINBOW:
        return Pattern(k3, [{0}, {1}, {2}])
    return Pattern(k3, [{0, 1}, {2}])


MONO = triangle_pattern(TriangleKind.MONO)
RAINBOW = triangle_pattern(TriangleKind.RAINBOW)
TWO = triangle_pattern(TriangleKind.TWO)


@dataclass(frozen=True)
class EdgeColoring:
    """Colors in ``1..r``, stored in the host's canonical edge order."""

    host: Graph
    colors: tuple[int, ...]
    r: int

    def __post_init__(self):
        if len(self.colors) != self.host.m:
            raise ValueError("one color per host edge required")
        if any(not 1 <= c <= self.r for c in self.colors):
            raise ValueError(f"colors must lie in 1..{self.r}")

    @classmethod
    def from_mapping(cls, host: Graph, color_of: Mapping[Edge, int], r: int) -> "EdgeColoring":
        return cls(host, tuple(color_of[e] for e in host.edges), r)

    def color_map(self) -> dict[Edge, int]:
        return dict(zip(self.host.edges, self.colors))

    def color(self, i: int, j: int) -> int:
        return self.color_map()[(i, j) if i < j else (j, i)]


def embeddings(template: Graph, host: Graph) -> Iterator[tuple[int, ...]]:
    """Injective maps ``V(F) -> V(G)`` sending edges to edges, in lexicographic order."""
    k = template.n
    earlier_nbrs = [[s for s in range(t) if template.has_edge(s, t)] for t in range(k)]
    phi: list[int] = []
    used = 0

    def rec() -> Iterator[tuple[int, ...]]:
        nonlocal used
        t = len(phi)
        if t == k:
            yield tuple(phi)
            return
        cand = ((1 << host.n) - 1) & ~used
        for s in earlier_nbrs[t]:
            cand &= host.adj[phi[s]]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            phi.append(v)
            used |= low
            yield from rec()
            used ^= low
            phi.pop()

    yield from rec()


def _check_template(p: Pattern) -> None:
    if p.template.n > MAX_TEMPLATE_VERTICES:
        raise SizeLimit(f"pattern templates are limited to {MAX_TEMPLATE_VERTICES} vertices")


def induced_partition(p: Pattern, phi: Sequence[int], color_of: Mapping[Edge, int]) -> frozenset[frozenset[int]]:
    groups: dict[int, set[int]] = {}
    for idx, (a, b) in enumerate(p.template.edges):
        x, y = phi[a], phi[b]
        groups.setdefault(color_of[(x, y) if x < y else (y, x)], set()).add(idx)
    return frozenset(frozenset(g) for g in groups.values())


def _generic_witness(c: EdgeColoring, p: Pattern) -> tuple[int, ...] | None:
    color_of = c.color_map()
    for phi in embeddings(p.template, c.host):
        if induced_partition(p, phi, color_of) == p.classes:
            return phi
    return None


def _triangle_witness(c: EdgeColoring, p: Pattern) -> tuple[int, ...] | None:
    color_of = c.color_map()
    target = p.num_classes
    best = None
    for i, j, k in triangles(c.host):
        if len({color_of[(i, j)], color_of[(i, k)], color_of[(j, k)]}) != target:
            continue
        sub = Graph(c.host.n, [(i, j), (i, k), (j, k)])
        for phi in embeddings(p.template, sub):
            if induced_partition(p, phi, color_of) == p.classes:
                if best is None or phi < best:
                    best = phi
                break
    return best


def contains_pattern(c: EdgeColoring, p: Pattern, generic: bool = False) -> tuple[bool, tuple[int, ...] | None]:
    """Whether ``c`` contains ``p``; the second item is the least witness tuple.

    Triangle patterns use the distinct-color count of each triangle unless
    ``generic`` forces the partition-isomorphism search.
    """
    _check_template(p)
    if p.is_triangle and not generic:
        w = _triangle_witness(c, p)
    else:
        w = _generic_witness(c, p)
    return w is not None, w


def triangle_distinct_counts(c: EdgeColoring) -> Iterator[int]:
    color_of = c.color_map()
    for i, j, k in triangles(c.host):
        yield len({color_of[(i, j)], color_of[(i, k)], color_of[(j, k)]})


def is_pattern_free(c: EdgeColoring, p: Pattern, generic: bool = False) -> bool:
    _check_template(p)
    if p.is_triangle and not generic:
        # the partition a triangle induces is fixed by how many colors it shows
        return all(d != p.num_classes for d in triangle_distinct_counts(c))
    return _generic_witness(c, p) is None
