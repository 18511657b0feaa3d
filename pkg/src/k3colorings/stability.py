"""Stability tools for near-extremal triangle-free graphs, checked exhaustively.

Both routines rest on an exact maximum bipartite subgraph, found by scanning
all ``2^(n-1)`` bipartitions with vertex 0 fixed on the first side (ties go
to the smallest side-one bitmask).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import InvariantViolation, PreconditionViolation, SizeLimit
from .graph import Edge, Graph, VertexPartition, ex_k3, is_triangle_free, triangles

MAX_N = 24


@dataclass(frozen=True)
class Bipartition:
    side_one: frozenset[int]
    side_two: frozenset[int]
    crossing: tuple[Edge, ...]
    internal: tuple[Edge, ...]

    @property
    def partition(self) -> VertexPartition:
        return VertexPartition([self.side_one, self.side_two])


def max_bipartite_subgraph(g: Graph) -> Bipartition:
    """Bipartition maximizing the crossing edges; asserts more than half of all edges cross."""
    if g.n > MAX_N:
        raise SizeLimit(f"exhaustive bipartition scan limited to n <= {MAX_N}")
    _, mask = kernels.min_internal_bipartition(g.n, list(g.adj))
    one = frozenset(v for v in range(g.n) if mask >> v & 1)
    crossing = tuple(e for e in g.edges if (e[0] in one) != (e[1] in one))
    internal = tuple(e for e in g.edges if (e[0] in one) == (e[1] in one))
    if g.m and not 2 * len(crossing) > g.m:
        raise InvariantViolation("bipartite subgraph does not exceed half the edges")
    return Bipartition(one, frozenset(range(g.n)) - one, crossing, internal)


def furedi_partition(g: Graph) -> tuple[VertexPartition, int]:
    """Bipartition with the fewest internal edges; checks that count is at most ``ex(n,K3) - |E|``."""
    if not is_triangle_free(g):
        raise PreconditionViolation("graph contains a triangle")
    b = max_bipartite_subgraph(g)
    t = ex_k3(g.n) - g.m if g.n else 0
    if len(b.internal) > t:
        raise InvariantViolation(f"{len(b.internal)} internal edges exceed t = {t}")
    return b.partition, len(b.internal)


@dataclass(frozen=True)
class AugmentedGraph:
    base: Graph
    new_edges: tuple[Edge, ...]

    def __init__(self, base: Graph, new_edges):
        es = tuple(sorted({(min(i, j), max(i, j)) for i, j in new_edges}))
        if any(i == j or not (0 <= i < base.n and 0 <= j < base.n) for i, j in es):
            raise ValueError("new edges must join two distinct vertices of the base")
        if not is_triangle_free(base):
            raise PreconditionViolation("base graph contains a triangle")
        clash = [e for e in es if base.has_edge(*e)]
        if clash:
            raise PreconditionViolation(f"new edges already present in the base: {clash}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "new_edges", es)

    @property
    def t(self) -> int:
        return ex_k3(self.base.n) - self.base.m

    def combined(self) -> Graph:
        return self.base.add_edges(self.new_edges)


@dataclass(frozen=True)
class WitnessTriangle:
    vertices: tuple[int, int, int]
    new_edge: Edge

    def to_dict(self) -> dict:
        return {"triangle": list(self.vertices), "new_edge": list(self.new_edge)}


def ay_find_triangle(a: AugmentedGraph) -> WitnessTriangle:
    """A triangle of base + new edges using exactly one new edge, built as in the bipartition argument."""
    n, t = a.base.n, a.t
    if n > MAX_N:
        raise SizeLimit(f"limited to n <= {MAX_N}")
    if not 0 < t or not 16 * t < n * n:
        raise PreconditionViolation(f"need 0 < t < n^2/16, got t = {t}, n = {n}")
    if len(a.new_edges) < 5 * t:
        raise PreconditionViolation(f"need at least 5t = {5 * t} new edges, got {len(a.new_edges)}")

    b = max_bipartite_subgraph(a.base)
    e_prime, e_second = b.crossing, b.internal
    f_prime = [e for e in a.new_edges if (e[0] in b.side_one) == (e[1] in b.side_one)]
    pool = Graph(n, list(f_prime) + list(e_second))
    f_second = max_bipartite_subgraph(pool).crossing
    star = Graph(n, list(e_prime) + list(f_second))
    marked = set(f_second)
    new = set(a.new_edges)
    for i, j, k in triangles(star):
        tri = [(i, j), (i, k), (j, k)]
        hits = [e for e in tri if e in marked]
        if len(hits) == 1:
            if hits[0] not in new:
                raise InvariantViolation("triangle closed by an old edge in a triangle-free base")
            return WitnessTriangle((i, j, k), hits[0])
    raise InvariantViolation("no triangle with exactly one new edge found")
