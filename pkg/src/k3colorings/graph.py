"""Simple graphs on vertices ``0..n-1``: generators, graph6 I/O, triangles, cliques.

Adjacency is kept as one integer bitmask per vertex so that edge queries and
common-neighbour iteration are cheap.  Edges are always listed in
lexicographic order of ``(i, j)`` with ``i < j``; the counter relies on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, SizeLimit

Edge = tuple[int, int]

MAX_CLIQUE_VERTICES = 32
MAX_GRAPH6_VERTICES = 62


def _norm(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...] = field(repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {(i, j)} has an endpoint outside 0..{n - 1}")
            es.add(_norm(i, j))
        adj = [0] * n
        for i, j in es:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(es)))
        object.__setattr__(self, "adj", tuple(adj))

    def __len__(self) -> int:
        return self.n

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def common_neighbors(self, i: int, j: int) -> list[int]:
        return _bits(self.adj[i] & self.adj[j])

    def edge_index(self) -> dict[Edge, int]:
        """Map each edge to its position in the canonical order."""
        return {e: k for k, e in enumerate(self.edges)}

    def add_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, itertools.chain(self.edges, extra))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled ``0..k-1`` in sorted order."""
        vs = sorted(vertices)
        pos = {v: k for k, v in enumerate(vs)}
        return Graph(len(vs), [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def complement(self) -> "Graph":
        return Graph(self.n, [e for e in itertools.combinations(range(self.n), 2) if not self.has_edge(*e)])


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class VertexPartition:
    parts: tuple[frozenset[int], ...]

    def __init__(self, parts: Iterable[Iterable[int]], n: int | None = None):
        ps = tuple(frozenset(p) for p in parts)
        seen: set[int] = set()
        for p in ps:
            if seen & p:
                raise ValueError("parts overlap")
            seen |= p
        if n is not None and seen != set(range(n)):
            raise ValueError("parts do not cover all vertices")
        object.__setattr__(self, "parts", ps)

    def internal_edges(self, g: Graph) -> int:
        where = {v: k for k, p in enumerate(self.parts) for v in p}
        return sum(1 for i, j in g.edges if where[i] == where[j])


# generators


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def part_sizes(n: int, k: int) -> list[int]:
    """Equitable part sizes, larger parts first."""
    q, rem = divmod(n, k)
    return [q + 1] * rem + [q] * (k - rem)


def turan_parts(n: int, k: int) -> list[range]:
    out, start = [], 0
    for size in part_sizes(n, k):
        out.append(range(start, start + size))
        start += size
    return out


def turan_graph(n: int, k: int) -> Graph:
    """Complete balanced ``k``-partite graph on ``n`` vertices.

    Vertices are assigned to parts in contiguous blocks, larger parts first,
    so ``turan_graph(5, 2)`` has parts ``{0,1,2}`` and ``{3,4}``.
    """
    if n < 1 or k < 1:
        raise ValueError("turan_graph needs n >= 1 and k >= 1")
    parts = turan_parts(n, k)
    edges = [
        (i, j)
        for a, b in itertools.combinations(parts, 2)
        for i in a
        for j in b
    ]
    return Graph(n, edges)


def ex_k3(n: int) -> int:
    """Turán number of the triangle, ``floor(n^2 / 4)``."""
    if n < 1:
        raise ValueError("ex_k3 needs n >= 1")
    return n * n // 4


# substructures


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles ``i < j < k`` in lexicographic order."""
    out = []
    for i, j in g.edges:
        higher = g.adj[i] & g.adj[j] & ~((1 << (j + 1)) - 1)
        out.extend((i, j, k) for k in _bits(higher))
    out.sort()
    return out


def is_triangle_free(g: Graph) -> bool:
    return not any(g.adj[i] & g.adj[j] for i, j in g.edges)


def clique_number(g: Graph) -> int:
    """Maximum clique size by bitset branch and bound (``n <= 32``)."""
    if g.n > MAX_CLIQUE_VERTICES:
        raise SizeLimit(f"clique_number supports n <= {MAX_CLIQUE_VERTICES}, got {g.n}")
    if g.n == 0:
        return 0
    best = 1
    adj = g.adj

    def expand(size: int, cand: int) -> None:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand & adj[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1

    expand(0, (1 << g.n) - 1)
    return best


def find_clique(g: Graph, k: int) -> tuple[int, ...] | None:
    """Lexicographically least ``k``-clique, or ``None``."""

    def rec(chosen: list[int], cand: int) -> tuple[int, ...] | None:
        if len(chosen) == k:
            return tuple(chosen)
        for v in _bits(cand):
            if len(chosen) + (cand >> v).bit_count() < k:
                return None
            found = rec(chosen + [v], cand & g.adj[v] & ~((1 << (v + 1)) - 1))
            if found:
                return found
        return None

    return rec([], (1 << g.n) - 1)


# graph6


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` in the short graph6 form (``n <= 62``)."""
    if g.n > MAX_GRAPH6_VERTICES:
        raise SizeLimit(f"graph6 short form supports n <= {MAX_GRAPH6_VERTICES}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 string; raises ``ParseError`` with the offending byte."""
    s = text.strip("\r\n")
    offset = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        offset = 10
    if not s:
        raise ParseError("empty graph6 string", offset)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside the graph6 range", offset + k)
    if s[0] == "~":
        raise ParseError("long-form graph6 (n > 62) is not supported", offset)
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(s) - 1 != nbytes:
        raise ParseError(f"expected {nbytes} data bytes for n={n}, got {len(s) - 1}", offset + min(len(s), nbytes + 1))
    bits = []
    for ch in s[1:]:
        val = ord(ch) - 63
        bits.extend((val >> (5 - t)) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", offset + len(s) - 1)
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    return Graph(n, [p for p, b in zip(pairs, bits) if b])


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def canonical_graph6(g: Graph) -> str:
    """Lexicographically least graph6 string over all relabellings (small ``n`` only)."""
    if g.n > 8:
        raise SizeLimit("canonical_graph6 enumerates n! relabellings; n <= 8")
    return min(emit_graph6(g.relabel(p)) for p in itertools.permutations(range(g.n)))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
