"""Pure-Python versions of the compiled kernels (same signatures, same results)."""

from __future__ import annotations

import itertools

import numpy as np


def _distinct(c: int, ca: int, cb: int) -> int:
    if ca == cb:
        return 1 if c == ca else 2
    if c == ca or c == cb:
        return 2
    return 3


def count_triangle_pattern(m, pair_start, pair_a, pair_b, r, forbid_mask,
                           first_lo, first_hi, symmetry, node_budget):
    counts = [0] * (r + 1)
    if m == 0:
        counts[0] = 1
        return counts, 0, True
    closing = [list(zip(pair_a[pair_start[e]:pair_start[e + 1]], pair_b[pair_start[e]:pair_start[e + 1]]))
               for e in range(m)]
    col = [-1] * m
    nodes = 0

    def rec(e: int, used: int) -> bool:
        nonlocal nodes
        hi = first_hi if e == 0 else r
        lo = first_lo if e == 0 else 0
        if symmetry:
            hi = min(hi, used + 1)
        for c in range(lo, hi):
            nodes += 1
            if nodes > node_budget:
                return False
            if any(forbid_mask >> _distinct(c, col[a], col[b]) & 1 for a, b in closing[e]):
                continue
            col[e] = c
            nu = used + 1 if symmetry and c == used else used
            if e == m - 1:
                counts[nu if symmetry else 0] += 1
            elif not rec(e + 1, nu):
                return False
        return True

    completed = rec(0, 0)
    return counts, nodes, completed


def naive_count(m, tri_a, tri_b, tri_c, r, forbid_mask):
    """Full enumeration, vectorised over the trailing edges with numpy."""
    if m == 0:
        return 1
    inner = 1
    while inner < m and r ** (inner + 1) <= 1 << 20:
        inner += 1
    inner = min(inner, m)
    outer = m - inner
    grid = np.indices((r,) * inner).reshape(inner, -1)
    total = 0
    for prefix in itertools.product(range(r), repeat=outer):
        cols = [np.full(grid.shape[1], c) for c in prefix] + list(grid)
        good = np.ones(grid.shape[1], dtype=bool)
        for a, b, c in zip(tri_a, tri_b, tri_c):
            x, y, z = cols[a], cols[b], cols[c]
            d = 1 + (x != y) + ((z != x) & (z != y))
            for k in (1, 2, 3):
                if forbid_mask >> k & 1:
                    good &= d != k
        total += int(good.sum())
    return total


def min_internal_bipartition(n, adj):
    if n <= 1:
        return 0, (1 if n == 1 else 0)
    full = (1 << n) - 1
    side = 1
    internal = sum((adj[v] & (full ^ 1) & ~((1 << (v + 1)) - 1)).bit_count() for v in range(1, n))
    best, best_mask = internal, side
    for i in range(1, 1 << (n - 1)):
        v = (i & -i).bit_length()
        bit = 1 << v
        same = (side if side & bit else full ^ side) & ~bit
        other = full ^ same ^ bit
        internal += (adj[v] & other).bit_count() - (adj[v] & same).bit_count()
        side ^= bit
        if internal < best or (internal == best and side < best_mask):
            best, best_mask = internal, side
    return best, best_mask
