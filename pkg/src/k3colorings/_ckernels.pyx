# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: pruned triangle-pattern counting, full enumeration, bipartition scan.

Signatures and results match ``_pykernels`` exactly; ``kernels`` picks one.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _distinct(int c, int ca, int cb) noexcept nogil:
    if ca == cb:
        return 1 if c == ca else 2
    if c == ca or c == cb:
        return 2
    return 3


def count_triangle_pattern(int m, pair_start, pair_a, pair_b, int r, int forbid_mask,
                           int first_lo, int first_hi, bint symmetry, long long node_budget):
    """Backtracking count over edges ``0..m-1`` with triangle pruning.

    Returns ``(counts, nodes, completed)``; ``counts[k]`` holds leaves using
    ``k`` distinct colors when ``symmetry`` is set, else ``counts[0]`` is the total.
    """
    cdef int npairs = len(pair_a)
    cdef int *ps = <int *> malloc((m + 1) * sizeof(int))
    cdef int *pa = <int *> malloc((npairs + 1) * sizeof(int))
    cdef int *pb = <int *> malloc((npairs + 1) * sizeof(int))
    cdef int *col = <int *> malloc((m + 1) * sizeof(int))
    cdef int *used_at = <int *> malloc((m + 1) * sizeof(int))
    cdef uint64_t *counts = <uint64_t *> calloc(r + 1, sizeof(uint64_t))
    cdef int i
    if ps == NULL or pa == NULL or pb == NULL or col == NULL or used_at == NULL or counts == NULL:
        free(ps); free(pa); free(pb); free(col); free(used_at); free(counts)
        raise MemoryError()
    for i in range(m + 1):
        ps[i] = pair_start[i]
    for i in range(npairs):
        pa[i] = pair_a[i]
        pb[i] = pair_b[i]

    cdef long long nodes = 0
    cdef bint completed = True
    cdef int e, c, hi, p, ca, cb, nu, d
    cdef bint ok

    with nogil:
        if m == 0:
            counts[0] = 1
        else:
            e = 0
            col[0] = first_lo - 1
            used_at[0] = 0
            while e >= 0:
                c = col[e] + 1
                hi = first_hi if e == 0 else r
                if symmetry and used_at[e] + 1 < hi:
                    hi = used_at[e] + 1
                ok = False
                while c < hi:
                    nodes += 1
                    if nodes > node_budget:
                        break
                    ok = True
                    for p in range(ps[e], ps[e + 1]):
                        ca = col[pa[p]]
                        cb = col[pb[p]]
                        d = _distinct(c, ca, cb)
                        if (forbid_mask >> d) & 1:
                            ok = False
                            break
                    if ok:
                        break
                    c += 1
                if nodes > node_budget:
                    completed = False
                    break
                if not ok:
                    e -= 1
                    continue
                col[e] = c
                nu = used_at[e]
                if symmetry and c == used_at[e]:
                    nu += 1
                if e == m - 1:
                    if symmetry:
                        counts[nu] += 1
                    else:
                        counts[0] += 1
                    continue
                e += 1
                used_at[e] = nu
                col[e] = -1

    result = [counts[i] for i in range(r + 1)]
    free(ps); free(pa); free(pb); free(col); free(used_at); free(counts)
    return result, nodes, completed


def naive_count(int m, tri_a, tri_b, tri_c, int r, int forbid_mask):
    """Enumerate all ``r**m`` colorings and test every triangle; no pruning."""
    cdef int nt = len(tri_a)
    cdef int *ta = <int *> malloc((nt + 1) * sizeof(int))
    cdef int *tb = <int *> malloc((nt + 1) * sizeof(int))
    cdef int *tc = <int *> malloc((nt + 1) * sizeof(int))
    cdef int *col = <int *> calloc(m + 1, sizeof(int))
    if ta == NULL or tb == NULL or tc == NULL or col == NULL:
        free(ta); free(tb); free(tc); free(col)
        raise MemoryError()
    cdef int i, t, d
    for i in range(nt):
        ta[i] = tri_a[i]
        tb[i] = tri_b[i]
        tc[i] = tri_c[i]
    cdef uint64_t total = 0
    cdef bint good
    with nogil:
        while True:
            good = True
            for t in range(nt):
                d = _distinct(col[ta[t]], col[tb[t]], col[tc[t]])
                if (forbid_mask >> d) & 1:
                    good = False
                    break
            if good:
                total += 1
            i = 0
            while i < m:
                col[i] += 1
                if col[i] < r:
                    break
                col[i] = 0
                i += 1
            if i >= m:
                break
    free(ta); free(tb); free(tc); free(col)
    return total


def min_internal_bipartition(int n, adj):
    """Scan all bipartitions with vertex 0 on side one, by Gray code.

    Returns ``(internal_edges, side_one_mask)``; ties go to the least mask.
    """
    cdef unsigned long long a[64]
    cdef int v
    for v in range(n):
        a[v] = adj[v]
    if n <= 1:
        return 0, (1 if n == 1 else 0)
    cdef unsigned long long side = 1
    cdef unsigned long long full = (1ULL << n) - 1
    cdef long long internal = 0
    # start: side one = {0}; internal = edges among 1..n-1
    for v in range(1, n):
        internal += __builtin_popcountll(a[v] & (full ^ 1) & ~((1ULL << (v + 1)) - 1))
    cdef long long best = internal
    cdef unsigned long long best_mask = side
    cdef unsigned long long i, limit = 1ULL << (n - 1)
    cdef unsigned long long same, other
    with nogil:
        i = 1
        while i < limit:
            v = __builtin_ctzll(i) + 1
            if (side >> v) & 1:
                same = side
            else:
                same = full ^ side
            same &= ~(1ULL << v)
            other = full ^ same ^ (1ULL << v)
            internal += __builtin_popcountll(a[v] & other) - __builtin_popcountll(a[v] & same)
            side ^= 1ULL << v
            if internal < best or (internal == best and side < best_mask):
                best = internal
                best_mask = side
            i += 1
    return int(best), int(best_mask)
