# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; must match kernels._pure bit for bit.

Perfect-matching enumeration and edge-coloring search both spend their
time in tight word-level loops, so state lives in C arrays of 64-bit
words.  Only inputs with n <= 64 vertices / m <= 64 edges are accepted;
the dispatcher in kernels/__init__.py guards this.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline int lowest_zero_bit64(unsigned long long x) {
        return __builtin_ctzll(~x);
    }
    """
    int lowest_zero_bit64(unsigned long long x)


cdef bint _pm_rec(int *aeid, int *anbr, int *off,
                  unsigned long long full, unsigned long long covered,
                  unsigned long long chosen, list out, long long cap):
    cdef int v, i, eid, w
    if covered == full:
        out.append(chosen)
        return len(out) < cap
    v = lowest_zero_bit64(covered)
    for i in range(off[v], off[v + 1]):
        eid = aeid[i]
        w = anbr[i]
        if not (covered >> w) & 1ULL:
            if not _pm_rec(aeid, anbr, off, full,
                           covered | (<unsigned long long> 1 << v)
                           | (<unsigned long long> 1 << w),
                           chosen | (<unsigned long long> 1 << eid),
                           out, cap):
                return False
    return True


def enumerate_perfect_matchings(int n, edges, long long cap):
    """All perfect matchings as edge bitmasks; see kernels._pure."""
    if n % 2 == 1:
        return [], True
    if n == 0:
        return [0], True
    cdef int m = len(edges)
    cdef int eid, u, v, i
    cdef int *deg = <int *> malloc(n * sizeof(int))
    cdef int *off = <int *> malloc((n + 1) * sizeof(int))
    cdef int *fill = <int *> malloc(n * sizeof(int))
    cdef int *aeid = <int *> malloc(2 * m * sizeof(int)) if m else <int *> malloc(sizeof(int))
    cdef int *anbr = <int *> malloc(2 * m * sizeof(int)) if m else <int *> malloc(sizeof(int))
    cdef unsigned long long full
    if not (deg and off and fill and aeid and anbr):
        free(deg); free(off); free(fill); free(aeid); free(anbr)
        raise MemoryError()
    out = []
    try:
        for i in range(n):
            deg[i] = 0
        for eid in range(m):
            u, v = edges[eid]
            deg[u] += 1
            deg[v] += 1
        off[0] = 0
        for i in range(n):
            off[i + 1] = off[i] + deg[i]
            fill[i] = off[i]
        # edges scanned in id order, so per-vertex slots stay id-sorted
        for eid in range(m):
            u, v = edges[eid]
            aeid[fill[u]] = eid
            anbr[fill[u]] = v
            fill[u] += 1
            aeid[fill[v]] = eid
            anbr[fill[v]] = u
            fill[v] += 1
        if n < 64:
            full = (<unsigned long long> 1 << n) - 1
        else:
            full = <unsigned long long> 0xFFFFFFFFFFFFFFFFULL
        complete = _pm_rec(aeid, anbr, off, full, 0, 0, out, cap)
        return out, bool(complete)
    finally:
        free(deg); free(off); free(fill); free(aeid); free(anbr)


cdef int _ec_rec(int *order, int *eu, int *ev, unsigned long long *used,
                 int *assigned, int m, int colors, int pos, int max_used,
                 long long *budget):
    cdef int eid, u, v, c, limit, res
    cdef unsigned long long avail, bit
    if pos == m:
        return 1
    eid = order[pos]
    u = eu[eid]
    v = ev[eid]
    avail = ~(used[u] | used[v])
    limit = colors if colors < max_used + 1 else max_used + 1
    for c in range(1, limit + 1):
        if not (avail >> c) & 1ULL:
            continue
        if budget[0] <= 0:
            return -1
        budget[0] -= 1
        bit = <unsigned long long> 1 << c
        used[u] |= bit
        used[v] |= bit
        assigned[eid] = c
        res = _ec_rec(order, eu, ev, used, assigned, m, colors, pos + 1,
                      max_used if max_used > c else c, budget)
        used[u] &= ~bit
        used[v] &= ~bit
        if res != 0:
            return res
    return 0


def edge_coloring(int n, edges, int colors, long long budget):
    """Backtracking proper edge coloring; see kernels._pure."""
    cdef int m = len(edges)
    if m == 0:
        return [], False
    from ._pure import _edge_order
    order_py = _edge_order(n, [tuple(e) for e in edges])
    cdef int *order = <int *> malloc(m * sizeof(int))
    cdef int *eu = <int *> malloc(m * sizeof(int))
    cdef int *ev = <int *> malloc(m * sizeof(int))
    cdef unsigned long long *used = \
        <unsigned long long *> malloc(n * sizeof(unsigned long long))
    cdef int *assigned = <int *> malloc(m * sizeof(int))
    cdef long long budget_left = budget
    if not (order and eu and ev and used and assigned):
        free(order); free(eu); free(ev); free(used); free(assigned)
        raise MemoryError()
    cdef int i, res
    try:
        for i in range(m):
            order[i] = order_py[i]
            assigned[i] = 0
            eu[i], ev[i] = edges[i]
        for i in range(n):
            used[i] = 0
        res = _ec_rec(order, eu, ev, used, assigned, m, colors, 0, 0,
                      &budget_left)
        if res == 1:
            return [assigned[i] for i in range(m)], False
        return None, res == -1
    finally:
        free(order); free(eu); free(ev); free(used); free(assigned)
