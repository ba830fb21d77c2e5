"""Pure-Python hot kernels.

These mirror the compiled kernels in `_fast` exactly: same search order,
same output order.  Both enumerate perfect matchings depth-first on the
lowest-index uncovered vertex, trying incident edges in increasing edge-id
order, which makes the output lexicographic in chosen edge ids.
"""

from __future__ import annotations


def enumerate_perfect_matchings(n: int, edges: list[tuple[int, int]],
                                cap: int) -> tuple[list[int], bool]:
    """All perfect matchings as edge bitmasks, in deterministic DFS order.

    Returns (matchings, complete); complete is False iff cap was reached.
    """
    if n % 2 == 1:
        return [], True
    if n == 0:
        return [0], True
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        adj[u].append((eid, v))
        adj[v].append((eid, u))
    out: list[int] = []
    full = (1 << n) - 1

    def rec(covered: int, chosen: int) -> bool:
        if covered == full:
            out.append(chosen)
            return len(out) < cap
        v = (~covered & -~covered).bit_length() - 1
        for eid, w in adj[v]:
            if not covered >> w & 1:
                if not rec(covered | 1 << v | 1 << w, chosen | 1 << eid):
                    return False
        return True

    complete = rec(0, 0)
    return out, complete


def edge_coloring(n: int, edges: list[tuple[int, int]], colors: int,
                  budget: int) -> tuple[list[int] | None, bool]:
    """Backtracking proper edge coloring with at most `colors` colors.

    Edges are processed in a connectivity-friendly order; colors above the
    current maximum are tried only once (symmetry breaking).  Returns
    (coloring list indexed by edge id with values 1..colors, exhausted)
    where coloring is None if no proper coloring exists or the budget ran
    out; exhausted reports the budget running out.
    """
    m = len(edges)
    if m == 0:
        return [], False
    order = _edge_order(n, edges)
    used = [0] * n
    assigned = [0] * m
    budget_left = [budget]

    def rec(pos: int, max_used: int) -> int:
        # returns 1 found, 0 not found, -1 budget exhausted
        if pos == m:
            return 1
        eid = order[pos]
        u, v = edges[eid]
        avail = ~(used[u] | used[v])
        limit = min(colors, max_used + 1)
        for c in range(1, limit + 1):
            if not avail >> c & 1:
                continue
            if budget_left[0] <= 0:
                return -1
            budget_left[0] -= 1
            bit = 1 << c
            used[u] |= bit
            used[v] |= bit
            assigned[eid] = c
            res = rec(pos + 1, max(max_used, c))
            used[u] &= ~bit
            used[v] &= ~bit
            if res != 0:
                return res
        return 0

    res = rec(0, 0)
    if res == 1:
        return assigned, False
    return None, res == -1


def _edge_order(n: int, edges: list[tuple[int, int]]) -> list[int]:
    """BFS order over the line graph so each edge touches an earlier one."""
    m = len(edges)
    incident: list[list[int]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        incident[u].append(eid)
        incident[v].append(eid)
    seen = [False] * m
    order: list[int] = []
    for start in range(m):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        qi = 0
        while qi < len(queue):
            eid = queue[qi]
            qi += 1
            order.append(eid)
            for w in edges[eid]:
                for nxt in incident[w]:
                    if not seen[nxt]:
                        seen[nxt] = True
                        queue.append(nxt)
    return order
