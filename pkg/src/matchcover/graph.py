"""Loopless undirected multigraphs with dense integer edge ids.

Edge identity is always by id, never by endpoint pair: ear machinery and
the splice constructions create parallel edges that must stay
distinguishable.  All values are immutable after construction; deletion
returns a fresh graph together with old-id -> new-id maps.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DimensionMismatch, InvalidParameterError


def _popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class EdgeSet:
    """Bit vector over one graph's edge-id space (bit i = edge i)."""

    mask: int
    size: int

    @classmethod
    def empty(cls, size: int) -> "EdgeSet":
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> "EdgeSet":
        return cls((1 << size) - 1, size)

    @classmethod
    def from_ids(cls, size: int, ids: Iterable[int]) -> "EdgeSet":
        mask = 0
        for i in ids:
            if not 0 <= i < size:
                raise DimensionMismatch(f"edge id {i} outside 0..{size - 1}")
            mask |= 1 << i
        return cls(mask, size)

    def _check(self, other: "EdgeSet") -> None:
        if self.size != other.size:
            raise DimensionMismatch(
                f"edge spaces differ: {self.size} vs {other.size}")

    def __xor__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.mask ^ other.mask, self.size)

    def __and__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.mask & other.mask, self.size)

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.mask | other.mask, self.size)

    def __contains__(self, eid: int) -> bool:
        return 0 <= eid < self.size and bool(self.mask >> eid & 1)

    def __len__(self) -> int:
        return _popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def ids(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if self.mask >> i & 1)

    def issubset(self, other: "EdgeSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0


@dataclass(frozen=True)
class VertexSet:
    """Bit vector over one graph's vertex ids."""

    mask: int
    size: int

    @classmethod
    def empty(cls, size: int) -> "VertexSet":
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> "VertexSet":
        return cls((1 << size) - 1, size)

    @classmethod
    def from_ids(cls, size: int, ids: Iterable[int]) -> "VertexSet":
        mask = 0
        for i in ids:
            if not 0 <= i < size:
                raise DimensionMismatch(f"vertex id {i} outside 0..{size - 1}")
            mask |= 1 << i
        return cls(mask, size)

    def _check(self, other: "VertexSet") -> None:
        if self.size != other.size:
            raise DimensionMismatch(
                f"vertex spaces differ: {self.size} vs {other.size}")

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.mask ^ other.mask, self.size)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.size and bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return _popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def ids(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if self.mask >> i & 1)

    def complement(self) -> "VertexSet":
        return VertexSet(~self.mask & ((1 << self.size) - 1), self.size)


class Graph:
    """Loopless undirected multigraph; vertices 0..n-1, edge ids 0..m-1."""

    __slots__ = ("n", "edges", "vertex_labels", "edge_labels", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 vertex_labels: Optional[dict] = None,
                 edge_labels: Optional[dict] = None):
        edges = tuple((int(u), int(v)) for u, v in edges)
        if n < 0:
            raise InvalidParameterError("vertex count must be non-negative")
        for u, v in edges:
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u},{v}) outside 0..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "vertex_labels", dict(vertex_labels or {}))
        object.__setattr__(self, "edge_labels", dict(edge_labels or {}))
        object.__setattr__(self, "_adj", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbor, edge id), sorted by edge id."""
        adj = object.__getattribute__(self, "_adj")
        if adj is None:
            adj = [[] for _ in range(self.n)]
            for eid, (u, v) in enumerate(self.edges):
                adj[u].append((v, eid))
                adj[v].append((u, eid))
            object.__setattr__(self, "_adj", adj)
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def full_edge_set(self) -> EdgeSet:
        return EdgeSet.full(self.m)

    def empty_edge_set(self) -> EdgeSet:
        return EdgeSet.empty(self.m)

    def edge_set(self, ids: Iterable[int]) -> EdgeSet:
        return EdgeSet.from_ids(self.m, ids)

    def vertex_set(self, ids: Iterable[int]) -> VertexSet:
        return VertexSet.from_ids(self.n, ids)

    def is_regular(self) -> Optional[int]:
        """Common degree if the graph is regular (n >= 1), else None."""
        degs = self.degrees()
        if not degs:
            return None
        return degs[0] if all(d == degs[0] for d in degs) else None

    def delete_edges(self, eids: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """New graph without the given edges, plus old->new edge-id map."""
        drop = set(eids)
        emap: dict[int, int] = {}
        kept = []
        for eid, e in enumerate(self.edges):
            if eid in drop:
                continue
            emap[eid] = len(kept)
            kept.append(e)
        return Graph(self.n, kept), emap

    def delete_vertices(self, vids: Iterable[int]) -> tuple["Graph", dict[int, int], dict[int, int]]:
        """New graph without the given vertices and their incident edges.

        Returns (graph, old->new edge-id map, old->new vertex-id map).
        """
        drop = set(vids)
        vmap: dict[int, int] = {}
        for v in range(self.n):
            if v not in drop:
                vmap[v] = len(vmap)
        emap: dict[int, int] = {}
        kept = []
        for eid, (u, v) in enumerate(self.edges):
            if u in drop or v in drop:
                continue
            emap[eid] = len(kept)
            kept.append((vmap[u], vmap[v]))
        return Graph(len(vmap), kept), emap, vmap

    def edge_subgraph(self, eids: Iterable[int]) -> tuple["Graph", dict[int, int], dict[int, int]]:
        """Subgraph on exactly the given edges and their endpoints.

        Returns (graph, old->new edge-id map, old->new vertex-id map).
        """
        keep = sorted(set(eids))
        verts = sorted({w for eid in keep for w in self.edges[eid]})
        vmap = {v: i for i, v in enumerate(verts)}
        emap = {}
        new_edges = []
        for eid in keep:
            u, v = self.edges[eid]
            emap[eid] = len(new_edges)
            new_edges.append((vmap[u], vmap[v]))
        return Graph(len(verts), new_edges), emap, vmap

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(g: Graph, keep: VertexSet) -> tuple[Graph, dict[int, int], dict[int, int]]:
    """Subgraph induced by keep, with old->new edge and vertex id maps."""
    drop = [v for v in range(g.n) if v not in keep]
    return g.delete_vertices(drop)


def boundary(g: Graph, u: VertexSet) -> EdgeSet:
    """Edge boundary: edges with exactly one endpoint in u."""
    if u.size != g.n:
        raise DimensionMismatch("vertex set bound to a different graph")
    mask = 0
    um = u.mask
    for eid, (a, b) in enumerate(g.edges):
        if (um >> a & 1) != (um >> b & 1):
            mask |= 1 << eid
    return EdgeSet(mask, g.m)


def components(g: Graph) -> list[VertexSet]:
    """Connected components, each as a VertexSet, ordered by least vertex."""
    seen = [False] * g.n
    adj = g.adjacency()
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        mask = 0
        dq = deque([s])
        seen[s] = True
        while dq:
            v = dq.popleft()
            mask |= 1 << v
            for w, _ in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    dq.append(w)
        out.append(VertexSet(mask, g.n))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    coloring: Optional[tuple[int, ...]]     # value per vertex in {0,1}
    odd_walk: Optional[tuple[int, ...]]     # closed walk with odd edge count


def is_bipartite(g: Graph) -> BipartiteResult:
    """2-color the graph, or return an odd closed walk as a witness."""
    color: list[Optional[int]] = [None] * g.n
    parent: list[int] = [-1] * g.n
    adj = g.adjacency()
    for s in range(g.n):
        if color[s] is not None:
            continue
        color[s] = 0
        dq = deque([s])
        while dq:
            v = dq.popleft()
            for w, _ in adj[v]:
                if color[w] is None:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    dq.append(w)
                elif color[w] == color[v]:
                    return BipartiteResult(False, None, _odd_cycle(parent, v, w))
    return BipartiteResult(True, tuple(color), None)


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    """Odd cycle through BFS-tree paths of u and v plus the edge uv."""
    pu, pv = [u], [v]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    while parent[pv[-1]] != -1:
        pv.append(parent[pv[-1]])
    lca = next(x for x in pu if x in set(pv))
    a = pu[:pu.index(lca) + 1]      # u .. lca
    b = pv[:pv.index(lca)]          # v .. just below lca
    return tuple(reversed(a)) + tuple(b)  # lca .. u then v .. below-lca


@dataclass(frozen=True)
class ConnectivityResult:
    ok: bool
    separator: Optional[tuple[int, ...]]    # vertex cut of size < k, if any
    reason: Optional[str]

    def __bool__(self) -> bool:
        return self.ok


def vertex_connectivity_at_least(g: Graph, k: int) -> ConnectivityResult:
    """Exact k-connectivity test via unit-capacity max-flow (Menger)."""
    if k < 1:
        raise InvalidParameterError("k must be >= 1")
    if g.n <= k:
        return ConnectivityResult(False, None, f"n={g.n} <= k={k}")
    if not is_connected(g):
        return ConnectivityResult(False, (), "disconnected")
    adjset = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adjset[u].add(v)
        adjset[v].add(u)
    nonadj = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
              if v not in adjset[u]]
    if not nonadj:
        # complete (multi)graph on n > k vertices: connectivity n-1 >= k
        return ConnectivityResult(True, None, None)
    for s, t in nonadj:
        flow, cut = _vertex_flow(adjset, g.n, s, t, k)
        if flow < k:
            return ConnectivityResult(False, tuple(cut), None)
    return ConnectivityResult(True, None, None)


def _vertex_flow(adjset: list[set[int]], n: int, s: int, t: int,
                 need: int) -> tuple[int, list[int]]:
    """Max s-t flow on the vertex-split digraph, capped at `need`.

    Node 2v is v_in, 2v+1 is v_out.  Returns (flow, vertex cut) where the
    cut is only meaningful when flow < need.
    """
    cap: dict[tuple[int, int], int] = {}
    big = n + 1

    def add(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u in range(n):
        for v in adjset[u]:
            if u < v:
                add(2 * u + 1, 2 * v, big)
                add(2 * v + 1, 2 * u, big)
    out: dict[int, list[int]] = {}
    for (a, b) in cap:
        out.setdefault(a, []).append(b)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while flow < need:
        # BFS for an augmenting path in the residual graph
        prev = {src: None}
        dq = deque([src])
        while dq and snk not in prev:
            a = dq.popleft()
            for b in out.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    dq.append(b)
        if snk not in prev:
            break
        b = snk
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    if flow >= need:
        return flow, []
    # residual-reachable side of the min cut -> split-arc vertices
    reach = {src}
    dq = deque([src])
    while dq:
        a = dq.popleft()
        for b in out.get(a, ()):
            if b not in reach and cap[(a, b)] > 0:
                reach.add(b)
                dq.append(b)
    cut = [v for v in range(n)
           if v not in (s, t) and 2 * v in reach and 2 * v + 1 not in reach]
    return flow, cut
