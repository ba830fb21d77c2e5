"""Generators for the regular class-1 graph families with planted
structure: Q_r, the two-graph splice, chains of splices, odd cycles of
spliced parts, and the hub-star combination, plus the Petersen graph.

Every builder returns a ConstructionCertificate whose claims are cheap to
state and expensive to trust; `verify_certificate` re-checks each claim
from scratch using only the other modules, never the provenance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import kernels
from .errors import (ColoringMismatchError, EdgeNotInGraphError,
                     InvalidParameterError, NotEquivalentError,
                     NotMatchingCoveredError)
from .feasibility import (is_switch_equiv_empty, is_switch_equiv_full,
                          parity_spaces)
from .graph import (EdgeSet, Graph, is_bipartite, is_connected,
                    vertex_connectivity_at_least)
from .matching import (DEFAULT_CAP, enumerate_perfect_matchings,
                       is_matching_covered)

DEFAULT_COLOR_BUDGET = 5_000_000


@dataclass(frozen=True)
class Claim:
    name: str
    ok: Optional[bool]          # None = could not be verified (cap hit)
    detail: str = ""


@dataclass(frozen=True)
class ConstructionCertificate:
    name: str
    params: dict
    graph: Graph
    r: Optional[int]
    claimed_connectivity: Optional[int]
    coloring: Optional[tuple[int, ...]]         # color per edge id, 1..r
    equivalent_sets: tuple[EdgeSet, ...]
    nf_star_witness: Optional[EdgeSet]
    labels: dict = field(default_factory=dict)  # named vertices/edges


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5-7-9-6-8, spokes i -- i+5."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
             (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
             (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    return Graph(10, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def cube_graph() -> Graph:
    """The 3-cube: vertices are 3-bit strings, edges flip one bit."""
    edges = [(v, v ^ (1 << b)) for v in range(8) for b in range(3)
             if v < v ^ (1 << b)]
    return Graph(8, edges)


def verify_equivalent_set(g: Graph, s: EdgeSet, cap: int = DEFAULT_CAP) -> Optional[bool]:
    """Every perfect matching contains all of s or none of it.

    Returns None when enumeration capped without a counterexample.
    """
    enum = enumerate_perfect_matchings(g, cap)
    sm = s.mask
    for mt in enum.matchings:
        inter = mt.mask & sm
        if inter != 0 and inter != sm:
            return False
    return True if enum.complete else None


def chromatic_index_exact(g: Graph, limit_colors: Optional[int] = None,
                          budget: int = DEFAULT_COLOR_BUDGET) -> Optional[int]:
    """Exact chromatic index by backtracking; None when budget ran out."""
    if g.m == 0:
        return 0
    delta = max(g.degrees())
    if limit_colors is None:
        mult = max(_multiplicities(g).values())
        limit_colors = delta + mult        # Vizing bound for multigraphs
    for c in range(delta, limit_colors + 1):
        coloring, exhausted = kernels.edge_coloring(g.n, list(g.edges), c, budget)
        if coloring is not None:
            return c
        if exhausted:
            return None
    return None


def find_proper_coloring(g: Graph, colors: int,
                         budget: int = DEFAULT_COLOR_BUDGET) -> Optional[tuple[int, ...]]:
    coloring, _ = kernels.edge_coloring(g.n, list(g.edges), colors, budget)
    return tuple(coloring) if coloring is not None else None


def _multiplicities(g: Graph) -> dict[frozenset[int], int]:
    mult: dict[frozenset[int], int] = {}
    for u, v in g.edges:
        key = frozenset((u, v))
        mult[key] = mult.get(key, 0) + 1
    return mult


def coloring_is_proper(g: Graph, coloring: Sequence[int],
                       colors: Optional[int] = None) -> bool:
    if len(coloring) != g.m:
        return False
    used = [set() for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        c = coloring[eid]
        if colors is not None and not 1 <= c <= colors:
            return False
        if c in used[u] or c in used[v]:
            return False
        used[u].add(c)
        used[v].add(c)
    return True


def color_classes_are_perfect_matchings(g: Graph, coloring: Sequence[int],
                                        r: int) -> bool:
    for c in range(1, r + 1):
        covered = set()
        for eid, (u, v) in enumerate(g.edges):
            if coloring[eid] == c:
                covered.update((u, v))
        if len(covered) != g.n:
            return False
    return True


def _recolor_class_to_one(coloring: Sequence[int], target_ids: Sequence[int]) -> list[int]:
    """Swap color classes so all target edges end up in class 1."""
    cols = {coloring[e] for e in target_ids}
    if len(cols) != 1:
        raise ColoringMismatchError(
            "edges expected to share a color class do not")
    c = cols.pop()
    if c == 1:
        return list(coloring)
    return [1 if x == c else (c if x == 1 else x) for x in coloring]


def build_qr(r: int) -> ConstructionCertificate:
    """K_{r,r} with a1b1, a2b2 swapped for same-side edges a1a2, b1b2."""
    if r < 3:
        raise InvalidParameterError("r must be >= 3")
    a1, a2, b1, b2 = 0, 1, r, r + 1
    edges = []
    coloring = []
    for i in range(r):
        for j in range(r):
            if (i, j) in ((0, 0), (1, 1)):
                continue        # removed a1b1, a2b2
            edges.append((i, r + j))
            coloring.append((j - i) % r + 1)
    f_a = len(edges)
    edges.append((a1, a2))
    coloring.append(1)          # a1b1 and a2b2 both sat in class 1
    f_b = len(edges)
    edges.append((b1, b2))
    coloring.append(1)
    g = Graph(2 * r, edges)
    equiv = g.edge_set((f_a, f_b))
    return ConstructionCertificate(
        name="qr", params={"r": r}, graph=g, r=r, claimed_connectivity=r,
        coloring=tuple(coloring), equivalent_sets=(equiv,),
        nf_star_witness=None,
        labels={"a1": a1, "a2": a2, "b1": b1, "b2": b2,
                "a1a2": f_a, "b1b2": f_b})


def splice(g1: Graph, e1: int, g2: Graph, e2: int,
           s1: Optional[EdgeSet] = None, s2: Optional[EdgeSet] = None,
           coloring1: Optional[Sequence[int]] = None,
           coloring2: Optional[Sequence[int]] = None,
           orient1: Optional[tuple[int, int]] = None,
           orient2: Optional[tuple[int, int]] = None,
           cap: int = DEFAULT_CAP) -> ConstructionCertificate:
    """Delete e_i = x_i y_i from each graph; join by f1 = x1x2, f2 = y1y2.

    Orientation of each e_i is caller-supplied; the documented default is
    x_i = lower vertex id.  When equivalent sets containing e_i are given,
    the certificate carries the combined equivalent set; when proper
    class-1 colorings are given, it carries the composed coloring.
    """
    for g, e in ((g1, e1), (g2, e2)):
        if not 0 <= e < g.m:
            raise EdgeNotInGraphError(f"edge id {e} not in graph")
        if g.m < 2:
            raise NotMatchingCoveredError("parts need at least 2 edges")
        if not is_matching_covered(g, cap):
            raise NotMatchingCoveredError("splice parts must be matching-covered")
    x1, y1 = _orient(g1, e1, orient1)
    x2, y2 = _orient(g2, e2, orient2)
    off = g1.n
    edges = []
    emap1: dict[int, int] = {}
    emap2: dict[int, int] = {}
    for eid, e in enumerate(g1.edges):
        if eid != e1:
            emap1[eid] = len(edges)
            edges.append(e)
    for eid, (u, v) in enumerate(g2.edges):
        if eid != e2:
            emap2[eid] = len(edges)
            edges.append((u + off, v + off))
    f1 = len(edges)
    edges.append((x1, x2 + off))
    f2 = len(edges)
    edges.append((y1, y2 + off))
    g = Graph(g1.n + g2.n, edges)

    equiv_sets = []
    if s1 is not None and s2 is not None:
        if e1 not in s1 or e2 not in s2:
            raise NotEquivalentError("supplied sets must contain the spliced edges")
        mask = (1 << f1) | (1 << f2)
        for old, new in emap1.items():
            if old in s1:
                mask |= 1 << new
        for old, new in emap2.items():
            if old in s2:
                mask |= 1 << new
        equiv_sets.append(EdgeSet(mask, g.m))

    r1, r2 = g1.is_regular(), g2.is_regular()
    r = r1 if r1 is not None and r1 == r2 else None
    coloring = None
    if coloring1 is not None and coloring2 is not None and r is not None:
        c1 = _recolor_class_to_one(coloring1, (e1,))
        c2 = _recolor_class_to_one(coloring2, (e2,))
        out = [0] * g.m
        for old, new in emap1.items():
            out[new] = c1[old]
        for old, new in emap2.items():
            out[new] = c2[old]
        out[f1] = out[f2] = 1
        coloring = tuple(out)
    conn = 2 if (vertex_connectivity_at_least(g1, 2)
                 and vertex_connectivity_at_least(g2, 2)) else None
    return ConstructionCertificate(
        name="splice", params={"e1": e1, "e2": e2},
        graph=g, r=r, claimed_connectivity=conn, coloring=coloring,
        equivalent_sets=tuple(equiv_sets), nf_star_witness=None,
        labels={"f1": f1, "f2": f2, "emap1": emap1, "emap2": emap2,
                "x1": x1, "y1": y1, "x2": x2 + off, "y2": y2 + off})


def _orient(g: Graph, eid: int, orient: Optional[tuple[int, int]]) -> tuple[int, int]:
    u, v = g.edges[eid]
    if orient is None:
        return (u, v) if u < v else (v, u)
    if set(orient) != {u, v}:
        raise EdgeNotInGraphError(f"orientation {orient} does not match edge {eid}")
    return orient


@dataclass(frozen=True)
class ChainPart:
    graph: Graph
    e: int                      # edge consumed by the splice on the left
    e_prime: int                # edge consumed by the splice on the right
    equiv_set: EdgeSet          # contains both e and e_prime
    coloring: tuple[int, ...]


def build_chain(parts: Sequence[ChainPart],
                witness_edges: Optional[Sequence[tuple[int, int]]] = None,
                cap: int = DEFAULT_CAP) -> ConstructionCertificate:
    """Left fold of splices: part i's e' is joined to part i+1's e.

    The certificate's equivalent set is the full aggregate (survivors of
    each part's set plus every bridge pair f, f').  A caller-selected
    even-size subset of the survivors is claimed as an nF* witness when
    the non-bipartiteness and non-cut side conditions verify; by default
    the whole survivor set is tried when its size is even.
    """
    k = len(parts)
    if k < 2:
        raise InvalidParameterError("need at least 2 parts")
    r = parts[0].graph.is_regular()
    for p in parts:
        if p.graph.is_regular() != r or r is None:
            raise InvalidParameterError("parts must share a common regularity")
        if p.e == p.e_prime:
            raise InvalidParameterError("e and e' must differ")
        if p.e not in p.equiv_set or p.e_prime not in p.equiv_set:
            raise NotEquivalentError("equivalent set must contain e and e'")
        ok = verify_equivalent_set(p.graph, p.equiv_set, cap)
        if ok is False:
            raise NotEquivalentError("supplied set is not an equivalent set")
        if not coloring_is_proper(p.graph, p.coloring, r):
            raise ColoringMismatchError("part coloring is not proper")

    cur = parts[0].graph
    cur_coloring: Sequence[int] = parts[0].coloring
    cur_equiv_mask = parts[0].equiv_set.mask
    cur_e_prime = parts[0].e_prime
    # per-part maps into the current chain graph
    part_maps: list[dict[int, int]] = [dict((i, i) for i in range(cur.m))]
    for p in parts[1:]:
        cert = splice(cur, cur_e_prime, p.graph, p.e,
                      s1=EdgeSet(cur_equiv_mask, cur.m), s2=p.equiv_set,
                      coloring1=cur_coloring, coloring2=p.coloring, cap=cap)
        emap1 = cert.labels["emap1"]
        emap2 = cert.labels["emap2"]
        new_mask = (1 << cert.labels["f1"]) | (1 << cert.labels["f2"])
        for old, new in emap1.items():
            if cur_equiv_mask >> old & 1:
                new_mask |= 1 << new
        for old, new in emap2.items():
            if old in p.equiv_set:
                new_mask |= 1 << new
        part_maps = [{o: emap1[n] for o, n in pm.items() if n in emap1}
                     for pm in part_maps]
        part_maps.append(dict(emap2))
        cur = cert.graph
        cur_coloring = cert.coloring
        cur_equiv_mask = new_mask
        cur_e_prime = emap2[p.e_prime]   # survives: e' only consumed rightward
    g = cur

    # survivor pool Q: each part's equivalent set minus its consumed edges
    q_ids: list[tuple[int, int]] = []
    for i, p in enumerate(parts):
        consumed = set()
        if i > 0:
            consumed.add(p.e)
        if i < k - 1:
            consumed.add(p.e_prime)
        for old in p.equiv_set.ids():
            if old not in consumed and old in part_maps[i]:
                q_ids.append((i, old))

    witness = None
    witness_note = "no witness claimed"
    select = witness_edges
    if select is None and len(q_ids) % 2 == 0:
        select = q_ids
    if select is not None:
        sel = list(select)
        if len(sel) % 2 == 1:
            raise InvalidParameterError("witness selection must have even size")
        s_mask = 0
        for (pi, old) in sel:
            s_mask |= 1 << part_maps[pi][old]
        ok, note = _chain_side_conditions(parts, sel)
        if ok:
            witness = EdgeSet(s_mask, g.m)
            witness_note = note
        else:
            witness_note = f"side conditions failed: {note}"

    return ConstructionCertificate(
        name="chain", params={"k": k, "witness_note": witness_note},
        graph=g, r=r, claimed_connectivity=2, coloring=tuple(cur_coloring),
        equivalent_sets=(EdgeSet(cur_equiv_mask, g.m),),
        nf_star_witness=witness,
        labels={"part_maps": part_maps})


def _chain_side_conditions(parts: Sequence[ChainPart],
                           sel: Sequence[tuple[int, int]]) -> tuple[bool, str]:
    """Non-bipartite remainder somewhere, and restriction not a cut somewhere.

    The non-cut condition is checked against both the part minus e alone
    and the part minus both consumed edges, and must agree.
    """
    k = len(parts)
    by_part: dict[int, list[int]] = {}
    for pi, old in sel:
        by_part.setdefault(pi, []).append(old)
    nonbip = None
    noncut = None
    for i, p in enumerate(parts):
        consumed = []
        if i > 0:
            consumed.append(p.e)
        if i < k - 1:
            consumed.append(p.e_prime)
        gp, emap = p.graph.delete_edges(consumed)
        s_here = [emap[o] for o in by_part.get(i, []) if o in emap]
        rest, _ = gp.delete_edges(s_here)
        if nonbip is None and not is_bipartite(rest).bipartite:
            nonbip = i
        if noncut is None and s_here:
            in_gp = is_switch_equiv_empty(gp, gp.edge_set(s_here)).equivalent
            ge, emap_e = p.graph.delete_edges([p.e])
            s_e = [emap_e[o] for o in by_part.get(i, []) if o in emap_e]
            in_ge = is_switch_equiv_empty(ge, ge.edge_set(s_e)).equivalent
            if in_gp != in_ge:
                return False, f"part {i}: single/double edge removal disagree"
            if not in_gp:
                noncut = i
    if nonbip is None:
        return False, "every part remainder is bipartite"
    if noncut is None:
        return False, "every restriction is a cut of its part"
    return True, f"non-bipartite at part {nonbip}, non-cut at part {noncut}"


@dataclass(frozen=True)
class CyclePart:
    graph: Graph
    e: int
    e_prime: int
    coloring: tuple[int, ...]
    orient_e: Optional[tuple[int, int]] = None
    orient_e_prime: Optional[tuple[int, int]] = None


def build_cycle_cl(parts: Sequence[CyclePart],
                   cap: int = DEFAULT_CAP) -> ConstructionCertificate:
    """Odd cyclic arrangement: drop each part's pair e_i, e'_i and bridge
    x_i -> y_{i+1} (edge f_i) and x'_i -> y'_{i+1} (edge f'_i)."""
    k = len(parts)
    if k < 3 or k % 2 == 0:
        raise InvalidParameterError("k must be odd and >= 3")
    r = parts[0].graph.is_regular()
    if r is None or r < 4:
        raise InvalidParameterError("parts must be r-regular with r >= 4")
    xs, ys, xps, yps = [], [], [], []
    colorings = []
    for p in parts:
        if p.graph.is_regular() != r:
            raise InvalidParameterError("parts must share a common regularity")
        if verify_equivalent_set(p.graph, p.graph.edge_set((p.e, p.e_prime)), cap) is False:
            raise NotEquivalentError("{e, e'} is not an equivalent set of its part")
        if not coloring_is_proper(p.graph, p.coloring, r):
            raise ColoringMismatchError("part coloring is not proper")
        colorings.append(_recolor_class_to_one(p.coloring, (p.e, p.e_prime)))
        x, y = _orient(p.graph, p.e, p.orient_e)
        xp, yp = _orient(p.graph, p.e_prime, p.orient_e_prime)
        xs.append(x)
        ys.append(y)
        xps.append(xp)
        yps.append(yp)

    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.graph.n
    edges = []
    coloring_out = []
    part_maps: list[dict[int, int]] = []
    for i, p in enumerate(parts):
        pm = {}
        for eid, (u, v) in enumerate(p.graph.edges):
            if eid in (p.e, p.e_prime):
                continue
            pm[eid] = len(edges)
            edges.append((u + offsets[i], v + offsets[i]))
            coloring_out.append(colorings[i][eid])
        part_maps.append(pm)
    f_ids, fp_ids = [], []
    for i in range(k):
        nxt = (i + 1) % k
        f_ids.append(len(edges))
        edges.append((xs[i] + offsets[i], ys[nxt] + offsets[nxt]))
        coloring_out.append(1)
        fp_ids.append(len(edges))
        edges.append((xps[i] + offsets[i], yps[nxt] + offsets[nxt]))
        coloring_out.append(1)
    g = Graph(total, edges)

    equiv_sets = tuple(g.edge_set((f_ids[i], fp_ids[i])) for i in range(k))
    witness = None
    nonbip = [i for i, p in enumerate(parts)
              if not is_bipartite(p.graph.delete_edges((p.e, p.e_prime))[0]).bipartite]
    if nonbip:
        witness = g.edge_set(f_ids + fp_ids)
    return ConstructionCertificate(
        name="cycle", params={"k": k, "nonbipartite_parts": nonbip},
        graph=g, r=r, claimed_connectivity=4, coloring=tuple(coloring_out),
        equivalent_sets=equiv_sets, nf_star_witness=witness,
        labels={"f": f_ids, "f_prime": fp_ids, "part_maps": part_maps})


@dataclass(frozen=True)
class StarPart:
    graph: Graph
    coloring: tuple[int, ...]
    w: Optional[int] = None            # default: highest unprotected vertex
    labels: dict = field(default_factory=dict)


def build_star_xs(parts: Sequence[StarPart],
                  cap: int = DEFAULT_CAP) -> ConstructionCertificate:
    """Remove one hub-adjacent vertex per part, add r shared hub vertices.

    Part i loses a vertex w_i with neighbors v_{i,1..r} indexed so that
    the edge w_i v_{i,j} has color j; hub u_j is joined to every v_{i,j}.
    The composed coloring uses the cyclic permutation family
    pi_s(i) = ((i + s - 2) mod r) + 1, placing the hub edge
    u_{pi_s(i)} v_{i,pi_s(i)} with the matching part class.
    """
    r = parts[0].graph.is_regular()
    if r is None or r < 3:
        raise InvalidParameterError("parts must be r-regular with r >= 3")
    if len(parts) != r:
        raise InvalidParameterError(f"need exactly r={r} parts")
    ws = []
    for p in parts:
        if p.graph.is_regular() != r:
            raise InvalidParameterError("parts must share a common regularity")
        if not coloring_is_proper(p.graph, p.coloring, r):
            raise ColoringMismatchError("part coloring is not proper")
        if not color_classes_are_perfect_matchings(p.graph, p.coloring, r):
            raise ColoringMismatchError("part color classes are not perfect matchings")
        ws.append(_pick_w(p))

    # v_{i,j}: the neighbor of w_i along the class-j edge
    v_of: list[dict[int, int]] = []
    for p, w in zip(parts, ws):
        nbrs = {}
        for nb, eid in p.graph.adjacency()[w]:
            c = p.coloring[eid]
            if c in nbrs:
                raise ColoringMismatchError("duplicate color at the removed vertex")
            nbrs[c] = nb
        if sorted(nbrs) != list(range(1, r + 1)):
            raise ColoringMismatchError("removed vertex misses a color")
        v_of.append(nbrs)

    edges = []
    coloring_out = []
    offsets = []
    total = 0
    part_maps: list[dict[int, int]] = []
    vmaps: list[dict[int, int]] = []
    for i, (p, w) in enumerate(zip(parts, ws)):
        sub, emap, vmap = p.graph.delete_vertices((w,))
        offsets.append(total)
        pm = {}
        for old, new in emap.items():
            pm[old] = len(edges)
            u_, v_ = sub.edges[new]
            edges.append((u_ + total, v_ + total))
            c = p.coloring[old]
            # class s satisfies pi_s(i+1) = c with 1-based part index
            coloring_out.append((c - (i + 1)) % r + 1)
        part_maps.append(pm)
        vmaps.append({o: n + total for o, n in vmap.items()})
        total += sub.n
    hubs = [total + j for j in range(r)]
    hub_edge: dict[tuple[int, int], int] = {}
    for i in range(r):
        for j in range(1, r + 1):
            hub_edge[(i, j)] = len(edges)
            edges.append((hubs[j - 1], vmaps[i][v_of[i][j]]))
            coloring_out.append((j - (i + 1)) % r + 1)
    g = Graph(total + r, edges)

    # nF* witness: the whole remainder of a non-bipartite part, provided a
    # second part also stays non-bipartite after its deletion
    nonbip = []
    for p, w in zip(parts, ws):
        sub, _, _ = p.graph.delete_vertices((w,))
        nonbip.append(not is_bipartite(sub).bipartite)
    witness = None
    witness_part = None
    for i in range(r):
        if nonbip[i] and any(nonbip[j] for j in range(r) if j != i):
            witness = g.edge_set(part_maps[i].values())
            witness_part = i
            break

    equiv_sets = []
    labels: dict = {"w": ws, "hubs": hubs, "part_maps": part_maps,
                    "vmaps": vmaps, "witness_part": witness_part}
    p0 = parts[0]
    if {"a1", "a2", "b1", "b2", "a1a2", "b1b2"} <= p0.labels.keys():
        protected = {p0.labels["a1"], p0.labels["a2"],
                     p0.labels["b1"], p0.labels["b2"]}
        if ws[0] not in protected:
            mask = (1 << part_maps[0][p0.labels["a1a2"]]) \
                | (1 << part_maps[0][p0.labels["b1b2"]])
            equiv_sets.append(EdgeSet(mask, g.m))
            labels["a1a2"] = part_maps[0][p0.labels["a1a2"]]
            labels["b1b2"] = part_maps[0][p0.labels["b1b2"]]
    return ConstructionCertificate(
        name="star", params={"r": r, "nonbipartite_parts": nonbip},
        graph=g, r=r, claimed_connectivity=r, coloring=tuple(coloring_out),
        equivalent_sets=tuple(equiv_sets), nf_star_witness=witness,
        labels=labels)


def _pick_w(p: StarPart) -> int:
    protected = {p.labels[k] for k in ("a1", "a2", "b1", "b2")
                 if k in p.labels}
    if p.w is not None:
        return p.w
    for v in range(p.graph.n - 1, -1, -1):
        if v not in protected:
            return v
    raise InvalidParameterError("no admissible vertex to remove")


def star_part_from_certificate(cert: ConstructionCertificate,
                               w: Optional[int] = None) -> StarPart:
    """Reuse a built certificate (graph + coloring + labels) as a star part."""
    if cert.coloring is None:
        raise ColoringMismatchError("certificate carries no coloring")
    labels = {k: cert.labels[k] for k in ("a1", "a2", "b1", "b2", "a1a2", "b1b2")
              if k in cert.labels}
    return StarPart(cert.graph, tuple(cert.coloring), w=w, labels=labels)


def verify_certificate(cert: ConstructionCertificate,
                       cap: int = DEFAULT_CAP,
                       check_connectivity: bool = True) -> list[Claim]:
    """Re-check every claim from scratch; None marks cap-limited claims."""
    g = cert.graph
    claims = []
    mc = is_matching_covered(g, cap)
    claims.append(Claim("matching-covered", mc.covered, mc.reason or ""))
    if cert.r is not None:
        claims.append(Claim(f"{cert.r}-regular",
                            g.is_regular() == cert.r))
    if cert.claimed_connectivity is not None and check_connectivity:
        res = vertex_connectivity_at_least(g, cert.claimed_connectivity)
        claims.append(Claim(f"{cert.claimed_connectivity}-connected",
                            res.ok, str(res.separator or "")))
    if cert.coloring is not None and cert.r is not None:
        claims.append(Claim("proper-coloring",
                            coloring_is_proper(g, cert.coloring, cert.r)))
        claims.append(Claim("color-classes-perfect-matchings",
                            color_classes_are_perfect_matchings(
                                g, cert.coloring, cert.r)))
    enum = None
    if cert.equivalent_sets or cert.nf_star_witness is not None:
        enum = enumerate_perfect_matchings(g, cap)
    for i, s in enumerate(cert.equivalent_sets):
        ok = _equiv_against(enum, s)
        claims.append(Claim(f"equivalent-set-{i}", ok, str(s.ids())))
    if cert.nf_star_witness is not None:
        claims.append(_verify_witness(g, cert.nf_star_witness, enum, cap))
    return claims


def _equiv_against(enum, s: EdgeSet) -> Optional[bool]:
    for mt in enum.matchings:
        inter = mt.mask & s.mask
        if inter != 0 and inter != s.mask:
            return False
    return True if enum.complete else None


def _verify_witness(g: Graph, w: EdgeSet, enum, cap: int) -> Claim:
    """Constant matching parity, and equivalent to neither {} nor E."""
    p0 = len(enum.matchings[0] & w) & 1 if enum.matchings else 0
    for mt in enum.matchings:
        if len(mt & w) & 1 != p0:
            return Claim("nf-star-witness", False, "witness is feasible")
    if not enum.complete:
        return Claim("nf-star-witness", None, "enumeration capped")
    if is_switch_equiv_empty(g, w):
        return Claim("nf-star-witness", False, "witness is a cut")
    if is_switch_equiv_full(g, w):
        return Claim("nf-star-witness", False, "witness complement is a cut")
    ps = parity_spaces(g, cap)
    if ps.cut_plus_E.contains(w.mask):
        return Claim("nf-star-witness", False, "witness in cut + <E>")
    return Claim("nf-star-witness", True, "")


def all_claims_verified(claims: Sequence[Claim]) -> bool:
    return all(c.ok is True for c in claims)
