"""Feasible / non-feasible edge sets, switching-equivalence, nF* reports.

An edge set X is feasible when two perfect matchings meet it with
different parities.  Algebraically: fix a base matching M0 and let D be
the GF(2) span of all symmetric differences M xor M0; then X is
non-feasible iff X is orthogonal to D.  This reduction is validated
against a 2^m brute-force oracle in the test suite before being trusted.

Switching-equivalence (X ~ Y iff X xor Y is an edge cut) is decided both
combinatorially (2-coloring the components of g minus the cut) and by cut
space membership; the two routes are asserted to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import (IncompleteEnumerationError, NoPerfectMatchingError,
                     NotMatchingCoveredError)
from .gf2 import Gf2Subspace, subspace_equal, subspace_sum
from .graph import EdgeSet, Graph, VertexSet, boundary, components
from .matching import (DEFAULT_CAP, enumerate_perfect_matchings,
                       is_matching_covered)

MAX_ENUM_DIM = 24


@dataclass(frozen=True)
class ParitySpaces:
    """Everything the parity predicates need, built from one enumeration."""

    graph: Graph
    matchings: tuple[EdgeSet, ...]
    complete: bool
    base_matching: EdgeSet                 # M0, first enumerated matching
    D: Gf2Subspace                         # span{M xor M0}
    nF: Gf2Subspace                        # orthogonal complement of D
    cut: Gf2Subspace                       # span of vertex stars
    cut_plus_E: Gf2Subspace                # cut + <E>

    @property
    def dims(self) -> tuple[int, int, int, bool]:
        return (self.D.dim, self.nF.dim, self.cut.dim,
                self.cut.contains(self.graph.full_edge_set().mask))


def parity_spaces(g: Graph, cap: int = DEFAULT_CAP) -> ParitySpaces:
    enum = enumerate_perfect_matchings(g, cap)
    if not enum.matchings:
        raise NoPerfectMatchingError("graph has no perfect matching")
    base = enum.matchings[0]
    d = Gf2Subspace(g.m)
    for mt in enum.matchings[1:]:
        d.insert(mt.mask ^ base.mask)
    cut = Gf2Subspace(g.m)
    for v in range(g.n):
        cut.insert(boundary(g, g.vertex_set((v,))).mask)
    cut_plus_e = subspace_sum(cut, Gf2Subspace(g.m, ((1 << g.m) - 1,)))
    return ParitySpaces(g, enum.matchings, enum.complete, base, d,
                        d.orthogonal_complement(), cut, cut_plus_e)


def _scan_feasible(ps: ParitySpaces, x: EdgeSet) -> Optional[bool]:
    """Parity scan over enumerated matchings; None = constant but capped."""
    p0 = len(ps.matchings[0] & x) & 1
    for mt in ps.matchings[1:]:
        if len(mt & x) & 1 != p0:
            return True
    return False if ps.complete else None


def is_feasible(g: Graph, x: EdgeSet, ps: Optional[ParitySpaces] = None,
                cap: int = DEFAULT_CAP) -> bool:
    """Two matchings meet x with different parities?

    A feasible verdict may be certified from a capped enumeration; a
    non-feasible verdict needs the enumeration to have completed.
    """
    if ps is None:
        ps = parity_spaces(g, cap)
    scan = _scan_feasible(ps, x)
    if scan is None:
        raise IncompleteEnumerationError(
            "enumeration capped; cannot certify non-feasible")
    if ps.complete:
        algebraic = not ps.nF.contains(x.mask)
        assert algebraic == scan, "parity scan and GF(2) route disagree"
    return scan


@dataclass(frozen=True)
class SwitchVerdict:
    equivalent: bool
    witness: Optional[VertexSet]    # U with X = boundary(U), when yes

    def __bool__(self) -> bool:
        return self.equivalent


def is_switch_equiv_empty(g: Graph, x: EdgeSet) -> SwitchVerdict:
    """Is x an edge cut boundary(U)?  Recovers U combinatorially."""
    rest, _ = g.delete_edges(x.ids())
    comps = components(rest)
    comp_of = [0] * g.n
    for ci, vs in enumerate(comps):
        for v in vs.ids():
            comp_of[v] = ci
    # 2-color the component graph induced by the edges of x
    side: list[Optional[int]] = [None] * len(comps)
    adj: list[list[int]] = [[] for _ in range(len(comps))]
    ok = True
    for eid in x.ids():
        u, v = g.edges[eid]
        cu, cv = comp_of[u], comp_of[v]
        if cu == cv:
            ok = False
            break
        adj[cu].append(cv)
        adj[cv].append(cu)
    if ok:
        for s in range(len(comps)):
            if side[s] is not None:
                continue
            side[s] = 0
            stack = [s]
            while stack and ok:
                a = stack.pop()
                for b in adj[a]:
                    if side[b] is None:
                        side[b] = 1 - side[a]
                        stack.append(b)
                    elif side[b] == side[a]:
                        ok = False
                        break
    witness = None
    if ok:
        mask = 0
        for ci, vs in enumerate(comps):
            if side[ci] == 1:
                mask |= vs.mask
        witness = VertexSet(mask, g.n)
        assert boundary(g, witness).mask == x.mask
    # cross-check against cut space membership
    cut = Gf2Subspace(g.m)
    for v in range(g.n):
        cut.insert(boundary(g, g.vertex_set((v,))).mask)
    assert cut.contains(x.mask) == ok, "combinatorial and GF(2) routes disagree"
    return SwitchVerdict(ok, witness)


def is_switch_equiv_full(g: Graph, x: EdgeSet) -> SwitchVerdict:
    """Is x switching-equivalent to the full edge set E?"""
    return is_switch_equiv_empty(g, g.full_edge_set() ^ x)


def is_switch_equiv(g: Graph, x: EdgeSet, y: EdgeSet) -> SwitchVerdict:
    """Is x = y xor boundary(V0) for some V0?"""
    return is_switch_equiv_empty(g, x ^ y)


@dataclass(frozen=True)
class NfStarReport:
    empty: bool
    witness: Optional[EdgeSet]
    dims: tuple[int, int, int, bool]    # (dim D, dim nF, dim cut, E in cut)


def nf_star_report(g: Graph, cap: int = DEFAULT_CAP,
                   ps: Optional[ParitySpaces] = None) -> NfStarReport:
    """Is every non-feasible set switching-equivalent to {} or E?

    Since cut <= nF and E in nF always hold for matching-covered graphs,
    the class {X : X ~ {} or X ~ E} is exactly the subspace cut + <E>, so
    emptiness is a dimension comparison.  A nonempty verdict carries the
    first reduced nF basis vector outside cut + <E>, re-verified by a
    direct parity scan and by membership tests.
    """
    mc = is_matching_covered(g, cap)
    if not mc:
        raise NotMatchingCoveredError(f"not matching-covered: {mc.reason}")
    if ps is None:
        ps = parity_spaces(g, cap)
    if not ps.complete:
        raise IncompleteEnumerationError(
            "enumeration capped; nF is only an over-approximation")
    assert all(ps.nF.contains(r) for r in ps.cut.basis())
    assert ps.nF.contains((1 << g.m) - 1)
    empty = subspace_equal(ps.nF, ps.cut_plus_E)
    if empty:
        return NfStarReport(True, None, ps.dims)
    witness_mask = next(r for r in ps.nF.basis()
                        if not ps.cut_plus_E.contains(r))
    witness = EdgeSet(witness_mask, g.m)
    # independent re-verification of the witness
    assert _scan_feasible(ps, witness) is False
    assert not is_switch_equiv_empty(g, witness)
    assert not is_switch_equiv_full(g, witness)
    return NfStarReport(False, witness, ps.dims)


def enumerate_nf(g: Graph, max_dim: int = MAX_ENUM_DIM,
                 cap: int = DEFAULT_CAP,
                 ps: Optional[ParitySpaces] = None) -> Iterator[EdgeSet]:
    """Yield all 2^dim members of nF(g) once each (Gray-code order)."""
    if ps is None:
        ps = parity_spaces(g, cap)
    if not ps.complete:
        raise IncompleteEnumerationError(
            "enumeration capped; nF is only an over-approximation")
    for mask in ps.nF.members(max_dim):
        yield EdgeSet(mask, g.m)
