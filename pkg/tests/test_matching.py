import pytest

from oracles import brute_is_matching_covered, brute_perfect_matchings

from matchcover.constructions import (
    complete_bipartite,
    complete_graph,
    cube_graph,
    cycle_graph,
    petersen,
)
from matchcover.corpus import build_corpus
from matchcover.graph import Graph
from matchcover.matching import (
    enumerate_perfect_matchings,
    has_perfect_matching,
    is_matching_covered,
    is_nice_subgraph,
    max_matching,
)


def test_known_perfect_matching_counts():
    assert len(enumerate_perfect_matchings(cycle_graph(4)).matchings) == 2
    assert len(enumerate_perfect_matchings(complete_graph(4)).matchings) == 3
    assert len(enumerate_perfect_matchings(petersen()).matchings) == 6
    assert len(enumerate_perfect_matchings(cube_graph()).matchings) == 9
    assert len(enumerate_perfect_matchings(complete_bipartite(3, 3)).matchings) == 6


def test_enumeration_matches_brute_force_on_corpus():
    for entry in build_corpus(include_random=True):
        g = entry.graph
        if g.n > 10:
            continue
        ours = {frozenset(m.ids())
                for m in enumerate_perfect_matchings(g).matchings}
        brute = set(brute_perfect_matchings(g))
        assert ours == brute, entry.name


def test_enumeration_is_deterministic_and_deduplicated():
    enum = enumerate_perfect_matchings(petersen())
    again = enumerate_perfect_matchings(petersen())
    masks = [m.mask for m in enum.matchings]
    assert masks == [m.mask for m in again.matchings]
    assert len(masks) == len(set(masks))
    assert enum.complete


def test_enumeration_cap():
    enum = enumerate_perfect_matchings(complete_graph(8), cap=3)
    assert len(enum.matchings) == 3
    assert not enum.complete


def test_matchings_are_matchings():
    for entry in build_corpus():
        g = entry.graph
        for m in enumerate_perfect_matchings(g, cap=200).matchings:
            seen = set()
            for eid in m.ids():
                u, v = g.edges[eid]
                assert u not in seen and v not in seen
                seen.update((u, v))
            assert len(seen) == g.n


def test_max_matching_and_has_perfect():
    assert has_perfect_matching(complete_graph(4))
    assert not has_perfect_matching(complete_graph(5))
    path = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert len(max_matching(path)) == 2
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert len(max_matching(star)) == 1
    assert not has_perfect_matching(star)


def test_is_matching_covered_agrees_with_oracle():
    cases = [
        complete_graph(4),
        cycle_graph(6),
        petersen(),
        Graph(4, [(0, 1), (1, 2), (2, 3)]),            # path: not covered
        Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),  # chord unused
        Graph(4, [(0, 1), (2, 3)]),                    # disconnected
        Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]),
    ]
    for g in cases:
        assert is_matching_covered(g).covered == brute_is_matching_covered(g)


def test_is_matching_covered_reasons():
    res = is_matching_covered(Graph(4, [(0, 1), (2, 3)]))
    assert not res.covered and res.reason == "not-connected"
    res = is_matching_covered(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]))
    assert not res.covered and res.uncovered_edge is not None


def test_nice_subgraph():
    g = petersen()
    # outer 5-cycle is odd: never nice
    assert not is_nice_subgraph(g, g.vertex_set(range(5)))
    # the two endpoints of any edge form a nice subgraph (matching-covered)
    assert is_nice_subgraph(g, g.vertex_set(g.edges[0]))
