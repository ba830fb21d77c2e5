import pytest

from matchcover.constructions import (
    CyclePart,
    build_cycle_cl,
    build_qr,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    petersen,
)
from matchcover.corpus import build_corpus
from matchcover.ears import (
    classify_nf_star,
    find_ear_decomposition,
    find_single_ear_decomposition,
    validate_decomposition,
)
from matchcover.errors import DimensionTooLargeError
from matchcover.feasibility import nf_star_report
from matchcover.graph import is_bipartite
from matchcover.matching import is_matching_covered


def test_c4_decomposition():
    g = cycle_graph(4)
    d = find_ear_decomposition(g)
    assert d is not None
    assert d.r == 1 and d.epsilon_sum == 1
    assert validate_decomposition(g, d)
    cls = classify_nf_star(g, d)
    assert cls.empty and cls.rule == "case-ii"


def test_c6_single_ear_all_epsilon_one():
    g = cycle_graph(6)
    d = find_single_ear_decomposition(g).decomposition
    assert d is not None
    assert all(s.ear.epsilon == 1 for s in d.steps)
    assert validate_decomposition(g, d)


def test_k33_single_ear_count():
    g = complete_bipartite(3, 3)
    d = find_single_ear_decomposition(g).decomposition
    assert d is not None
    assert d.r == g.m - g.n + 1 == 4
    assert validate_decomposition(g, d)


def test_k4_no_single_ear_but_double_works():
    g = complete_graph(4)
    outcome = find_single_ear_decomposition(g)
    assert outcome.decomposition is None
    assert outcome.odd_cycle is not None and len(outcome.odd_cycle) % 2 == 1

    d = find_ear_decomposition(g)
    assert d is not None and validate_decomposition(g, d)
    assert d.r == 2 and d.epsilon_sum == 3
    cls = classify_nf_star(g, d)
    assert cls.empty and cls.rule == "case-ii"


def test_petersen_classified_nonempty():
    g = petersen()
    d = find_ear_decomposition(g)
    assert d is not None and validate_decomposition(g, d)
    cls = classify_nf_star(g, d)
    assert not cls.empty
    assert not nf_star_report(g).empty


def test_edge_and_vertex_counts():
    for entry in build_corpus():
        g = entry.graph
        d = find_ear_decomposition(g)
        assert d is not None, entry.name
        ear_edges = sum(sum(p.length for p in s.ear.paths) for s in d.steps)
        assert g.m == 1 + ear_edges, entry.name
        internal = sum(sum(len(p.internal) for p in s.ear.paths)
                       for s in d.steps)
        assert g.n == 2 + internal, entry.name


def test_every_corpus_decomposition_validates():
    for entry in build_corpus():
        g = entry.graph
        d = find_ear_decomposition(g)
        assert d is not None, entry.name
        val = validate_decomposition(g, d)
        assert val, (entry.name, val.clause, val.step)


def test_single_ear_iff_bipartite():
    for entry in build_corpus():
        g = entry.graph
        bip = is_bipartite(g).bipartite
        outcome = find_single_ear_decomposition(g)
        assert (outcome.decomposition is not None) == bip, entry.name
        if not bip:
            assert outcome.odd_cycle is not None


def test_classifier_agrees_with_direct_report():
    for entry in build_corpus():
        g = entry.graph
        d = find_ear_decomposition(g)
        assert d is not None, entry.name
        try:
            cls = classify_nf_star(g, d)
        except DimensionTooLargeError:
            continue  # documented refusal on large prefixes
        assert cls.empty == nf_star_report(g).empty, (entry.name, cls.rule)


def test_intermediate_graphs_matching_covered():
    g = petersen()
    d = find_ear_decomposition(g)
    for i in range(d.r + 1):
        sub, _, _ = g.edge_subgraph(d.prefix_edges(i))
        assert is_matching_covered(sub).covered, i


def test_case_iv_fires_somewhere():
    """A decomposition ending in a single ear past the case-ii bound must
    exist in the corpus so the restriction test is actually exercised."""
    rules = set()
    for entry in build_corpus():
        g = entry.graph
        d = find_ear_decomposition(g)
        try:
            rules.add(classify_nf_star(g, d).rule)
        except DimensionTooLargeError:
            pass
    assert "case-ii" in rules
    assert rules & {"case-iii", "case-iv"}, rules


def test_validation_rejects_foreign_decomposition():
    d = find_ear_decomposition(cycle_graph(4))
    other = cycle_graph(6)
    assert not validate_decomposition(other, d)
