import pytest

from matchcover.errors import DimensionMismatch, InvalidParameterError
from matchcover.graph import (
    EdgeSet,
    Graph,
    VertexSet,
    boundary,
    components,
    induced_subgraph,
    is_bipartite,
    is_connected,
    vertex_connectivity_at_least,
)
from matchcover.constructions import (
    complete_bipartite,
    complete_graph,
    cube_graph,
    cycle_graph,
    petersen,
)


def test_graph_basics():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    assert g.n == 4 and g.m == 6
    assert g.degrees() == [3, 3, 3, 3]
    assert g.is_regular() == 3
    assert g.endpoints(4) == (0, 2)


def test_graph_rejects_bad_edges():
    with pytest.raises(InvalidParameterError):
        Graph(3, [(0, 0)])
    with pytest.raises(InvalidParameterError):
        Graph(3, [(0, 3)])


def test_graph_immutable():
    g = complete_graph(4)
    with pytest.raises(AttributeError):
        g.n = 5


def test_multigraph_allowed():
    g = Graph(2, [(0, 1), (0, 1)])
    assert g.m == 2
    assert g.is_regular() == 2


def test_edge_set_operations():
    a = EdgeSet.from_ids(6, [0, 2])
    b = EdgeSet.from_ids(6, [2, 5])
    assert sorted((a ^ b).ids()) == [0, 5]
    assert sorted((a | b).ids()) == [0, 2, 5]
    assert sorted((a & b).ids()) == [2]
    assert 2 in a and 1 not in a
    assert a.issubset(a | b)
    with pytest.raises(DimensionMismatch):
        a ^ EdgeSet.from_ids(5, [0])
    with pytest.raises(DimensionMismatch):
        EdgeSet.from_ids(3, [7])


def test_delete_and_subgraph_maps():
    g = complete_graph(4)
    h, emap = g.delete_edges([0])
    assert h.m == 5 and 0 not in emap
    assert all(h.edges[new] == g.edges[old] for old, new in emap.items())

    h2, emap2, vmap2 = g.delete_vertices([3])
    assert h2.n == 3
    assert all(3 not in g.edges[old] for old in emap2)

    sub, emap3, vmap3 = g.edge_subgraph([0, 1])
    assert sub.m == 2
    assert sub.n == len({w for e in (0, 1) for w in g.edges[e]})


def test_boundary_is_cut():
    g = cycle_graph(6)
    cut = boundary(g, g.vertex_set([0, 1]))
    assert len(cut) == 2
    # xor of single-vertex stars equals the two-vertex boundary
    cut2 = boundary(g, g.vertex_set([0])) ^ boundary(g, g.vertex_set([1]))
    assert cut == cut2


def test_components_and_connectivity():
    g = Graph(4, [(0, 1), (2, 3)])
    comps = components(g)
    assert len(comps) == 2
    assert not is_connected(g)
    assert is_connected(complete_graph(4))


def test_bipartite_detection_and_odd_walk():
    res = is_bipartite(cube_graph())
    assert res.bipartite
    c = res.coloring
    for u, v in cube_graph().edges:
        assert c[u] != c[v]

    res = is_bipartite(petersen())
    assert not res.bipartite
    cyc = res.odd_walk
    assert len(cyc) % 2 == 1
    pairs = {(min(u, v), max(u, v)) for u, v in petersen().edges}
    for i in range(len(cyc)):
        a, b = cyc[i], cyc[(i + 1) % len(cyc)]
        assert (min(a, b), max(a, b)) in pairs


def test_vertex_connectivity_petersen():
    g = petersen()
    assert vertex_connectivity_at_least(g, 3).ok
    res = vertex_connectivity_at_least(g, 4)
    assert not res.ok
    sep = res.separator
    assert sep is not None and len(sep) == 3
    h, _, _ = g.delete_vertices(sep)
    assert not is_connected(h)


def test_vertex_connectivity_complete_bipartite():
    g = complete_bipartite(3, 3)
    assert vertex_connectivity_at_least(g, 3).ok
    assert not vertex_connectivity_at_least(g, 4).ok


def test_induced_subgraph():
    g = complete_graph(4)
    h, emap, vmap = induced_subgraph(g, g.vertex_set([0, 1, 2]))
    assert h.n == 3 and h.m == 3
