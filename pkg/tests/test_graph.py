from __future__ import annotations

import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from conftest import any_graphs, connected_graphs, edge_set, nx_distances, to_nx
from wreathlab.errors import DisconnectedGraphError, GraphError
from wreathlab.graph import (
    INFINITY,
    Graph,
    add_loops,
    all_pairs_distances,
    connected_components,
    diameter,
    disjoint_union,
    eccentricity_and_diameter,
    empty_graph,
    family,
    from_edge_list,
    induced_subgraph,
    is_bipartite,
    is_complete_graph,
    is_connected,
    is_path_graph,
    paw,
)
from wreathlab.metric import antipodal
from wreathlab.products import wreath_product


def test_paw_from_edge_list():
    g = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert g == paw()
    assert g.degrees() == [2, 2, 3, 1]


def test_single_vertex():
    g = from_edge_list(1, [])
    assert g.n == 1 and g.num_edges == 0 and is_connected(g)


def test_triangle_is_two_regular():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert g.regular_degree() == 2
    assert g == family("complete", 3) == family("cycle", 3)


@pytest.mark.parametrize(
    "edges, loops",
    [([(0, 3)], False), ([(1, 1)], False), ([(0, 1), (1, 0)], False), ([(-1, 0)], False)],
)
def test_from_edge_list_rejects(edges, loops):
    with pytest.raises(GraphError):
        from_edge_list(3, edges, allow_loops=loops)


def test_complete_six():
    g = family("complete", 6)
    assert g.num_edges == 15
    assert set(g.degrees()) == {5}


def test_path_nine_end_to_end():
    d = all_pairs_distances(family("path", 9))
    assert d[0, 8] == 8
    assert d[2, 6] == 4


def test_loops_only():
    o2 = family("loops_only", 2)
    assert o2.edges() == [(0, 0), (1, 1)]
    assert o2.degrees() == [2, 2]


@pytest.mark.parametrize("kind, n", [("cycle", 2), ("cycle", 1), ("complete", 0), ("star", 3)])
def test_family_rejects(kind, n):
    with pytest.raises(GraphError):
        family(kind, n)


def test_add_loops():
    assert add_loops(family("complete", 1)) == family("loops_only", 1)
    c4 = add_loops(family("cycle", 4))
    assert c4.num_edges == 8
    assert sum(1 for u, v in c4.edges() if u == v) == 4
    with pytest.raises(GraphError):
        add_loops(c4)


def test_add_loops_on_odd_cycle_antipodal():
    a = antipodal(family("cycle", 5))
    assert add_loops(a).num_edges == 10


def test_paw_distance():
    assert all_pairs_distances(paw())[0, 3] == 2


def test_unreachable_is_infinity():
    d = all_pairs_distances(disjoint_union([family("complete", 2), family("complete", 1)]))
    assert d[0, 2] == INFINITY and d[0, 1] == 1


def test_distance_matrix_is_read_only_and_cached():
    g = family("cycle", 5)
    d = all_pairs_distances(g)
    assert d is all_pairs_distances(g)
    with pytest.raises(ValueError):
        d[0, 0] = 3


@pytest.mark.parametrize("n", range(2, 9))
def test_family_diameters(n):
    assert diameter(family("complete", n)) == 1
    assert diameter(family("path", n)) == n - 1
    if n >= 3:
        assert diameter(family("cycle", n)) == n // 2


def test_diameter_needs_connected():
    with pytest.raises(DisconnectedGraphError):
        eccentricity_and_diameter(empty_graph(2))


def test_bipartite_examples():
    assert is_bipartite(family("cycle", 4))
    assert not is_bipartite(family("cycle", 3))
    assert is_bipartite(wreath_product(family("complete", 2), family("path", 3)))
    assert not is_bipartite(wreath_product(family("complete", 2), family("cycle", 3)))
    assert not is_bipartite(family("loops_only", 1))


def test_disjoint_union_examples():
    k2 = family("complete", 2)
    assert nx.is_isomorphic(to_nx(disjoint_union([k2, k2])), to_nx(antipodal(family("cycle", 4))))
    assert disjoint_union([]) == empty_graph(0)
    a_p9 = antipodal(family("path", 9))
    assert nx.is_isomorphic(to_nx(disjoint_union([k2, empty_graph(7)])), to_nx(a_p9))
    assert a_p9.edges() == [(0, 8)]


def test_induced_subgraph_relabels():
    g = induced_subgraph(family("cycle", 6), [1, 2, 3])
    assert g == family("path", 3)


def test_shape_predicates():
    assert is_path_graph(family("path", 5))
    assert not is_path_graph(family("cycle", 5))
    assert is_path_graph(from_edge_list(3, [(0, 2), (2, 1)]))
    assert is_complete_graph(family("complete", 4))
    assert not is_complete_graph(paw())


@settings(max_examples=200, deadline=None)
@given(any_graphs(loops=True))
def test_degree_sum(g: Graph):
    assert sum(g.degrees()) == 2 * g.num_edges
    g.check()


@settings(max_examples=200, deadline=None)
@given(any_graphs())
def test_distances_match_networkx(g: Graph):
    d = all_pairs_distances(g)
    ref = nx_distances(g)
    assert np.array_equal(np.where(d == INFINITY, -1, d), ref)


@settings(max_examples=200, deadline=None)
@given(connected_graphs())
def test_triangle_inequality_and_symmetry(g: Graph):
    d = all_pairs_distances(g)
    assert np.array_equal(d, d.T)
    assert np.all(np.diagonal(d) == 0)
    # d[u, v] <= d[u, w] + d[w, v] for all triples
    assert np.all(d[:, None, :] <= d[:, :, None] + d[None, :, :])


def _has_odd_cycle(g: Graph) -> bool:
    if g.has_loops:
        return True
    return any(len(c) % 2 for c in nx.simple_cycles(to_nx(g)))


@settings(max_examples=300, deadline=None)
@given(any_graphs(max_n=8))
def test_bipartite_iff_no_odd_cycle(g: Graph):
    assert is_bipartite(g) == (not _has_odd_cycle(g))


def test_bipartite_exhaustive_small():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for k in range(len(pairs) + 1):
            for edges in itertools.combinations(pairs, k):
                g = from_edge_list(n, edges)
                assert is_bipartite(g) == (not _has_odd_cycle(g))


@settings(max_examples=100, deadline=None)
@given(any_graphs())
def test_components_match_networkx(g: Graph):
    ours = sorted(sorted(c) for c in connected_components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs


@settings(max_examples=100, deadline=None)
@given(any_graphs(), any_graphs())
def test_disjoint_union_edge_count(g, h):
    u = disjoint_union([g, h])
    assert u.num_edges == g.num_edges + h.num_edges
    assert edge_set(u) == edge_set(g) | {(a + g.n, b + g.n) for a, b in h.edges()}
