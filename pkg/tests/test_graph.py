import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from src.graph import (
    UNREACHABLE,
    average_path_length,
    bfs_distances,
    build_graph,
    degree,
    giant_component_fraction,
    induced_subgraph,
)
from src.utils.errors import GraphConstructionError, InvalidEdgeError, InvalidNodeError
from tests.graphs import complete, edge_set, er, floyd_warshall, graphs, path, to_nx, union_find_giant


def test_build_path_graph():
    g, report = build_graph(3, [(0, 1), (1, 2)])
    assert g.edge_count == 2
    assert report.self_loops == 0 and report.duplicates == 0
    assert g.adjacency(1).tolist() == [0, 2]


def test_build_drops_duplicates_and_self_loops():
    g, report = build_graph(3, [(0, 1), (1, 0), (2, 2)])
    assert g.edge_count == 1
    assert report.duplicates == 1
    assert report.self_loops == 1
    assert degree(g, 2) == 0


def test_build_complete_graph():
    g = complete(5)
    assert g.edge_count == 10
    assert g.degrees().tolist() == [4] * 5


def test_build_rejects_out_of_range_edge():
    with pytest.raises(InvalidEdgeError) as err:
        build_graph(3, [(0, 1), (1, 3)])
    assert err.value.edge == (1, 3)
    assert "(1, 3)" in str(err.value)


def test_build_rejects_empty_node_set():
    with pytest.raises(GraphConstructionError):
        build_graph(0, [])


def test_graph_arrays_are_read_only(k5):
    with pytest.raises(ValueError):
        k5.indices[0] = 3


def test_degree(k5, star5):
    assert degree(k5, 2) == 4
    assert degree(star5, 0) == 5
    g, _ = build_graph(3, [(0, 1)])
    assert degree(g, 2) == 0
    with pytest.raises(InvalidNodeError):
        degree(k5, 5)


def test_has_edge(star5):
    assert star5.has_edge(0, 3)
    assert star5.has_edge(3, 0)
    assert not star5.has_edge(1, 2)


def test_induced_subgraph_of_complete_graph(k5):
    sub, mapping = induced_subgraph(k5, {1, 3, 4})
    assert sub.node_count == 3
    assert sub.edge_count == 3
    assert mapping == {1: 0, 3: 1, 4: 2}


def test_induced_subgraph_of_star_leaves(star5):
    sub, _ = induced_subgraph(star5, {1, 2, 3})
    assert sub.node_count == 3
    assert sub.edge_count == 0


def test_induced_subgraph_matches_edge_filter():
    g = er(20, 0.3, seed=11)
    rng = np.random.default_rng(5)
    members = set(rng.choice(20, size=8, replace=False).tolist())
    sub, mapping = induced_subgraph(g, members)
    expected = {(mapping[u], mapping[v]) for u, v in edge_set(g) if u in members and v in members}
    assert edge_set(sub) == expected


def test_induced_subgraph_rejects_invalid_member(k5):
    with pytest.raises(InvalidNodeError):
        induced_subgraph(k5, {0, 7})


def test_bfs_distances_on_path(path3):
    assert bfs_distances(path3, 0).tolist() == [0, 1, 2]


def test_bfs_flags_unreachable_nodes():
    g, _ = build_graph(4, [(0, 1), (2, 3)])
    dist = bfs_distances(g, 0)
    assert dist.tolist() == [0, 1, UNREACHABLE, UNREACHABLE]


def test_bfs_matches_floyd_warshall():
    g = er(30, 0.1, seed=3)
    all_pairs = floyd_warshall(g)
    for source in range(g.node_count):
        row = all_pairs[source]
        expected = np.where(np.isfinite(row), row, UNREACHABLE).astype(int)
        assert bfs_distances(g, source).tolist() == expected.tolist()


def test_bfs_rejects_invalid_source(path3):
    with pytest.raises(InvalidNodeError):
        bfs_distances(path3, 3)


def test_average_path_length_examples(path3):
    assert average_path_length(complete(4)).mean == 1.0
    result = average_path_length(path3)
    assert result.mean == pytest.approx(4 / 3)
    assert result.disconnected_pairs == 0
    assert result.connected_pairs == 3


def test_average_path_length_reports_disconnected_pairs():
    g, _ = build_graph(4, [(0, 1), (2, 3)])
    result = average_path_length(g)
    assert result.mean == 1.0
    assert result.connected_pairs == 2
    assert result.disconnected_pairs == 4


def test_average_path_length_undefined_without_connected_pairs():
    g, _ = build_graph(3, [])
    result = average_path_length(g)
    assert result.mean is None
    assert result.connected_pairs == 0
    assert result.disconnected_pairs == 3


def test_average_path_length_matches_all_pairs_oracle():
    g = er(25, 0.12, seed=8)
    d = floyd_warshall(g)
    upper = d[np.triu_indices(g.node_count, k=1)]
    finite = upper[np.isfinite(upper)]
    result = average_path_length(g, block_size=7)
    assert result.mean == pytest.approx(finite.mean(), abs=1e-12)
    assert result.disconnected_pairs == int((~np.isfinite(upper)).sum())


def test_average_path_length_needs_two_nodes():
    with pytest.raises(GraphConstructionError):
        average_path_length(build_graph(1, [])[0])


def test_giant_component_fraction():
    assert giant_component_fraction(complete(6)) == 1.0
    g, _ = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert giant_component_fraction(g) == 0.5


def test_giant_component_matches_union_find():
    rng = np.random.default_rng(40)
    pairs = []
    # planted components of sizes 15, 10, 8, 7
    start = 0
    for size in (15, 10, 8, 7):
        nodes = list(range(start, start + size))
        pairs += list(zip(nodes, nodes[1:]))
        pairs += [tuple(rng.choice(nodes, 2)) for _ in range(size)]
        start += size
    g, _ = build_graph(40, pairs)
    assert giant_component_fraction(g) == union_find_giant(g) / 40 == 15 / 40


@given(graphs())
def test_graph_invariants(g):
    deg = g.degrees()
    assert deg.sum() == 2 * g.edge_count
    for u in range(g.node_count):
        nbrs = g.adjacency(u).tolist()
        assert u not in nbrs
        assert nbrs == sorted(set(nbrs))
        for v in nbrs:
            assert g.has_edge(v, u)


@given(graphs())
def test_induced_subgraph_on_all_nodes_is_identity(g):
    sub, mapping = induced_subgraph(g, range(g.node_count))
    assert mapping == {u: u for u in range(g.node_count)}
    assert np.array_equal(sub.indptr, g.indptr)
    assert np.array_equal(sub.indices, g.indices)


@given(graphs(max_nodes=20))
def test_bfs_distances_differ_by_at_most_one_across_edges(g):
    dist = bfs_distances(g, 0)
    for u, v in g.edges().tolist():
        assert (dist[u] == UNREACHABLE) == (dist[v] == UNREACHABLE)
        if dist[u] != UNREACHABLE:
            assert abs(int(dist[u]) - int(dist[v])) <= 1


@pytest.mark.parametrize("n", [2, 3, 7, 12])
def test_average_path_length_of_complete_graph_is_one(n):
    assert average_path_length(complete(n)).mean == 1.0


def test_average_path_length_agrees_with_networkx():
    g = er(60, 0.08, seed=21)
    h = to_nx(g)
    giant = h.subgraph(max(nx.connected_components(h), key=len))
    if giant.number_of_nodes() == g.node_count:
        assert average_path_length(g).mean == pytest.approx(nx.average_shortest_path_length(h))
    else:
        lengths = dict(nx.all_pairs_shortest_path_length(h))
        values = [d for u, row in lengths.items() for v, d in row.items() if u < v]
        assert average_path_length(g).mean == pytest.approx(np.mean(values))


def test_edges_are_sorted_pairs():
    g, _ = build_graph(4, [(3, 0), (2, 1), (1, 0)])
    assert g.edges().tolist() == [[0, 1], [0, 3], [1, 2]]
    assert sorted(itertools.chain.from_iterable(g.edges().tolist())) == [0, 0, 1, 1, 2, 3]
