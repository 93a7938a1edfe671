import pytest

from patrolsim.graph import (DisconnectedGraphError, Graph, GraphError,
                             GraphFormatError, check_edge_list, diameter,
                             dumps_graph, parse_graph)
from patrolsim.generators import (cycle, diamond_gadget_chain,
                                  four_cycle_chain, path_dual)


def bfs_all_pairs_diameter(g):
    # independent oracle: plain dict/queue BFS, no shared helpers
    best = 0
    for s in range(g.n):
        dist = {s: 0}
        queue = [s]
        while queue:
            u = queue.pop(0)
            for v, _ in g.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        assert len(dist) == g.n
        best = max(best, max(dist.values()))
    return best


def test_cycle4_neighbors():
    g = cycle(4)
    # edges sorted lexicographically: (0,1)=e0, (0,3)=e1, (1,2)=e2, (2,3)=e3
    assert g.neighbors(0) == ((1, 0), (3, 1))
    assert g.neighbors(2) == ((1, 2), (3, 3))


def test_path_interior_neighbors():
    g = path_dual(3)
    assert [v for v, _ in g.neighbors(1)] == [0, 2]


def test_four_cycle_chain_connector_degree():
    g = four_cycle_chain(2)
    # exit vertex of the first cycle carries the connector edge
    assert len(g.neighbors(2)) == 3


def test_neighbors_out_of_range():
    with pytest.raises(GraphError):
        cycle(4).neighbors(7)


def test_adjacency_symmetric_with_same_edge_id():
    g = four_cycle_chain(3)
    for u in range(g.n):
        for v, eid in g.neighbors(u):
            assert (u, eid) in g.neighbors(v)
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


def test_diameter_examples():
    assert diameter(cycle(6)) == 3
    assert diameter(path_dual(5)) == 4
    for k in (2, 3, 4):
        g = four_cycle_chain(k)
        assert diameter(g) == bfs_all_pairs_diameter(g)


def test_diameter_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        diameter(g)


def test_validate_ok_and_violations():
    assert cycle(4).validate(require_max_deg3=True) == []
    assert any("self-loop" in v for v in check_edge_list(3, [(0, 0), (1, 2)]))
    assert any("parallel" in v for v in check_edge_list(3, [(0, 1), (1, 0)]))
    bad = check_edge_list(diamond_gadget_chain(2).n,
                          diamond_gadget_chain(2).edges,
                          require_max_deg3=True)
    assert any("degree 4" in v for v in bad)


def test_constructor_rejects_self_loop():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])


def test_roundtrip_identity():
    for g in (cycle(4), path_dual(7), four_cycle_chain(3)):
        assert parse_graph(dumps_graph(g)) == g
        assert parse_graph(dumps_graph(g)).meta == g.meta


def test_parse_errors():
    with pytest.raises(GraphFormatError, match="line 1"):
        parse_graph("not a header\n")
    with pytest.raises(GraphFormatError, match="self-loop"):
        parse_graph("4 1\n3 3\n")
    with pytest.raises(GraphFormatError, match="duplicate"):
        parse_graph("4 2\n0 1\n0 1\n")
    with pytest.raises(GraphFormatError, match="out of range"):
        parse_graph("2 1\n0 5\n")
    with pytest.raises(GraphFormatError):
        parse_graph("4 3\n0 1\n")  # fewer edges than declared
