import random

import pytest

from pathalg.errors import GraphError, NoSpanningTree, NotConnected
from pathalg.graph import (
    DirectedEdge,
    build_graph,
    fundamental_cycle_count,
    geodesic,
    is_connected,
    meet,
    orient,
    spanning_tree,
)
from pathalg.sampling import random_connected_graph


def test_build_graph_examples(example_graph):
    assert build_graph(1, []).vertex_count == 1
    assert example_graph.vertex_count == 5 and len(example_graph.geometric_edges) == 6
    g = build_graph(2, [("a", 1, 2), ("b", 1, 2)])
    assert g.edge_names == ["a", "b"]


@pytest.mark.parametrize(
    "n, edges",
    [
        (0, []),
        (2, [("a", 1, 2), ("a", 2, 1)]),
        (2, [("a", 1, 3)]),
        (2, [("v1", 1, 2)]),
        (2, [("bad name", 1, 2)]),
    ],
)
def test_build_graph_errors(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_reverse_is_involution():
    g = build_graph(3, [("a", 1, 2), ("l", 3, 3)])
    for d in g.directed_edges():
        assert d.reverse().reverse() == d
        assert g.origin(d.reverse()) == g.terminus(d)


def test_is_connected(example_graph):
    assert is_connected(build_graph(1, []))
    assert not is_connected(build_graph(2, []))
    assert is_connected(example_graph)


def test_spanning_tree_worked_example(example_graph):
    allowed = {"alpha", "beta", "gamma", "eps", "zeta"}
    t = spanning_tree(example_graph, allowed, 1)
    assert t.tree_edges == {"alpha", "gamma", "beta", "zeta"}
    assert len(t.tree_edges) == example_graph.vertex_count - 1
    assert t.depth == {1: 0, 2: 1, 4: 1, 3: 2, 5: 3}


def test_spanning_tree_small_cases():
    path = build_graph(3, [("a", 1, 2), ("b", 2, 3)])
    assert spanning_tree(path).tree_edges == {"a", "b"}
    tri = build_graph(3, [("a", 1, 2), ("b", 2, 3), ("c", 3, 1)])
    with pytest.raises(NoSpanningTree):
        spanning_tree(tri, {"a"})


def test_spanning_tree_is_deterministic():
    rng = random.Random(5)
    for _ in range(20):
        g, _ = random_connected_graph(rng)
        assert spanning_tree(g) == spanning_tree(g)


def test_orientation_examples(example_graph):
    g = build_graph(2, [("a", 2, 1)])
    o = orient(g, spanning_tree(g, root=1))
    assert o.positive["a"] == DirectedEdge("a", False)
    assert g.origin(o.positive["a"]) == 1

    loop = build_graph(3, [("a", 1, 2), ("b", 2, 3), ("l", 3, 3)])
    o = orient(loop, spanning_tree(loop))
    assert o.positive["l"] == DirectedEdge("l", True)
    assert o.cycle_positive == {"l"}

    t = spanning_tree(example_graph, {"alpha", "beta", "gamma", "eps", "zeta"}, 1)
    o = orient(example_graph, t)
    for name in t.tree_edges:
        d = o.positive[name]
        assert t.depth[example_graph.origin(d)] < t.depth[example_graph.terminus(d)]
    assert o.cycle_positive == {"delta", "eps"}
    assert o.positive["eps"] == DirectedEdge("eps", True)
    assert o.tree_positive | o.cycle_positive == set(o.positive)
    assert not o.tree_positive & o.cycle_positive


def test_geodesic_examples():
    path = build_graph(3, [("a", 1, 2), ("b", 2, 3)])
    t = spanning_tree(path)
    assert geodesic(t, 2, 2) == []
    assert geodesic(t, 1, 3) == [DirectedEdge("a"), DirectedEdge("b")]

    star = build_graph(3, [("a", 1, 2), ("b", 1, 3)])
    t = spanning_tree(star)
    assert geodesic(t, 2, 3) == [DirectedEdge("a", False), DirectedEdge("b")]


def test_geodesic_invariants():
    rng = random.Random(77)
    for _ in range(30):
        g, _ = random_connected_graph(rng)
        t = spanning_tree(g)
        for i in g.vertices:
            for j in g.vertices:
                fwd = geodesic(t, i, j)
                assert [d.reverse() for d in reversed(fwd)] == geodesic(t, j, i)
                m = meet(t, i, j)
                assert len(fwd) == t.depth[i] + t.depth[j] - 2 * t.depth[m]
                if fwd:
                    g.make_path(fwd)
                    assert g.origin(fwd[0]) == i and g.terminus(fwd[-1]) == j
                for a, b in zip(fwd, fwd[1:]):
                    assert b != a.reverse()


def test_fundamental_cycle_count(example_graph):
    assert fundamental_cycle_count(build_graph(3, [("a", 1, 2), ("b", 2, 3)])) == 0
    assert fundamental_cycle_count(example_graph) == 2
    assert fundamental_cycle_count(build_graph(3, [("a", 1, 2), ("b", 2, 3), ("c", 3, 1)])) == 1
    with pytest.raises(NotConnected):
        fundamental_cycle_count(build_graph(2, []))
