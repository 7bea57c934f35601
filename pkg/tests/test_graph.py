import itertools
import math

import pytest
from hypothesis import given, settings

from conftest import floyd, graphs, named_edge, vid
from twoclub.generators import complete, cycle, disjoint_union, path, star
from twoclub.graph import (
    INF,
    ConflictQuadruple,
    Graph,
    GraphError,
    component_diameters,
    delete_edges,
    distances_from,
    find_conflict_quadruple,
    is_two_clubs_graph,
    neighborhood_within,
)


def test_graph_rejects_self_loops_and_asymmetry():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(GraphError):
        Graph({0: [1], 1: []})
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 5)])


def test_distances_on_path():
    assert distances_from(path(4), 0) == {0: 0, 1: 1, 2: 2, 3: 3}


def test_distances_unreachable_is_infinite():
    g = Graph.from_edges(3, [(1, 2)])
    assert distances_from(g, 0) == {0: 0, 1: INF, 2: INF}


def test_distances_on_gadget(gadget):
    dist = distances_from(gadget, vid(gadget, "t"))
    assert dist[vid(gadget, "y")] == 3
    ref = floyd(gadget)
    t = vid(gadget, "t")
    assert all(dist[v] == ref[t, v] for v in gadget.vertices)


def test_distances_bad_source():
    with pytest.raises(GraphError):
        distances_from(path(3), 7)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_bfs_matches_floyd(g):
    ref = floyd(g)
    for s in g.vertices:
        d = distances_from(g, s)
        assert all(d[v] == ref[s, v] for v in g.vertices)


def test_neighborhood_star():
    g = star(4)
    assert neighborhood_within(g, 0, 1, closed=False) == {1, 2, 3, 4}
    assert neighborhood_within(g, 0, 1, closed=True) == {0, 1, 2, 3, 4}


def test_neighborhood_path():
    g = path(5)
    assert neighborhood_within(g, 0, 2, closed=False) == {2}
    assert neighborhood_within(g, 0, 2, closed=True) == {0, 1, 2}


def test_neighborhood_gadget(gadget):
    t = vid(gadget, "t")
    assert neighborhood_within(gadget, t, 3, closed=False) == {vid(gadget, "y")}
    assert neighborhood_within(gadget, t, 2) == {vid(gadget, c) for c in "tusvxw"}


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_open_first_neighborhood_is_adjacency(g):
    for v in g.vertices:
        assert neighborhood_within(g, v, 1, closed=False) == set(g.neighbors(v))


@pytest.mark.parametrize(
    "g, expected",
    [
        (cycle(5), [2]),
        (cycle(6), [3]),
        (disjoint_union(complete(3), complete(3)), [1, 1]),
        (Graph.from_edges(1, []), [0]),
    ],
)
def test_component_diameters(g, expected):
    comps = component_diameters(g)
    assert [d for _, d in comps] == expected
    assert set().union(*(c for c, _ in comps)) == set(g.vertices)


def test_is_two_clubs_graph_examples(gadget):
    assert is_two_clubs_graph(disjoint_union(complete(3), cycle(5), star(4)))
    assert not is_two_clubs_graph(path(4))
    assert not is_two_clubs_graph(gadget)


def test_find_conflict_quadruple_examples():
    assert find_conflict_quadruple(path(4)) == (0, 1, 2, 3)
    assert find_conflict_quadruple(cycle(5)) is None
    assert find_conflict_quadruple(cycle(6)) == (0, 1, 2, 3)


def brute_quadruples(g):
    d = floyd(g)
    for a, b, c, dd in itertools.permutations(g.vertices, 4):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, dd) and d[a, dd] == 3:
            yield (a, b, c, dd)


def test_c6_quadruple_is_lexicographic_minimum():
    assert find_conflict_quadruple(cycle(6)) == min(brute_quadruples(cycle(6)))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_quadruple_clubs_and_diameter_agree(g):
    q = find_conflict_quadruple(g)
    diam_ok = all(d <= 2 for _, d in component_diameters(g))
    assert (q is None) == is_two_clubs_graph(g) == diam_ok
    brute = sorted(brute_quadruples(g))
    assert q == (brute[0] if brute else None)
    if q is not None:
        a, b, c, d = q
        assert all(g.has_edge(*e) for e in q.edges())
        assert not g.has_edge(a, c) and not g.has_edge(b, d) and not g.has_edge(a, d)
        assert distances_from(g, a)[d] == 3


def test_delete_edges_examples(gadget):
    assert delete_edges(complete(3), [(0, 1)]).edges() == ((0, 2), (1, 2))
    p4 = path(4)
    bare = delete_edges(p4, p4.edges())
    assert bare.vertex_count == 4 and bare.edge_count == 0

    cut = delete_edges(gadget, [named_edge(gadget, "ut"), named_edge(gadget, "sw")])
    comps = sorted(component_diameters(cut), key=lambda c: len(c[0]))
    assert comps[0] == (frozenset({vid(gadget, "t"), vid(gadget, "s")}), 1)
    five = comps[1][0]
    assert five == {vid(gadget, c) for c in "uvywx"}
    assert all(cut.degree(v) == 2 for v in five)
    assert gadget.edge_count == 8  # original untouched


def test_delete_missing_edge_is_an_error():
    with pytest.raises(GraphError):
        delete_edges(path(3), [(0, 2)])


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2))
def test_delete_edges_counts(g):
    half = g.edges()[::2]
    h = delete_edges(g, half)
    assert h.edge_count == g.edge_count - len(half)
    assert h.vertex_count == g.vertex_count


def test_conflict_quadruple_helpers():
    q = ConflictQuadruple(0, 1, 2, 3)
    assert q.reversed() == (3, 2, 1, 0)
    assert q.edges() == ((0, 1), (1, 2), (2, 3))
    assert math.isinf(INF)
