import random

import pytest
from hypothesis import given, settings

from conftest import graphs, named_edge
from twoclub.generators import (
    complete,
    cycle,
    disjoint_union,
    figure_common_neighbor,
    figure_distance_three,
    figure_w_is_b,
    figure_w_not_b,
    path,
    pendant_p5,
    random_graph,
)
from twoclub.graph import Graph, GraphError, all_distances, components
from twoclub.oracle import oracle_opt
from twoclub.reduction import Instance, reduce_exhaustively, Status
from twoclub.solver import (
    BRANCHING_VECTORS,
    CaseId,
    InvariantError,
    Solution,
    _case1,
    detect_case,
    solve_decision,
    solve_minimize,
    verify_solution,
)


def sets_by_name(g, *groups):
    return [tuple(named_edge(g, e) for e in grp.split()) for grp in groups]


def test_figure2_is_case3():
    g = figure_common_neighbor()
    case = detect_case(g)
    assert case.case_id is CaseId.CASE3
    assert case.branch_sets == sets_by_name(g, "ab", "bc bw", "cd dw", "bc dw", "cd bw")


def test_figure3_is_case41():
    g = figure_distance_three()
    case = detect_case(g)
    assert case.case_id is CaseId.CASE41
    assert case.branch_sets == sets_by_name(g, "ab", "bc bx", "cd xy", "bx cd", "bc xy")


def test_figure5_is_case421():
    g = figure_w_not_b()
    case = detect_case(g)
    assert case.case_id is CaseId.CASE421
    assert case.branch_sets == sets_by_name(
        g,
        "dy cd", "dy bc", "dy ab bx", "dy ab xy",
        "av ab", "av bc bx", "av bc xy", "av cd bx", "av cd xy",
        "vy cd bx", "vy cd xy", "vy ab cw", "vy ab vw",
        "vy bc bx cw", "vy bc bx vw", "vy bc xy cw", "vy bc xy vw",
    )


def test_figure6_is_case422():
    g = figure_w_is_b()
    case = detect_case(g)
    assert case.case_id is CaseId.CASE422
    assert case.named_vertices["w"] == case.named_vertices["b"]
    assert case.branch_sets == sets_by_name(
        g,
        "dy cd", "dy bc", "dy ab bx", "dy ab xy",
        "av ab", "av bc bx", "av bc xy", "av cd bx", "av cd xy",
        "vy cd bx", "vy cd xy", "vy bc bx", "vy bc xy", "vy ab vb",
    )


def test_pendant_p5_is_case1():
    g = pendant_p5()
    dist = all_distances(g)
    # the middle path (v2, v3, v4) qualifies with third branch {v1v2, v4v5}
    far_v2 = {u for u in g.neighbors(1) if dist[u].get(3, 9) > 2}
    far_v4 = {u for u in g.neighbors(3) if dist[u].get(1, 9) > 2}
    assert far_v2 == {0} and far_v4 == {4}
    case = detect_case(g)
    assert case.case_id is CaseId.CASE1
    # lexicographic tie-breaking picks (v1, v2, v3) first
    assert case.named_vertices == {"a": 0, "b": 1, "c": 2}
    assert case.branch_sets == [((0, 1),), ((1, 2),), ((2, 3), (2, 5))]


def test_bull_is_case2():
    from twoclub.generators import bull

    g = bull()
    case = detect_case(g)
    assert case.case_id is CaseId.CASE2
    assert case.branch_sets == sets_by_name(g, "ab", "cd")


def test_detect_case_rejects_clubs_and_reducible_graphs():
    with pytest.raises(InvariantError):
        detect_case(cycle(5))
    with pytest.raises(InvariantError):
        detect_case(path(4))


def test_decision_examples(gadget):
    res = solve_decision(Instance(path(4), 1))
    assert res.answer and res.solution.cost == 1
    assert not solve_decision(Instance(gadget, 1)).answer
    res = solve_decision(Instance(gadget, 2))
    assert res.answer and res.solution.cost == 2
    assert verify_solution(gadget, [named_edge(gadget, "ut"), named_edge(gadget, "sw")])


def test_bridge_between_triangles():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    res = solve_decision(Instance(g, 1))
    assert res.answer
    assert res.solution.deleted == {(2, 3)}


def test_minimize_examples(gadget):
    assert solve_minimize(cycle(6)).opt == 2
    res = solve_minimize(disjoint_union(complete(4), cycle(5)))
    assert res.opt == 0 and res.solution.deleted == frozenset()
    assert solve_minimize(gadget).opt == 2


def test_verify_solution_examples(gadget):
    assert verify_solution(path(4), Solution(frozenset({(1, 2)})))
    assert not verify_solution(path(5), Solution(frozenset({(3, 4)})))
    assert verify_solution(gadget, {named_edge(gadget, "ut"), named_edge(gadget, "sw")})
    with pytest.raises(GraphError):
        verify_solution(path(4), [(0, 3)])


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_certificates_and_monotonicity(g):
    opt = solve_minimize(g).opt
    for k in range(max(opt - 1, 0), opt + 2):
        res = solve_decision(Instance(g, k))
        assert res.answer == (k >= opt)
        if res.answer:
            assert res.solution.cost <= k and verify_solution(g, res.solution)


def test_branching_vectors_conform_on_random_graphs():
    rng = random.Random(5)
    seen = set()
    for _ in range(600):
        g = random_graph(rng.randint(6, 12), rng.choice([0.15, 0.25, 0.35]), rng)
        out = reduce_exhaustively(Instance(g, g.edge_count))
        if out.status is not Status.REDUCED:
            continue
        h = out.instance.graph
        case = detect_case(h)
        seen.add(case.case_id)
        for b in case.branch_sets:
            assert all(h.has_edge(*e) for e in b)
            assert len(set(b)) == len(b)
        if case.case_id is CaseId.CASE1:
            assert case.size_vector()[:2] == (1, 1) and case.size_vector()[2] >= 2
        else:
            assert case.size_vector() == BRANCHING_VECTORS[case.case_id]
    assert {CaseId.CASE1, CaseId.CASE3} <= seen


def test_component_independence():
    rng = random.Random(9)
    for _ in range(40):
        g = random_graph(rng.randint(6, 11), 0.2, rng)
        total = sum(solve_minimize(g.subgraph(c)).opt for c in components(g))
        assert total == solve_minimize(g).opt


def test_case1_scan_finds_nothing_on_cases_3_and_4():
    for g in (figure_common_neighbor(), figure_distance_three(), figure_w_not_b(), figure_w_is_b()):
        assert _case1(g, all_distances(g)) is None


def test_minimize_matches_oracle_on_cycles():
    for n in range(6, 11):
        assert solve_minimize(cycle(n)).opt == oracle_opt(cycle(n))
