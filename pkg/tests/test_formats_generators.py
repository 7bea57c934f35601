import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from twoclub.formats import ParseError, parse_graph, write_graph
from twoclub.generators import (
    CASE_BASES,
    GeneratorSpec,
    complete,
    figure_common_neighbor,
    generate,
    liu_gadget,
)
from twoclub.graph import Graph, GraphError, is_two_clubs_graph
from twoclub.oracle import opt_bruteforce
from twoclub.solver import CaseId, detect_case, solve_minimize


def test_parse_triangle():
    assert parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == complete(3)


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("p edge 2 1\ne 1 1\n", 2),
        ("p edge 2 2\ne 1 2\ne 2 1\n", 3),
        ("p edge 2 1\ne 1 3\n", 2),
        ("p graph 2 1\n", 1),
        ("e 1 2\np edge 2 1\n", 1),
        ("p edge 2 x\n", 1),
        ("p edge 3 1\nq 1 2\n", 2),
    ],
)
def test_parse_errors_name_the_line(text, lineno):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)


def test_edge_count_mismatch():
    with pytest.raises(ParseError):
        parse_graph("p edge 3 2\ne 1 2\n")


def test_write_examples():
    assert write_graph(Graph.from_edges(2, [(0, 1)])) == "p edge 2 1\ne 1 2\n"
    assert write_graph(Graph.from_edges(0, [])) == "p edge 0 0\n"


def test_gadget_file_round_trips_byte_identically():
    text = write_graph(liu_gadget())
    assert "c label 3 t" in text
    again = parse_graph(text)
    assert again == liu_gadget() and again.labels == liu_gadget().labels
    assert write_graph(again) == text


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=0, max_n=9))
def test_round_trip_property(g):
    assert parse_graph(write_graph(g)) == g


def test_random_with_zero_probability_is_empty():
    for seed in range(5):
        g = generate(GeneratorSpec("random", n=6, p=0.0, seed=seed)).graph
        assert g.vertex_count == 6 and g.edge_count == 0


def test_generation_is_deterministic():
    spec = GeneratorSpec("planted", club_sizes=[4, 5, 3], noise_edges=4, seed=123)
    assert write_graph(generate(spec).graph) == write_graph(generate(spec).graph)


@pytest.mark.parametrize("seed", range(6))
def test_planted_two_triples_with_one_bridge(seed):
    out = generate(GeneratorSpec("planted", club_sizes=[3, 3], noise_edges=1, seed=seed))
    assert out.planted_upper_bound == 1
    assert out.graph.edge_count in range(5, 8)
    assert opt_bruteforce(out.graph).opt == 1


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.integers(0, 2 ** 32))
def test_planted_without_noise_is_already_clustered(sizes, seed):
    g = generate(GeneratorSpec("planted", club_sizes=sizes, noise_edges=0, seed=seed)).graph
    assert is_two_clubs_graph(g)
    assert solve_minimize(g).opt == 0


def test_planted_infeasible_noise():
    with pytest.raises(GraphError):
        generate(GeneratorSpec("planted", club_sizes=[2, 1], noise_edges=3, seed=0))


def test_case_fixture_without_decorations_is_the_figure():
    g = generate(GeneratorSpec("case", case_id=CaseId.CASE3, seed=7)).graph
    assert g == figure_common_neighbor()


@pytest.mark.parametrize("case_id", list(CASE_BASES))
def test_case_fixtures_keep_their_case(case_id):
    for seed in range(5):
        out = generate(GeneratorSpec("case", case_id=case_id, decorations=3, seed=seed))
        assert detect_case(out.graph).case_id is case_id


def test_unknown_model():
    with pytest.raises(GraphError):
        generate(GeneratorSpec("lattice"))


def test_fixture_rng_is_local():
    state = random.getstate()
    generate(GeneratorSpec("case", case_id=CaseId.CASE41, decorations=2, seed=1))
    assert random.getstate() == state
