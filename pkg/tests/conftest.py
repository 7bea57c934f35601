import itertools
import math

import pytest
from hypothesis import strategies as st

from twoclub.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def floyd(g: Graph) -> dict[tuple[int, int], float]:
    """All-pairs distances by Floyd-Warshall, independent of the BFS code."""
    vs = g.vertices
    d = {(u, v): 0 if u == v else (1 if g.has_edge(u, v) else math.inf) for u in vs for v in vs}
    for w in vs:
        for u in vs:
            for v in vs:
                if d[u, w] + d[w, v] < d[u, v]:
                    d[u, v] = d[u, w] + d[w, v]
    return d


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@pytest.fixture
def gadget():
    from twoclub.generators import liu_gadget

    return liu_gadget()


def vid(g: Graph, name: str) -> int:
    return next(v for v, lab in g.labels.items() if lab == name)


def named_edge(g: Graph, pair: str) -> tuple[int, int]:
    u, v = vid(g, pair[0]), vid(g, pair[1])
    return (u, v) if u < v else (v, u)
