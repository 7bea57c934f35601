"""Branching numbers, branch-completeness checks and the Liu et al. Case 2.2.4 table."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Edge, Graph, bfs_layers, edge
from .oracle import opt_bruteforce

# Branching vectors of every rule discussed, keyed by a short row name.
RECURRENCES: dict[str, tuple[int, ...]] = {
    "simple3k": (1, 1, 1),
    "case1": (1, 1, 2),
    "case2": (1, 1),
    "case3": (1, 2, 2, 2, 2),
    "case4.1": (1, 2, 2, 2, 2),
    "case4.2.1": (2,) * 3 + (3,) * 10 + (4,) * 4,
    "case4.2.2": (2,) * 3 + (3,) * 11,
    "liu2.2.4": (2,) * 3 + (3,) * 10,
    "liu2.2.4-fixed": (2,) * 4 + (3,) * 10,
}

# Bounds as printed next to each recurrence.
PRINTED_BOUNDS: dict[str, float] = {
    "simple3k": 3.0,
    "case1": 2.415,
    "case2": 2.0,
    "case3": 2.562,
    "case4.1": 2.562,
    "case4.2.1": 2.695,
    "case4.2.2": 2.67,
    "liu2.2.4": 2.62,
    "liu2.2.4-fixed": 2.761,
}


def branching_number(deltas: Iterable[int], tol: float = 1e-6) -> float:
    """Unique root x >= 1 of ``sum(x ** -d) = 1``, by bisection."""
    deltas = list(deltas)
    if not deltas or any(d < 1 for d in deltas):
        raise ValueError("branching vector needs at least one delta, all >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if len(deltas) == 1:
        return 1.0

    def excess(x: float) -> float:
        return sum(x ** -d for d in deltas) - 1.0

    lo, hi = 1.0, float(len(deltas))
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if excess(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def empirical_branching(nodes_or_stats, k: int) -> float:
    """Per-level growth ``nodes ** (1/k)`` of a search tree."""
    nodes = getattr(nodes_or_stats, "nodes_expanded", nodes_or_stats)
    if k <= 0 or nodes <= 1:
        return 1.0
    return nodes ** (1.0 / k)


@dataclass
class Completeness:
    complete: bool | None  # None: the oracle cap was exceeded
    opt: int | None
    best_branch_value: int | None


def check_branch_completeness(
    g: Graph, branches: Sequence[Iterable[Edge]], cap: int | None = None
) -> Completeness:
    """Does ``min_B |B| + OPT(g - B)`` equal ``OPT(g)``?"""
    branches = [tuple(b) for b in branches]
    for b in branches:
        for u, v in b:
            if not g.has_edge(u, v):
                raise ValueError(f"branch edge ({u}, {v}) not in graph")
    opt = opt_bruteforce(g, cap).opt
    if opt is None:
        return Completeness(None, None, None)
    best = None
    for b in branches:
        rest_cap = None if cap is None else max(cap - len(set(b)), 0)
        rest = opt_bruteforce(g.delete_edges(set(b)), rest_cap).opt
        if rest is None:
            continue
        value = len(set(b)) + rest
        best = value if best is None else min(best, value)
    # a capped-out branch is worth more than cap >= OPT, so it never decides the outcome
    return Completeness(best == opt, opt, best)


# Liu et al. Case 2.2.4

LIU_VERTICES = ("v", "u", "t", "s", "x", "w", "y")
_LIU_EDGE_LABELS = {
    1: ("t", "s"),
    2: ("u", "t"),
    3: ("v", "u"),
    4: ("s", "w"),
    5: ("u", "x"),
    6: ("x", "w"),
    7: ("v", "y"),
    8: ("y", "w"),
}
LIU_BRANCHES: tuple[tuple[int, ...], ...] = (
    (1, 5, 7), (1, 5, 8), (1, 6, 7), (1, 6, 8),
    (2, 4), (2, 5, 7), (2, 5, 8), (2, 6, 7), (2, 6, 8),
    (3, 7), (3, 8), (3, 4, 5), (3, 4, 6),
)


@dataclass
class BranchRuleTable:
    gadget: Graph
    edge_numbers: dict[int, Edge]
    branches: list[tuple[int, ...]] = field(default_factory=list)

    def edge_sets(self) -> list[tuple[Edge, ...]]:
        return [tuple(self.edge_numbers[i] for i in b) for b in self.branches]

    def vector(self) -> tuple[int, ...]:
        return tuple(len(set(b)) for b in self.branches)


def liu_case_224() -> BranchRuleTable:
    """The 13-branch rule for Liu et al.'s Case 2.2.4, verbatim."""
    vid = {name: i for i, name in enumerate(LIU_VERTICES)}
    numbers = {i: edge(vid[p], vid[q]) for i, (p, q) in _LIU_EDGE_LABELS.items()}
    gadget = Graph.from_edges(len(vid), numbers.values(), labels=dict(enumerate(LIU_VERTICES)))
    return BranchRuleTable(gadget, numbers, list(LIU_BRANCHES))


def liu_gap_check(branches: Iterable[Iterable[int]] | None = None) -> bool:
    """True when no branch deletes edges 1 and 4 while keeping edges 2 and 3."""
    if branches is None:
        branches = LIU_BRANCHES
    return not any({1, 4} <= set(b) and not {2, 3} & set(b) for b in branches)


def liu_fixed_table() -> BranchRuleTable:
    table = liu_case_224()
    table.branches = [(1, 4)] + table.branches
    return table


@dataclass
class WitnessReport:
    tried: int
    standalone: Completeness
    witness: Graph | None = None
    witness_completeness: Completeness | None = None


def _decorate(rng: random.Random, base: Graph, extra_max: int = 3) -> Graph:
    """Gadget plus 1..``extra_max`` new vertices, each attached to 1-3 earlier vertices."""
    vertices = base.vertices
    edges = set(base.edges())
    nxt = max(vertices) + 1
    for _ in range(rng.randint(1, extra_max)):
        anchors = rng.sample(vertices, rng.randint(1, 3))
        edges.update(edge(nxt, a) for a in anchors)
        vertices = vertices + [nxt]
        nxt += 1
    return Graph.from_edges(vertices, edges, base.labels)


def _keeps_liu_shape(g: Graph) -> bool:
    """The two conflicts the rule resolves, (s,t,u,v) and (s,w,y,v), are still conflicts."""
    v, s = LIU_VERTICES.index("v"), LIU_VERTICES.index("s")
    t, y = LIU_VERTICES.index("t"), LIU_VERTICES.index("y")
    ds, dt = bfs_layers(g, s), bfs_layers(g, t)
    return ds.get(v) == 3 and dt.get(y) == 3


def liu_witness_search(budget: int, seed: int = 0) -> WitnessReport:
    """Look for a decorated gadget on which Liu's 13 branches miss every optimum.

    Decorations only add vertices and keep both conflicts the rule is written
    for; the search is bounded by ``budget`` candidates and never assumed to
    succeed.
    """
    table = liu_case_224()
    standalone = check_branch_completeness(table.gadget, table.edge_sets())
    report = WitnessReport(0, standalone)
    rng = random.Random(seed)
    seen: set[tuple[Edge, ...]] = set()
    while report.tried < budget:
        g = _decorate(rng, table.gadget)
        report.tried += 1
        key = g.edges()
        if key in seen or not _keeps_liu_shape(g):
            continue
        seen.add(key)
        res = check_branch_completeness(g, table.edge_sets())
        if res.complete is False:
            report.witness = g
            report.witness_completeness = res
            break
    return report
