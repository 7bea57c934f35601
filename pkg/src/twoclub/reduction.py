"""Polynomial-time reduction rules for 2-Club Cluster Edge Deletion.

Rules are tried in the fixed order 1..6 and the scan restarts from Rule 1
after any rule changes the instance:

1. budget negative -> no-instance
2. graph empty -> yes-instance
3. drop connected components that are already 2-clubs
4. two non-adjacent vertices with more than ``k`` common neighbours end up in
   the same 2-club, so their neighbours at distance three from the partner
   are cut off
5. components of maximum degree two (paths, long cycles) are solved directly
6. a 3-tail ``a-b-c-d`` with pendant ``d`` loses the edge ``ab``
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .graph import Edge, Graph, bfs_layers, components, edge, is_two_club


@dataclass(frozen=True)
class Instance:
    graph: Graph
    budget: int


class Status(enum.Enum):
    REDUCED = "reduced"
    YES = "yes"
    NO = "no"


class RuleEvent(NamedTuple):
    rule: int
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    budget_delta: int


class RuleApplication(NamedTuple):
    changed: bool
    instance: Instance
    deleted: tuple[Edge, ...] = ()
    event: RuleEvent | None = None


@dataclass
class ReductionOutcome:
    status: Status
    instance: Instance
    deleted: set[Edge] = field(default_factory=set)
    rule_log: list[RuleEvent] = field(default_factory=list)


def _unchanged(inst: Instance) -> RuleApplication:
    return RuleApplication(False, inst)


def _deleting(inst: Instance, rule: int, vertices, edges) -> RuleApplication:
    edges = tuple(sorted(set(edges)))
    g = inst.graph.delete_edges(edges)
    event = RuleEvent(rule, tuple(vertices), edges, len(edges))
    return RuleApplication(True, Instance(g, inst.budget - len(edges)), edges, event)


def rule3_strip_two_club_components(inst: Instance) -> RuleApplication:
    g = inst.graph
    doomed = [v for comp in components(g) if is_two_club(g, comp) for v in comp]
    if not doomed:
        return _unchanged(inst)
    event = RuleEvent(3, tuple(doomed), (), 0)
    return RuleApplication(True, Instance(g.remove_vertices(doomed), inst.budget), (), event)


def rule4_cut_set(g: Graph, a: int, b: int) -> set[Edge]:
    """Edges from ``a`` (``b``) to its neighbours farther than two from ``b`` (``a``)."""
    near_a = bfs_layers(g, a, 2)
    near_b = bfs_layers(g, b, 2)
    cut = {edge(a, u) for u in g.neighbors(a) if u not in near_b}
    cut |= {edge(b, u) for u in g.neighbors(b) if u not in near_a}
    return cut


def rule4_heavy_common_neighbors(inst: Instance) -> RuleApplication:
    g, k = inst.graph, inst.budget
    for a in g.vertices:
        na = g.neighbors(a)
        if len(na) <= k:
            continue
        second = set()
        for c in na:
            second |= g.neighbors(c)
        for b in sorted(second):
            if b <= a or b in na:
                continue
            if len(na & g.neighbors(b)) <= k:
                continue
            cut = rule4_cut_set(g, a, b)
            if cut:
                return _deleting(inst, 4, (a, b), cut)
    return _unchanged(inst)


def path_order(g: Graph, comp: list[int]) -> list[int]:
    """Vertices of a path component walked from its smaller endpoint."""
    if len(comp) == 1:
        return list(comp)
    start = min(v for v in comp if g.degree(v) == 1)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [u for u in g.neighbors(cur) if u != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def path_cuts(order: list[int]) -> list[Edge]:
    """Optimal deletions on a path: ``v3v4, v6v7, ...`` counting from one."""
    return [edge(order[i - 1], order[i]) for i in range(3, len(order), 3)]


def resolve_degree_two_component(g: Graph, comp: list[int]) -> list[Edge]:
    """Optimal deletion set for a path or cycle component."""
    comp_edges = sorted({edge(v, u) for v in comp for u in g.neighbors(v)})
    if len(comp_edges) == len(comp) - 1:
        return path_cuts(path_order(g, comp))
    first = comp_edges[0]
    opened = g.delete_edges([first])
    return [first] + path_cuts(path_order(opened, comp))


def rule5_resolve_degree_two_component(inst: Instance) -> RuleApplication:
    g = inst.graph
    for comp in components(g):
        # short cycles are 2-clubs; in the pipeline Rule 3 has already removed them
        if max(g.degree(v) for v in comp) > 2 or is_two_club(g, comp):
            continue
        cuts = resolve_degree_two_component(g, comp)
        if cuts:
            return _deleting(inst, 5, comp, cuts)
    return _unchanged(inst)


def find_three_tail(g: Graph) -> tuple[int, int, int, int] | None:
    """First 3-tail ``(a, b, c, d)`` with ``d`` pendant and ``b, c`` of degree two."""
    for d in g.vertices:
        if g.degree(d) != 1:
            continue
        (c,) = g.neighbors(d)
        if g.degree(c) != 2:
            continue
        (b,) = g.neighbors(c) - {d}
        if g.degree(b) != 2:
            continue
        (a,) = g.neighbors(b) - {c}
        if g.degree(a) >= 2:
            return a, b, c, d
    return None


def rule6_three_tail(inst: Instance) -> RuleApplication:
    tail = find_three_tail(inst.graph)
    if tail is None:
        return _unchanged(inst)
    a, b, _, _ = tail
    return _deleting(inst, 6, tail, [edge(a, b)])


RULES: tuple[tuple[int, Callable[[Instance], RuleApplication]], ...] = (
    (3, rule3_strip_two_club_components),
    (4, rule4_heavy_common_neighbors),
    (5, rule5_resolve_degree_two_component),
    (6, rule6_three_tail),
)


def reduce_exhaustively(inst: Instance) -> ReductionOutcome:
    """Apply Rules 1-6 to a fixpoint, restarting from Rule 1 after every change."""
    out = ReductionOutcome(Status.REDUCED, inst)
    while True:
        if inst.budget < 0:
            out.status = Status.NO
            break
        if inst.graph.vertex_count == 0:
            out.status = Status.YES
            break
        for _, rule in RULES:
            step = rule(inst)
            if step.changed:
                inst = step.instance
                out.deleted.update(step.deleted)
                out.rule_log.append(step.event)
                break
        else:
            break
    out.instance = inst
    return out
