"""Branch-and-reduce search for 2-Club Cluster Edge Deletion.

Every search node reduces its instance to a fixpoint, detects the first
applicable branching case and recurses on each of the case's edge sets.
Cases are tried in the order 1, 2, 3, 4.1, 4.2.1, 4.2.2.  Each case is taken
only after its structural preconditions are re-checked on the current graph;
when no case can be instantiated the search falls back to the plain three-way
split on a conflict quadruple.

Branching covers every inclusion-minimal solution (some branch set is a subset
of it), so no edge ever needs to be marked permanent.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import (
    ConflictQuadruple,
    Edge,
    Graph,
    GraphError,
    all_distances,
    conflict_quadruples,
    edge,
    is_two_clubs_graph,
)
from .reduction import (
    Instance,
    Status,
    reduce_exhaustively,
    rule3_strip_two_club_components,
    rule5_resolve_degree_two_component,
    rule6_three_tail,
)


class InvariantError(RuntimeError):
    """An internal consistency check failed (a bug, not bad input)."""


class CaseId(str, enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    CASE41 = "Case41"
    CASE421 = "Case421"
    CASE422 = "Case422"
    FALLBACK = "FallbackGeneric"


# Sorted branch-set sizes per case.  Case 1 is absent: its third set has any size >= 2.
BRANCHING_VECTORS: dict[CaseId, tuple[int, ...]] = {
    CaseId.CASE2: (1, 1),
    CaseId.CASE3: (1, 2, 2, 2, 2),
    CaseId.CASE41: (1, 2, 2, 2, 2),
    CaseId.CASE421: (2,) * 3 + (3,) * 10 + (4,) * 4,
    CaseId.CASE422: (2,) * 3 + (3,) * 11,
    CaseId.FALLBACK: (1, 1, 1),
}


@dataclass
class CaseDescriptor:
    case_id: CaseId
    named_vertices: dict[str, int]
    branch_sets: list[tuple[Edge, ...]]

    def size_vector(self) -> tuple[int, ...]:
        return tuple(sorted(len(b) for b in self.branch_sets))


@dataclass(frozen=True)
class Solution:
    deleted: frozenset[Edge]

    @property
    def cost(self) -> int:
        return len(self.deleted)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.deleted)


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    per_case_counts: Counter = field(default_factory=Counter)
    per_rule_counts: Counter = field(default_factory=Counter)
    fallback_count: int = 0
    max_depth: int = 0

    def merge(self, other: "SearchStats") -> "SearchStats":
        self.nodes_expanded += other.nodes_expanded
        self.per_case_counts.update(other.per_case_counts)
        self.per_rule_counts.update(other.per_rule_counts)
        self.fallback_count += other.fallback_count
        self.max_depth = max(self.max_depth, other.max_depth)
        return self

    def fallback_rate(self) -> float:
        branched = sum(self.per_case_counts.values())
        return self.fallback_count / branched if branched else 0.0

    def as_dict(self) -> dict:
        return {
            "nodes_expanded": self.nodes_expanded,
            "per_case_counts": {str(getattr(k, "value", k)): v for k, v in sorted(self.per_case_counts.items())},
            "per_rule_counts": {str(k): v for k, v in sorted(self.per_rule_counts.items())},
            "fallback_count": self.fallback_count,
            "max_depth": self.max_depth,
        }


@dataclass
class DecisionResult:
    answer: bool
    solution: Solution | None
    stats: SearchStats
    rule_log: list = field(default_factory=list)


@dataclass
class MinimizeResult:
    opt: int
    solution: Solution
    stats: SearchStats
    last_stats: SearchStats
    rule_log: list = field(default_factory=list)


# case detection

Dist = Mapping[int, Mapping[int, int]]


def _d(dist: Dist, u: int, v: int) -> float:
    return dist[u].get(v, float("inf"))


def _case1(g: Graph, dist: Dist) -> CaseDescriptor | None:
    for a in g.vertices:
        na = g.neighbors(a)
        for b in sorted(na):
            for c in sorted(g.neighbors(b)):
                if c <= a or c in na:
                    continue
                far_a = [u for u in na if _d(dist, u, c) > 2]
                far_c = [u for u in g.neighbors(c) if _d(dist, u, a) > 2]
                if len(far_a) + len(far_c) >= 2:
                    third = sorted([edge(a, u) for u in far_a] + [edge(c, u) for u in far_c])
                    return CaseDescriptor(
                        CaseId.CASE1,
                        {"a": a, "b": b, "c": c},
                        [(edge(a, b),), (edge(b, c),), tuple(third)],
                    )
    return None


def _fresh(named: Iterable[Edge]) -> bool:
    named = list(named)
    return len(set(named)) == len(named)


def _case4_candidates(g: Graph, dist: Dist, quads: list[ConflictQuadruple]):
    """Yield (case id, roles) for Case 4 patterns in scan order."""
    for a, b, c, d in quads:
        if g.neighbors(b) & g.neighbors(d) != {c}:
            continue
        for y in sorted(g.neighbors(d) - {c}):
            if _d(dist, b, y) != 2:
                continue
            xs = sorted((g.neighbors(b) & g.neighbors(y)) - g.neighbors(d) - {d})
            for x in xs:
                if _d(dist, a, y) == 3:
                    yield CaseId.CASE41, dict(a=a, b=b, c=c, d=d, x=x, y=y)
                    continue
                for v in sorted(g.neighbors(a) & g.neighbors(y)):
                    if _d(dist, v, c) != 2:
                        continue
                    for w in sorted(g.neighbors(c) & g.neighbors(v)):
                        cid = CaseId.CASE422 if w == b else CaseId.CASE421
                        yield cid, dict(a=a, b=b, c=c, d=d, x=x, y=y, v=v, w=w)


def _branch_sets(cid: CaseId, r: dict[str, int]) -> list[tuple[Edge, ...]]:
    e = lambda p, q: edge(r[p], r[q])  # noqa: E731
    ab, bc, cd = e("a", "b"), e("b", "c"), e("c", "d")
    if cid is CaseId.CASE3:
        bw, dw = e("b", "w"), e("d", "w")
        return [(ab,), (bc, bw), (cd, dw), (bc, dw), (cd, bw)]
    bx, xy = e("b", "x"), e("x", "y")
    if cid is CaseId.CASE41:
        return [(ab,), (bc, bx), (cd, xy), (bx, cd), (bc, xy)]
    dy, av, vy = e("d", "y"), e("a", "v"), e("v", "y")
    sets = [
        (dy, cd), (dy, bc), (dy, ab, bx), (dy, ab, xy),
        (av, ab), (av, bc, bx), (av, bc, xy), (av, cd, bx), (av, cd, xy),
        (vy, cd, bx), (vy, cd, xy),
    ]
    if cid is CaseId.CASE421:
        cw, vw = e("c", "w"), e("v", "w")
        sets += [
            (vy, ab, cw), (vy, ab, vw),
            (vy, bc, bx, cw), (vy, bc, bx, vw), (vy, bc, xy, cw), (vy, bc, xy, vw),
        ]
    else:
        sets += [(vy, bc, bx), (vy, bc, xy), (vy, ab, e("v", "b"))]
    return sets


def _named_edges(sets: list[tuple[Edge, ...]]) -> set[Edge]:
    return {x for s in sets for x in s}


def _pattern_ok(g: Graph, cid: CaseId, roles: dict[str, int]) -> bool:
    sets = _branch_sets(cid, roles)
    named = _named_edges(sets)
    if not all(g.has_edge(*x) for x in named):
        return False
    return all(_fresh(s) for s in sets) and len(named) == _expected_named(cid)


def _expected_named(cid: CaseId) -> int:
    return {CaseId.CASE3: 5, CaseId.CASE41: 5, CaseId.CASE421: 10, CaseId.CASE422: 9}[cid]


def _distinct_roles(roles: dict[str, int]) -> bool:
    vs = [v for k, v in roles.items() if not (k == "w" and v == roles["b"])]
    return len(set(vs)) == len(vs)


def detect_case(g: Graph, check_reduced: bool = True, dist: Dist | None = None) -> CaseDescriptor:
    """First applicable branching case on a reduced graph that is not a 2-clubs graph."""
    if dist is None:
        dist = all_distances(g)
    quads = list(conflict_quadruples(g, dist))
    if not quads:
        raise InvariantError("detect_case called on a 2-clubs graph")
    if check_reduced:
        inst = Instance(g, g.edge_count)
        for rule in (rule3_strip_two_club_components, rule5_resolve_degree_two_component, rule6_three_tail):
            if rule(inst).changed:
                raise InvariantError(f"detect_case called on a graph reducible by {rule.__name__}")

    found = _case1(g, dist)
    if found:
        return found

    if all(g.degree(q.a) == 1 and g.degree(q.d) == 1 for q in quads):
        a, b, c, d = quads[0]
        return CaseDescriptor(
            CaseId.CASE2, dict(a=a, b=b, c=c, d=d), [(edge(a, b),), (edge(c, d),)]
        )

    oriented = [q for q in quads if g.degree(q.d) >= 2]
    for a, b, c, d in oriented:
        common = sorted((g.neighbors(b) & g.neighbors(d)) - {c})
        if common:
            roles = dict(a=a, b=b, c=c, d=d, w=common[0])
            return CaseDescriptor(CaseId.CASE3, roles, _branch_sets(CaseId.CASE3, roles))

    candidates = list(_case4_candidates(g, dist, oriented))
    for cid in (CaseId.CASE41, CaseId.CASE421, CaseId.CASE422):
        usable = [r for c, r in candidates if c is cid and _pattern_ok(g, cid, r)]
        usable.sort(key=lambda r: not _distinct_roles(r))
        if usable:
            return CaseDescriptor(cid, usable[0], _branch_sets(cid, usable[0]))

    a, b, c, d = quads[0]
    return CaseDescriptor(
        CaseId.FALLBACK,
        dict(a=a, b=b, c=c, d=d),
        [(edge(a, b),), (edge(b, c),), (edge(c, d),)],
    )


# search


def verify_solution(g: Graph, sol: Solution | Iterable[Edge]) -> bool:
    """True when deleting the solution's edges leaves a 2-clubs graph."""
    deleted = sol.deleted if isinstance(sol, Solution) else list(sol)
    for u, v in deleted:
        if not g.has_edge(u, v):
            raise GraphError(f"solution edge ({u}, {v}) is not in the graph")
    return is_two_clubs_graph(g.delete_edges(deleted))


def _search(g: Graph, k: int, depth: int, stats: SearchStats, root_log: list | None = None) -> set[Edge] | None:
    stats.nodes_expanded += 1
    stats.max_depth = max(stats.max_depth, depth)
    out = reduce_exhaustively(Instance(g, k))
    if root_log is not None:
        root_log.extend(out.rule_log)
    for ev in out.rule_log:
        stats.per_rule_counts[ev.rule] += 1
    if out.status is Status.NO:
        return None
    if out.status is Status.YES:
        return set(out.deleted)
    g, k = out.instance.graph, out.instance.budget
    # reduced and non-empty: every component has a conflict
    if k == 0:
        return None
    case = detect_case(g, check_reduced=False)
    stats.per_case_counts[case.case_id] += 1
    if case.case_id is CaseId.FALLBACK:
        stats.fallback_count += 1
    for branch in case.branch_sets:
        if len(branch) > k:
            continue
        found = _search(g.delete_edges(branch), k - len(branch), depth + 1, stats)
        if found is not None:
            return found | set(branch) | out.deleted
    return None


def solve_decision(inst: Instance) -> DecisionResult:
    """Can ``inst.graph`` become a 2-clubs graph by deleting at most ``inst.budget`` edges?"""
    stats = SearchStats()
    log: list = []
    found = _search(inst.graph, inst.budget, 0, stats, log)
    if found is None:
        return DecisionResult(False, None, stats, log)
    sol = Solution(frozenset(found))
    if sol.cost > inst.budget or not verify_solution(inst.graph, sol):
        raise InvariantError("search returned an invalid certificate")
    return DecisionResult(True, sol, stats, log)


def solve_minimize(g: Graph) -> MinimizeResult:
    """Minimum deletion count by iterative deepening over the budget."""
    total = SearchStats()
    for k in range(g.edge_count + 1):
        res = solve_decision(Instance(g, k))
        total.merge(res.stats)
        if res.answer:
            return MinimizeResult(res.solution.cost, res.solution, total, res.stats, res.rule_log)
    raise InvariantError("deleting every edge must succeed")
