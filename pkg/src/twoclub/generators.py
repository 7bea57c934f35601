"""Seeded instance generators and the small named gadgets used throughout the tests."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .graph import Graph, GraphError, edge
from .reduction import Instance, rule3_strip_two_club_components, rule5_resolve_degree_two_component, rule6_three_tail
from .solver import CaseId, detect_case


def labeled(names: str, edges: str) -> Graph:
    """Graph on single-letter vertices, e.g. ``labeled("abc", "ab bc")``."""
    vid = {ch: i for i, ch in enumerate(names)}
    pairs = [(vid[p[0]], vid[p[1]]) for p in edges.split()]
    return Graph.from_edges(len(names), pairs, labels=dict(enumerate(names)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        pos = {v: offset + i for i, v in enumerate(g.vertices)}
        edges += [(pos[u], pos[v]) for u, v in g.edges()]
        offset += g.vertex_count
    return Graph.from_edges(offset, edges)


def figure_tail() -> Graph:
    return labeled("abcdxy", "ab bc cd ax ay")


def figure_common_neighbor() -> Graph:
    return labeled("abcdw", "ab bc cd bw wd")


def figure_distance_three() -> Graph:
    return labeled("abcdxy", "ab bc cd bx xy yd")


def figure_w_not_b() -> Graph:
    return labeled("abcdxyvw", "ab bc cd bx xy yd av vw wc vy")


def figure_w_is_b() -> Graph:
    return labeled("abcdxyv", "ab bc cd bx xy yd av vb vy")


def liu_gadget() -> Graph:
    return labeled("vutsxwy", "ts ut vu sw ux xw vy yw")


def pendant_p5() -> Graph:
    """Path v1..v5 with a pendant on v3 (vertex 5)."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])


def bull() -> Graph:
    """Triangle bcz with pendants a on b and d on c."""
    return labeled("abcdz", "ab bc cd bz cz")


CASE_BASES = {
    CaseId.CASE1: pendant_p5,
    CaseId.CASE2: bull,
    CaseId.CASE3: figure_common_neighbor,
    CaseId.CASE41: figure_distance_three,
    CaseId.CASE421: figure_w_not_b,
    CaseId.CASE422: figure_w_is_b,
}


@dataclass
class GeneratorSpec:
    model: str  # "random" | "planted" | "case"
    n: int = 0
    p: float = 0.0
    club_sizes: list[int] = field(default_factory=list)
    noise_edges: int = 0
    case_id: CaseId | None = None
    decorations: int = 0
    seed: int = 0


@dataclass
class Generated:
    graph: Graph
    planted_upper_bound: int | None = None
    decorations_applied: int = 0


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    if not 0 <= p <= 1:
        raise GraphError("edge probability must lie in [0, 1]")
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def planted_graph(club_sizes: list[int], noise_edges: int, rng: random.Random) -> Graph:
    """Hub-centred clubs (diameter <= 2) plus ``noise_edges`` distinct inter-club edges."""
    if any(s < 1 for s in club_sizes):
        raise GraphError("club sizes must be positive")
    edges, club_of, start = set(), {}, 0
    for ci, size in enumerate(club_sizes):
        members = list(range(start, start + size))
        hub = members[0]
        for v in members:
            club_of[v] = ci
            if v != hub:
                edges.add((hub, v))
        for u, v in itertools.combinations(members[1:], 2):
            if rng.random() < 0.5:
                edges.add((u, v))
        start += size
    inter = [(u, v) for u, v in itertools.combinations(range(start), 2) if club_of[u] != club_of[v]]
    if noise_edges > len(inter) or noise_edges < 0:
        raise GraphError(f"cannot place {noise_edges} noise edges among {len(inter)} inter-club pairs")
    edges.update(rng.sample(inter, noise_edges))
    return Graph.from_edges(start, edges)


def is_rule_fixpoint(g: Graph) -> bool:
    """No budget-independent rule (3, 5, 6) applies."""
    inst = Instance(g, g.edge_count)
    return not any(
        r(inst).changed
        for r in (rule3_strip_two_club_components, rule5_resolve_degree_two_component, rule6_three_tail)
    )


def _root_case(g: Graph) -> CaseId | None:
    if not is_rule_fixpoint(g):
        return None
    try:
        return detect_case(g, check_reduced=False).case_id
    except RuntimeError:
        return None


def decorate_once(g: Graph, rng: random.Random) -> Graph:
    """One random addition: a pendant, a twin, a vertex on 2-3 anchors, or an edge."""
    vertices = g.vertices
    edges = list(g.edges())
    new = max(vertices) + 1
    move = rng.random()
    if move < 0.25:
        edges.append(edge(new, rng.choice(vertices)))
    elif move < 0.5:
        twin = rng.choice(vertices)
        edges += [edge(new, u) for u in g.neighbors(twin)]
        if rng.random() < 0.5:
            edges.append(edge(new, twin))
    elif move < 0.75:
        anchors = rng.sample(vertices, min(rng.randint(2, 3), len(vertices)))
        edges += [edge(new, a) for a in anchors]
    else:
        non_edges = [e for e in itertools.combinations(vertices, 2) if not g.has_edge(*e)]
        if not non_edges:
            return g
        return Graph.from_edges(vertices, edges + [rng.choice(non_edges)], g.labels)
    return Graph.from_edges(vertices + [new], edges, g.labels)


def case_fixture(case_id: CaseId, decorations: int, rng: random.Random, tries: int = 200) -> Generated:
    """Case gadget plus up to ``decorations`` random additions keeping ``case_id`` at the root."""
    g = CASE_BASES[CaseId(case_id)]()
    applied = 0
    for _ in range(decorations):
        for _ in range(tries):
            cand = decorate_once(g, rng)
            if _root_case(cand) == case_id:
                g = cand
                applied += 1
                break
        else:
            break
    return Generated(g, None, applied)


def generate(spec: GeneratorSpec) -> Generated:
    rng = random.Random(spec.seed)
    if spec.model == "random":
        return Generated(random_graph(spec.n, spec.p, rng))
    if spec.model == "planted":
        return Generated(planted_graph(spec.club_sizes, spec.noise_edges, rng), spec.noise_edges)
    if spec.model in ("case", "case_fixture"):
        if spec.case_id is None:
            raise GraphError("case fixtures need a case id")
        return case_fixture(CaseId(spec.case_id), spec.decorations, rng)
    raise GraphError(f"unknown generator model {spec.model!r}")
