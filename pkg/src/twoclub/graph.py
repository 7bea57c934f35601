"""Simple undirected graphs and the distance machinery behind 2-club detection.

Vertices are non-negative integers.  A :class:`Graph` is treated as immutable:
every modifying operation returns a fresh graph, so search-tree nodes can hold
their own residual graph without undo bookkeeping.  Vertex ids survive vertex
removal, which keeps deleted edges expressed in the identities of the input.
"""
from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Mapping, NamedTuple

Edge = tuple[int, int]

INF = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs or operations referring to missing items."""


def edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of the edge ``uv``."""
    if u == v:
        raise GraphError(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


class ConflictQuadruple(NamedTuple):
    """Induced path a-b-c-d whose endpoints are at distance exactly three."""

    a: int
    b: int
    c: int
    d: int

    def edges(self) -> tuple[Edge, Edge, Edge]:
        return edge(self.a, self.b), edge(self.b, self.c), edge(self.c, self.d)

    def reversed(self) -> "ConflictQuadruple":
        return ConflictQuadruple(self.d, self.c, self.b, self.a)


class Graph:
    """Undirected simple graph stored as a map from vertex to neighbour set."""

    __slots__ = ("_adj", "labels", "_edges")

    def __init__(
        self,
        adjacency: Mapping[int, Iterable[int]],
        labels: Mapping[int, str] | None = None,
    ):
        adj = {int(v): frozenset(int(u) for u in nbrs) for v, nbrs in adjacency.items()}
        for v, nbrs in adj.items():
            if v < 0:
                raise GraphError(f"negative vertex id {v}")
            if v in nbrs:
                raise GraphError(f"self-loop on vertex {v}")
            for u in nbrs:
                if u not in adj or v not in adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._adj = adj
        self.labels = dict(labels) if labels else {}
        self._edges: tuple[Edge, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        vertices: int | Iterable[int],
        edges: Iterable[tuple[int, int]],
        labels: Mapping[int, str] | None = None,
    ) -> "Graph":
        """Build a graph; an integer ``vertices`` means ``range(vertices)``."""
        vs = range(vertices) if isinstance(vertices, int) else vertices
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u}, {v}) refers to an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj, labels)

    # basic queries

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> tuple[Edge, ...]:
        """All edges as sorted canonical pairs."""
        if self._edges is None:
            self._edges = tuple(
                sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)
            )
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self.edges())

    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((frozenset(self._adj), self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"

    # derived graphs

    def delete_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Copy of the graph without ``edges``; every edge must be present."""
        adj = {v: set(n) for v, n in self._adj.items()}
        for u, v in edges:
            if not self.has_edge(u, v):
                raise GraphError(f"cannot delete missing edge ({u}, {v})")
            adj[u].discard(v)
            adj[v].discard(u)
        return Graph(adj, self.labels)

    def remove_vertices(self, vertices: Iterable[int]) -> "Graph":
        gone = set(vertices)
        adj = {v: n - gone for v, n in self._adj.items() if v not in gone}
        return Graph(adj, self.labels)

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        adj = {v: self._adj[v] & keep for v in keep}
        return Graph(adj, self.labels)


# distances


def distances_from(g: Graph, source: int) -> dict[int, float]:
    """BFS distance from ``source`` to every vertex; unreachable vertices map to ``INF``."""
    if source not in g:
        raise GraphError(f"vertex {source} not in graph")
    dist: dict[int, float] = dict.fromkeys(g.vertices, INF)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.neighbors(u):
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def bfs_layers(g: Graph, source: int, radius: int | None = None) -> dict[int, int]:
    """Distances from ``source`` for reachable vertices only, optionally cut at ``radius``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if radius is not None and du >= radius:
            continue
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


def all_distances(g: Graph) -> dict[int, dict[int, int]]:
    """Reachable-pair distances; absent keys mean different components."""
    return {v: bfs_layers(g, v) for v in g.vertices}


def neighborhood_within(g: Graph, v: int, t: int, closed: bool = True) -> set[int]:
    """``N_t[v]`` (distance at most ``t``) when ``closed``, else ``N_t(v)`` (exactly ``t``)."""
    if t < 0:
        raise GraphError("radius must be non-negative")
    if v not in g:
        raise GraphError(f"vertex {v} not in graph")
    layers = bfs_layers(g, v, t)
    if closed:
        return set(layers)
    return {u for u, d in layers.items() if d == t}


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen: set[int] = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = bfs_layers(g, v)
        seen.update(comp)
        out.append(sorted(comp))
    return out


def eccentricity(g: Graph, v: int) -> int:
    return max(bfs_layers(g, v).values())


def component_diameters(g: Graph) -> list[tuple[frozenset[int], int]]:
    return [
        (frozenset(comp), max(eccentricity(g, v) for v in comp))
        for comp in components(g)
    ]


def is_two_club(g: Graph, vertices: Iterable[int]) -> bool:
    """Whether the connected vertex set has diameter at most two in ``g``."""
    for v in vertices:
        if any(d > 2 for d in bfs_layers(g, v).values()):
            return False
    return True


def is_two_clubs_graph(g: Graph) -> bool:
    """True when every connected component has diameter at most two."""
    return all(max(bfs_layers(g, v, 3).values()) <= 2 for v in g.vertices)


def conflict_quadruples(
    g: Graph, dist: Mapping[int, Mapping[int, int]] | None = None
) -> Iterator[ConflictQuadruple]:
    """All conflict quadruples in lexicographic (a, b, c, d) order.

    Each undirected conflict appears twice, once per orientation.
    """
    for a in g.vertices:
        da = dist[a] if dist is not None else bfs_layers(g, a, 3)
        for b in sorted(g.neighbors(a)):
            for c in sorted(g.neighbors(b)):
                if da.get(c) != 2:
                    continue
                for d in sorted(g.neighbors(c)):
                    if da.get(d) == 3:
                        yield ConflictQuadruple(a, b, c, d)


def find_conflict_quadruple(g: Graph) -> ConflictQuadruple | None:
    """Lexicographically smallest conflict quadruple, or ``None`` for a 2-clubs graph."""
    return next(conflict_quadruples(g), None)


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return g.delete_edges(edges)
