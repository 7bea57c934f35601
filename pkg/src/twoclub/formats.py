"""Edge-list text format.

::

    c label 1 a
    p edge 3 2
    e 1 2
    e 2 3

Vertices are 1-based in the file and 0-based in memory.  ``c label i name``
comment lines attach external names; other comment lines are ignored.
"""
from __future__ import annotations

from .graph import Graph, GraphError


class ParseError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_graph(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: dict[int, str] = {}
    label_lines: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "c":
            if len(parts) >= 4 and parts[1] == "label":
                try:
                    idx = int(parts[2])
                except ValueError:
                    raise ParseError(lineno, f"bad label index {parts[2]!r}") from None
                labels[idx - 1] = " ".join(parts[3:])
                label_lines.append((lineno, idx))
            continue
        if tag == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(lineno, "malformed header, expected 'p edge N M'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, "malformed header counts") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative header counts")
            continue
        if tag == "e":
            if n is None:
                raise ParseError(lineno, "edge before header")
            if len(parts) != 3:
                raise ParseError(lineno, "malformed edge line")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"vertex index out of range 1..{n}")
            if u == v:
                raise ParseError(lineno, f"self-loop on vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(lineno, f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            edges.append((u - 1, v - 1))
            continue
        raise ParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise ParseError(0, "missing 'p edge' header")
    if len(edges) != m:
        raise ParseError(0, f"header declares {m} edges, found {len(edges)}")
    for lineno, idx in label_lines:
        if not 1 <= idx <= n:
            raise ParseError(lineno, f"label index out of range 1..{n}")
    return Graph.from_edges(n, edges, labels)


def write_graph(g: Graph) -> str:
    """Canonical text: label comments, header, then edges sorted by endpoints."""
    pos = {v: i + 1 for i, v in enumerate(g.vertices)}
    lines = [f"c label {pos[v]} {g.labels[v]}" for v in g.vertices if v in g.labels]
    lines.append(f"p edge {g.vertex_count} {g.edge_count}")
    lines.extend(f"e {pos[u]} {pos[v]}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())
