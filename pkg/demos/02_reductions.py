"""Watch the reduction rules take an instance apart.

A triangle, a path on seven vertices, a six-cycle and a 3-tail hanging off a
triangle.  Rules 3, 5 and 6 resolve all of it without any branching.
"""
from twoclub.generators import complete, cycle, disjoint_union, path
from twoclub.graph import Graph
from twoclub.reduction import Instance, reduce_exhaustively

tail = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)])
g = disjoint_union(complete(3), path(7), cycle(6), tail)
print(f"{g.vertex_count} vertices, {g.edge_count} edges")

out = reduce_exhaustively(Instance(g, 10))
for ev in out.rule_log:
    print(f"  rule {ev.rule}: vertices {sorted(ev.vertices)} deleted {list(ev.edges)}")
print(f"status {out.status.name}, {len(out.deleted)} deletions, budget left {out.instance.budget}")
