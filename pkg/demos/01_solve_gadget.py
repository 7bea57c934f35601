"""Solve a small instance end to end.

The eight-edge gadget below is the counterexample structure from the older
2.62^k algorithm.  Two deletions turn it into a union of 2-clubs; one is not
enough.
"""
from twoclub import Instance, solve_decision, solve_minimize
from twoclub.generators import liu_gadget
from twoclub.formats import write_graph

g = liu_gadget()
print("instance file:")
print(write_graph(g))

for k in (1, 2):
    res = solve_decision(Instance(g, k))
    print(f"k={k}: {'yes' if res.answer else 'no'} after {res.stats.nodes_expanded} search nodes")

best = solve_minimize(g)
names = [f"{g.label(u)}{g.label(v)}" for u, v in best.solution.sorted_edges()]
print(f"minimum deletions: {best.opt} -> delete {', '.join(names)}")
print("cases used:", {c.value: n for c, n in best.stats.per_case_counts.items()})
