"""Search-tree growth on planted instances.

Clubs joined by a few noise edges have a known upper bound on the optimum.  We
measure nodes^(1/opt), the effective branching factor, and compare it with the
proven 2.695.
"""
import random

from twoclub.analysis import empirical_branching
from twoclub.generators import planted_graph
from twoclub.solver import solve_minimize

rng = random.Random(3)
print(f"{'n':>3s} {'m':>3s} {'noise':>5s} {'opt':>3s} {'nodes':>6s} {'factor':>6s}")
for noise in range(2, 11, 2):
    sizes = [rng.randint(3, 6) for _ in range(4)]
    g = planted_graph(sizes, noise, rng)
    res = solve_minimize(g)
    factor = empirical_branching(res.stats, res.opt)
    print(f"{g.vertex_count:3d} {g.edge_count:3d} {noise:5d} {res.opt:3d} "
          f"{res.stats.nodes_expanded:6d} {factor:6.3f}")
