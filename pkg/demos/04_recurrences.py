"""Branching numbers of every rule, next to the bounds printed for them.

The branching number of a vector (d1, ..., dm) is the root x > 1 of
sum x^-di = 1; the search tree for budget k has O(x^k) leaves.
"""
from twoclub.analysis import PRINTED_BOUNDS, RECURRENCES, branching_number

print(f"{'rule':16s} {'branches':>8s} {'computed':>9s} {'printed':>8s}")
for name, vec in RECURRENCES.items():
    value = branching_number(vec, tol=1e-9)
    printed = PRINTED_BOUNDS[name]
    flag = "" if abs(value - printed) <= 0.005 else "  <- differs by more than 0.005"
    print(f"{name:16s} {len(vec):8d} {value:9.5f} {printed:8.3f}{flag}")
