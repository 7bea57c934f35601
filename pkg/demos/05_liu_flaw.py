"""The hole in the older Case 2.2.4 branching table.

Its 13 branches never delete edges 1 and 4 together while keeping 2 and 3, so
solutions of that shape are not covered.  Adding {1, 4} closes the hole but
raises the branching number above 2.76.
"""
from twoclub.analysis import (branching_number, check_branch_completeness, liu_case_224,
                              liu_fixed_table, liu_gap_check, liu_witness_search)

table = liu_case_224()
print("edge numbering:", {i: tuple(table.gadget.label(v) for v in e) for i, e in table.edge_numbers.items()})
print("gap in the verbatim table:", liu_gap_check(table.branches))
print(f"vector number as printed: {branching_number(table.vector()):.4f}")

fixed = liu_fixed_table()
print("gap after adding {1,4}:", liu_gap_check(fixed.branches))
print(f"corrected vector number: {branching_number(fixed.vector()):.4f}")

alone = check_branch_completeness(table.gadget, table.edge_sets())
print(f"on the bare gadget: OPT={alone.opt}, best branch={alone.best_branch_value}")

rep = liu_witness_search(400, seed=0)
print(f"witness search over {rep.tried} decorated gadgets:",
      "found one" if rep.witness else "no standalone counterexample found")
