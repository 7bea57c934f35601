"""Each branching case on its defining figure, with its branch sets checked.

For every case the brute-force oracle confirms that the best branch reaches
the optimum, i.e. the case does not lose solutions.
"""
import random

from twoclub.analysis import branching_number, check_branch_completeness
from twoclub.generators import CASE_BASES, case_fixture
from twoclub.solver import CaseId, detect_case

for case_id, build in CASE_BASES.items():
    g = build()
    case = detect_case(g)
    sizes = case.size_vector()
    verdict = check_branch_completeness(g, case.branch_sets)
    print(f"{case_id.value:8s} |B|={len(case.branch_sets):2d} vector {sizes} "
          f"-> {branching_number(sizes):.3f}; complete={verdict.complete}")

rng = random.Random(1)
fixture = case_fixture(CaseId.CASE421, 4, rng)
case = detect_case(fixture.graph)
print(f"\ndecorated fixture ({fixture.decorations_applied} decorations, "
      f"{fixture.graph.edge_count} edges) still detected as {case.case_id.value}")
