"""Exact branch-and-reduce solver for 2-Club Cluster Edge Deletion."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    ConflictQuadruple,
    Edge,
    Graph,
    GraphError,
    component_diameters,
    delete_edges,
    distances_from,
    edge,
    find_conflict_quadruple,
    is_two_clubs_graph,
    neighborhood_within,
)
from .reduction import Instance, ReductionOutcome, Status, reduce_exhaustively  # noqa: E402
from .solver import (  # noqa: E402
    CaseDescriptor,
    CaseId,
    InvariantError,
    SearchStats,
    Solution,
    detect_case,
    solve_decision,
    solve_minimize,
    verify_solution,
)
from .oracle import opt_bruteforce, solve_3k  # noqa: E402
from .analysis import branching_number, check_branch_completeness, empirical_branching  # noqa: E402
