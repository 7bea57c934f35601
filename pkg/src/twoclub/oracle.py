"""Independent exact solvers used as ground truth.

``opt_bruteforce`` checks edge subsets in size-then-lexicographic order, testing
a whole batch of subsets at once with boolean matrix products.
``solve_3k`` is the folklore search: take any conflict quadruple and delete
one of its three edges.  Neither shares code with the branch-and-reduce solver
beyond the graph type.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graph import Edge, Graph, find_conflict_quadruple
from .reduction import Instance


@dataclass
class OracleResult:
    opt: int | None  # None when no solution of size <= cap exists
    witness: frozenset[Edge] | None
    subsets_examined: int

    @property
    def exceeds_cap(self) -> bool:
        return self.opt is None


def _closed_adjacency(g: Graph) -> tuple[np.ndarray, list[tuple[int, int]]]:
    index = {v: i for i, v in enumerate(g.vertices)}
    n = len(index)
    mat = np.eye(n, dtype=np.float32)
    pairs = []
    for u, v in g.edges():
        i, j = index[u], index[v]
        mat[i, j] = mat[j, i] = 1.0
        pairs.append((i, j))
    return mat, pairs


def _valid_mask(base: np.ndarray, pairs: np.ndarray, combos: np.ndarray) -> np.ndarray:
    """For each row of edge indices, does deleting those edges leave a 2-clubs graph?"""
    batch = combos.shape[0]
    adj = np.broadcast_to(base, (batch,) + base.shape).copy()
    if combos.shape[1]:
        rows = np.repeat(np.arange(batch), combos.shape[1])
        ends = pairs[combos.ravel()]
        adj[rows, ends[:, 0], ends[:, 1]] = 0.0
        adj[rows, ends[:, 1], ends[:, 0]] = 0.0
    within2 = (adj @ adj) > 0
    within3 = (within2.astype(np.float32) @ adj) > 0
    return (within3 == within2).all(axis=(1, 2))


def opt_bruteforce(g: Graph, cap: int | None = None, batch_size: int = 20000) -> OracleResult:
    """Smallest deletion set by exhaustive enumeration of edge subsets of size 0..cap."""
    edges = list(g.edges())
    if cap is None:
        cap = len(edges)
    if cap < 0:
        raise ValueError("cap must be non-negative")
    base, pairs = _closed_adjacency(g)
    pair_arr = np.array(pairs, dtype=np.intp).reshape(-1, 2)
    examined = 0
    for size in range(min(cap, len(edges)) + 1):
        combos = itertools.combinations(range(len(edges)), size)
        while True:
            chunk = list(itertools.islice(combos, batch_size))
            if not chunk:
                break
            arr = np.array(chunk, dtype=np.intp).reshape(len(chunk), size)
            ok = _valid_mask(base, pair_arr, arr)
            hits = np.flatnonzero(ok)
            if hits.size:
                first = int(hits[0])
                examined += first + 1
                return OracleResult(size, frozenset(edges[i] for i in chunk[first]), examined)
            examined += len(chunk)
    return OracleResult(None, None, examined)


def oracle_opt(g: Graph) -> int:
    return opt_bruteforce(g).opt


@dataclass
class ThreeKResult:
    answer: bool
    witness: frozenset[Edge] | None
    nodes: int


def solve_3k(inst: Instance) -> ThreeKResult:
    """Decide the instance by three-way branching on conflict quadruples only."""
    nodes = 0

    def search(g: Graph, k: int) -> frozenset[Edge] | None:
        nonlocal nodes
        nodes += 1
        quad = find_conflict_quadruple(g)
        if quad is None:
            return frozenset()
        if k == 0:
            return None
        for e in quad.edges():
            rest = search(g.delete_edges([e]), k - 1)
            if rest is not None:
                return rest | {e}
        return None

    if inst.budget < 0:
        return ThreeKResult(False, None, 0)
    found = search(inst.graph, inst.budget)
    return ThreeKResult(found is not None, found, nodes)


def opt_3k(g: Graph) -> int:
    """Minimum by iterative deepening over :func:`solve_3k`."""
    k = 0
    while not solve_3k(Instance(g, k)).answer:
        k += 1
    return k
