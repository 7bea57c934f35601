"""Command-line interface.

Exit codes: 0 when the command ran (a "no" answer included), 1 for bad input,
2 when an internal check fails (an invalid certificate, a solver/oracle mismatch).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from . import __version__
from .analysis import (
    PRINTED_BOUNDS,
    RECURRENCES,
    branching_number,
    empirical_branching,
    liu_case_224,
    liu_fixed_table,
    liu_gap_check,
    liu_witness_search,
)
from .formats import read_graph, write_graph
from .generators import GeneratorSpec, generate, random_graph
from .graph import Graph, GraphError
from .oracle import opt_bruteforce
from .reduction import Instance
from .solver import CaseId, InvariantError, solve_decision, solve_minimize, verify_solution


def _pairs(g: Graph, edges) -> list[list[int]]:
    pos = {v: i + 1 for i, v in enumerate(g.vertices)}
    return sorted([pos[u], pos[v]] for u, v in edges)


def _label_pairs(g: Graph, edges) -> list[list[str]]:
    pos = {v: i + 1 for i, v in enumerate(g.vertices)}
    name = lambda v: g.labels.get(v, str(pos[v]))  # noqa: E731
    return [[name(u), name(v)] for u, v in sorted(edges)]


def _rule_log(g: Graph, log) -> list[dict]:
    pos = {v: i + 1 for i, v in enumerate(g.vertices)}
    return [
        {
            "rule": ev.rule,
            "vertices": sorted(pos[v] for v in ev.vertices),
            "edges": _pairs(g, ev.edges),
            "budget_delta": ev.budget_delta,
        }
        for ev in log
    ]


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_solve(args) -> int:
    t0 = time.perf_counter()
    g = read_graph(args.file)
    t1 = time.perf_counter()
    if args.k is not None:
        res = solve_decision(Instance(g, args.k))
        status = "yes" if res.answer else "no"
        sol, stats, log, k_used = res.solution, res.stats, res.rule_log, args.k
    else:
        res = solve_minimize(g)
        status = "opt"
        sol, stats, log, k_used = res.solution, res.stats, res.rule_log, res.opt
    t2 = time.perf_counter()
    deleted = sorted(sol.deleted) if sol else []
    if sol is not None and not verify_solution(g, sol):
        raise InvariantError("certificate failed verification")
    report = {
        "status": status,
        "k_used": k_used,
        "deleted_edges": _pairs(g, deleted),
        "deleted_labels": _label_pairs(g, deleted),
        "stats": stats.as_dict(),
        "reductions": _rule_log(g, log),
        "tool_version": __version__,
    }
    if not args.no_timings:
        report["timings"] = {"parse_s": t1 - t0, "solve_s": t2 - t1}
    if args.json:
        _emit(report)
    else:
        print(f"status: {status}")
        print(f"k: {k_used}")
        print("deleted: " + " ".join(f"{u}-{v}" for u, v in report["deleted_labels"]))
        print(f"nodes: {stats.nodes_expanded}  fallback: {stats.fallback_count}")
    return 0


def cmd_oracle(args) -> int:
    g = read_graph(args.file)
    res = opt_bruteforce(g, args.cap)
    _emit({
        "opt": res.opt if res.opt is not None else "exceeds cap",
        "witness": _pairs(g, res.witness) if res.witness is not None else None,
        "subsets_examined": res.subsets_examined,
        "tool_version": __version__,
    })
    return 0


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    mismatches, fallback_nodes, nodes = [], 0, 0
    for i in range(args.samples):
        n = rng.randint(min(args.n_min, args.n_max), args.n_max)
        p = rng.choice((0.2, 0.35, 0.5))
        g = random_graph(n, p, rng)
        mine = solve_minimize(g)
        truth = opt_bruteforce(g).opt
        nodes += mine.stats.nodes_expanded
        fallback_nodes += mine.stats.fallback_count
        if mine.opt != truth:
            mismatches.append({"sample": i, "n": n, "p": p, "solver": mine.opt, "oracle": truth,
                               "edges": _pairs(g, g.edges())})
    _emit({
        "samples": args.samples,
        "mismatches": mismatches,
        "nodes_expanded": nodes,
        "fallback_nodes": fallback_nodes,
        "tool_version": __version__,
    })
    return 2 if mismatches else 0


def cmd_gen(args) -> int:
    spec = GeneratorSpec(
        model=args.model,
        n=args.n,
        p=args.p,
        club_sizes=[int(s) for s in args.clubs.split(",")] if args.clubs else [],
        noise_edges=args.noise,
        case_id=CaseId(args.case) if args.case else None,
        decorations=args.decorations,
        seed=args.seed,
    )
    out = generate(spec)
    text = write_graph(out.graph)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return 0


def cmd_stats(args) -> int:
    g = read_graph(args.file)
    res = solve_decision(Instance(g, args.k))
    _emit({
        "answer": "yes" if res.answer else "no",
        "k": args.k,
        "stats": res.stats.as_dict(),
        "empirical_branching": empirical_branching(res.stats, args.k),
        "tool_version": __version__,
    })
    return 0


def cmd_check_liu(args) -> int:
    fixed = liu_fixed_table()
    gap = liu_gap_check(liu_case_224().branches)
    payload = {
        "gap": gap,
        "gap_after_fix": liu_gap_check(fixed.branches),
        "original_vector_number": branching_number(RECURRENCES["liu2.2.4"]),
        "fixed_vector_number": branching_number(fixed.vector()),
        "tool_version": __version__,
    }
    if args.search_budget:
        rep = liu_witness_search(args.search_budget, args.seed)
        payload["witness_search"] = {
            "tried": rep.tried,
            "standalone_opt": rep.standalone.opt,
            "standalone_best_branch_value": rep.standalone.best_branch_value,
            "witness": write_graph(rep.witness) if rep.witness else "none found within budget",
        }
    if args.json:
        _emit(payload)
    else:
        print(f"gap: {str(gap).lower()}; fixed vector number: {payload['fixed_vector_number']:.3f}")
        if "witness_search" in payload:
            ws = payload["witness_search"]
            print(f"witness search ({ws['tried']} tried): {ws['witness']}")
    return 0


def _vector_text(deltas) -> str:
    parts, i = [], 0
    ds = sorted(deltas)
    while i < len(ds):
        j = i
        while j < len(ds) and ds[j] == ds[i]:
            j += 1
        run = j - i
        parts += [f"{ds[i]}×{run}"] if run > 3 else [str(ds[i])] * run
        i = j
    return "[" + ",".join(parts) + "]"


def cmd_recurrences(args) -> int:
    rows = [(name, vec, branching_number(vec)) for name, vec in RECURRENCES.items()]
    if args.json:
        _emit({name: {"vector": list(vec), "number": num, "printed": PRINTED_BOUNDS[name]}
               for name, vec, num in rows})
        return 0
    for name, vec, num in rows:
        print(f"{name} | {_vector_text(vec)} | {num:.3f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twoclub", description="2-Club Cluster Edge Deletion toolkit")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide or minimise an instance")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--k", type=int)
    mode.add_argument("--minimize", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timings", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive optimum")
    p.add_argument("file")
    p.add_argument("--cap", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="solver-vs-oracle on random graphs")
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("--model", choices=("random", "planted", "case"), required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--clubs", help="comma-separated club sizes")
    p.add_argument("--noise", type=int, default=0)
    p.add_argument("--case", choices=[c.value for c in CaseId if c is not CaseId.FALLBACK])
    p.add_argument("--decorations", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="search statistics for one budget")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("check-liu", help="Liu et al. Case 2.2.4 gap and corrected bound")
    p.add_argument("--search-budget", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_liu)

    p = sub.add_parser("recurrences", help="branching numbers of all rules")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_recurrences)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
