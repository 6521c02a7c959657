"""Command-line interface.

Every command prints a single JSON envelope {"status", "payload",
"diagnostics"} to stdout (the search command can emit CSV instead) and
returns a process exit code: 0 on success, 1 on mathematical or input
errors, 2 on usage errors (argparse), 3 when an enumeration budget runs
out.  Counts cross the boundary as decimal strings; identical argument
vectors produce byte-identical output.

The LCF_BUDGET environment variable (a positive integer) overrides both
enumeration budget knobs for commands that enumerate.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from .counting import (
    Budget,
    DEFAULT_BUDGET,
    ListAssignment,
    count_bipartite_fast,
    count_list_colorings,
    find_bad_assignment,
    minimize_over_assignments,
)
from .errors import BudgetExceededError
from .graphs import (
    DEFAULT_DC_NODE_BUDGET,
    Graph,
    GraphFamily,
    chromatic_polynomial,
    closed_form_chromatic_polynomial,
    make_complete_bipartite,
)
from .search import CSV_HEADER, SearchConfig, empirical_threshold_profile
from .thresholds import (
    TransversalParams,
    certify_threshold_above,
    threshold_bounds,
    transversal_assignment,
    verify_witness,
)


class CliError(Exception):
    """User-facing command failure (bad combination of flags, bad file, ...)."""


def _env_budget() -> tuple[Budget, int]:
    raw = os.environ.get("LCF_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET, DEFAULT_DC_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise CliError(f"LCF_BUDGET must be an integer, got {raw!r}") from exc
    if value < 1:
        raise CliError("LCF_BUDGET must be positive")
    return Budget(max_assignments=value, max_nodes=value), value


def _add_graph_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--family",
        choices=["complete", "cycle", "path", "k2l"],
        help="graph family (path is a tree on n vertices)",
    )
    sub.add_argument("--n", type=int, help="vertex count for complete/cycle/path")
    sub.add_argument("--l", type=int, help="large-side size for k2l")
    sub.add_argument("--graph", metavar="FILE", help="graph JSON file")


def _resolve_family(args) -> Optional[GraphFamily]:
    if args.family is None:
        return None
    if args.family == "k2l":
        if args.l is None:
            raise CliError("--family k2l requires --l")
        return GraphFamily.complete_bipartite(2, args.l)
    if args.n is None:
        raise CliError(f"--family {args.family} requires --n")
    if args.family == "complete":
        return GraphFamily.complete(args.n)
    if args.family == "cycle":
        return GraphFamily.cycle(args.n)
    return GraphFamily.tree(args.n, [(i, i + 1) for i in range(args.n - 1)])


def _resolve_graph(args) -> tuple[Graph, Optional[GraphFamily]]:
    family = _resolve_family(args)
    if family is not None and args.graph is not None:
        raise CliError("give either --family or --graph, not both")
    if family is not None:
        return family.build(), family
    if args.graph is None:
        raise CliError("a graph is required: --family ... or --graph FILE")
    with open(args.graph, "r", encoding="utf-8") as fh:
        return Graph.from_json(fh.read()), None


def _load_assignment(path: str) -> ListAssignment:
    # Accepts a bare assignment file or a witness record embedding one.
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if "lists" in data:
        return ListAssignment.from_json_dict(data)
    if "assignment" in data:
        return ListAssignment.from_json_dict(data["assignment"])
    raise CliError(f"{path} holds neither an assignment nor a witness record")


def _detect_bipartite_split(g: Graph) -> tuple[int, int]:
    for n in range(1, 5):
        l = g.num_vertices - n
        if l < 1:
            break
        if g.edges == make_complete_bipartite(n, l).edges:
            return n, l
    raise CliError("--fast requires a complete bipartite graph with small side <= 4")


def cmd_chrompoly(args) -> dict:
    g, family = _resolve_graph(args)
    method = args.method or ("closed" if family is not None else "dc")
    if method == "closed":
        if family is None:
            raise CliError("--method closed needs a --family graph")
        value = closed_form_chromatic_polynomial(family, args.m)
    else:
        _, dc_nodes = _env_budget()
        value = chromatic_polynomial(g, args.m, max_nodes=dc_nodes)
    return {"value": str(value)}


def cmd_count(args) -> dict:
    g, family = _resolve_graph(args)
    assignment = _load_assignment(args.assignment)
    if args.fast:
        if family is not None and family.kind == "complete_bipartite":
            n, l = family.n, family.l
        else:
            n, l = _detect_bipartite_split(g)
        value = count_bipartite_fast(n, l, assignment)
    else:
        budget, _ = _env_budget()
        value = count_list_colorings(g, assignment, budget=budget)
    return {"value": str(value)}


def cmd_plf(args) -> dict:
    g, _ = _resolve_graph(args)
    budget, _ = _env_budget()
    assignment, value = minimize_over_assignments(g, args.m, budget=budget)
    return {"value": str(value), "assignment": assignment.to_json_dict()}


def cmd_choosable(args) -> dict:
    g, _ = _resolve_graph(args)
    budget, _ = _env_budget()
    bad = find_bad_assignment(g, args.k, budget=budget)
    if bad is None:
        return {"choosable": True, "k": args.k}
    return {"choosable": False, "k": args.k, "bad_assignment": bad.to_json_dict()}


def cmd_construct(args) -> dict:
    params = TransversalParams(n=args.n, t=args.t, m=args.m)
    assignment = transversal_assignment(params)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(assignment.to_json_dict(), sort_keys=True) + "\n")
    return {
        "assignment": assignment.to_json_dict(),
        "n": params.n,
        "t": params.t,
        "m": params.m,
        "l": params.l,
    }


def cmd_certify(args) -> dict:
    eps = Fraction(args.eps)
    record = certify_threshold_above(args.l, args.m, eps)
    if not verify_witness(record):
        raise CliError("certificate failed verification")  # unreachable by design
    payload = record.to_json_dict()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, sort_keys=True) + "\n")
    return payload


def cmd_bounds(args) -> dict:
    return threshold_bounds(args.l).to_json_dict()


def cmd_search(args) -> dict:
    cfg = SearchConfig(
        max_iterations=args.iterations,
        restarts=args.restarts,
        rng_seed=args.seed,
        neighborhood=args.neighborhood,
        color_universe_size=args.universe,
    )
    budget, _ = _env_budget()
    m_hi = args.m_hi if args.m_hi is not None else args.m
    rows = empirical_threshold_profile(args.l, args.m, m_hi, cfg, budget=budget)
    if args.format == "csv":
        lines = [CSV_HEADER] + [row.csv_line() for row in rows]
        return {"__csv__": "\n".join(lines)}
    meta = {
        "color_universe_size": cfg.color_universe_size,
        "note": "large-side lists draw colors from a bounded universe "
        "(default m + 2); larger universes are not explored",
    }
    return {"rows": [row.to_json_dict() for row in rows], "meta": meta}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcf",
        description="Exact list-coloring counts, worst-case assignments, and "
        "threshold certificates",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("chrompoly", help="chromatic polynomial value at m")
    _add_graph_flags(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--method", choices=["closed", "dc"])
    sp.set_defaults(handler=cmd_chrompoly)

    sp = subs.add_parser("count", help="count proper colorings from a list assignment")
    _add_graph_flags(sp)
    sp.add_argument("--assignment", metavar="FILE", required=True)
    sp.add_argument("--fast", action="store_true", help="bipartite fast path")
    sp.set_defaults(handler=cmd_count)

    sp = subs.add_parser("plf", help="list color function value at m (exhaustive)")
    _add_graph_flags(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.set_defaults(handler=cmd_plf)

    sp = subs.add_parser("choosable", help="decide k-choosability (exhaustive)")
    _add_graph_flags(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(handler=cmd_choosable)

    sp = subs.add_parser("construct", help="build the transversal assignment")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(handler=cmd_construct)

    sp = subs.add_parser("certify", help="certificate that the threshold exceeds m")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--eps", default="1/4", help="rational margin p/q in (0, 2)")
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(handler=cmd_certify)

    sp = subs.add_parser("bounds", help="threshold bound report for K_{2,l}")
    sp.add_argument("--l", type=int, required=True)
    sp.set_defaults(handler=cmd_bounds)

    sp = subs.add_parser("search", help="empirical witness search for K_{2,l}")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--m-hi", type=int, dest="m_hi")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--restarts", type=int, default=4)
    sp.add_argument("--iterations", type=int, default=200)
    sp.add_argument("--universe", type=int)
    sp.add_argument(
        "--neighborhood",
        choices=["swap-one-color", "retype-y-list"],
        default="swap-one-color",
    )
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(handler=cmd_search)

    return parser


def _emit(status: str, payload: dict, diagnostics: list[str]) -> None:
    envelope = {"status": status, "payload": payload, "diagnostics": diagnostics}
    sys.stdout.write(json.dumps(envelope, sort_keys=True, separators=(",", ":")) + "\n")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.handler(args)
    except BudgetExceededError as exc:
        _emit("error", {}, [f"budget-exceeded: {exc}"])
        return 3
    except (CliError, ValueError, RuntimeError, OSError, KeyError) as exc:
        _emit("error", {}, [f"error: {exc}"])
        return 1
    if "__csv__" in payload:
        sys.stdout.write(payload["__csv__"] + "\n")
    else:
        _emit("ok", payload, [])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
