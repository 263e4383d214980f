"""Command-line front end.

Exit codes: 0 success / predicate holds, 1 predicate fails or nothing
found, 2 input error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .audit import AuditBounds, run_full_audit
from .construct import construct_iassi_graph, construct_iassl_graph
from .errors import CapacityError, IasslError
from .families import FAMILIES, family, ground_sets
from .graph import LabeledGraph
from .search import PREDICATES, SearchOptions, find_labelings, min_ground_set, sweep_graphs
from .setalg import GroundSet, classify_powerset
from .verifier import check_iasgl, check_iasi, check_iasl, verify

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _load_graph(path: str) -> LabeledGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return LabeledGraph.from_json(text)


def _range(text: str) -> range:
    """Parse ``"3..6"`` or ``"4"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise InputError(f"malformed range {text!r}, expected e.g. 3..6") from None


class InputError(IasslError):
    pass


def _ground(args, graph: LabeledGraph | None = None) -> GroundSet:
    if args.ground_set:
        return GroundSet.parse(args.ground_set)
    if graph is not None and graph.ground is not None:
        return graph.ground
    raise InputError("--ground-set is required (the graph file carries none)")


# -- subcommands -------------------------------------------------------------


def cmd_classify(args) -> int:
    cls = classify_powerset(GroundSet.parse(args.ground_set))
    _emit(_dump(cls.to_dict()), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    x = _ground(args, g)
    if args.predicate in ("iassl", "iassi") and not x.contains_zero:
        raise InputError("sequential predicates need 0 in the ground set")
    report = verify(g, x)
    if args.predicate == "iasl":
        holds = check_iasl(g, x).holds
    elif args.predicate == "iasi":
        holds = check_iasi(g, x).holds
    elif args.predicate == "iasgl":
        holds = check_iasgl(g, x).holds
    else:
        holds = report.holds(args.predicate)
    data = report.to_dict()
    data["predicate"] = args.predicate
    data["holds"] = holds
    _emit(_dump(data), args.out)
    return EXIT_OK if holds else EXIT_FALSE


def cmd_construct(args) -> int:
    x = GroundSet.parse(args.ground_set)
    build = construct_iassl_graph if args.mode == "iassl" else construct_iassi_graph
    g, trace = build(x)
    if args.out:
        _emit(g.to_json(), args.out)
        out = Path(args.out)
        _emit(trace.to_json(), str(out.with_name(out.stem + ".trace.json")))
    else:
        _emit(_dump({"graph": g.to_dict(), "trace": trace.to_dict()}), None)
    if args.dot:
        _emit(g.to_dot(), args.dot)
    return EXIT_OK


def cmd_search(args) -> int:
    g = _load_graph(args.graph)
    opts = SearchOptions(
        predicate=args.predicate,
        enumerate_all=args.all,
        cap=args.cap,
        max_size=args.xsize,
        max_value=args.xmax,
        symmetry=args.symmetry,
        pruning=not args.no_pruning,
        workers=args.workers,
    )
    if args.ground_set is None and (g.ground is None or args.min_ground_set):
        x = min_ground_set(g, opts)
        _emit(_dump({"edges": [list(e) for e in g.edges], "n_vertices": g.n,
                     "predicate": args.predicate, "min_ground_set": x.to_json() if x else None}), args.out)
        return EXIT_OK if x else EXIT_FALSE
    res = find_labelings(g, _ground(args, g), opts)
    _emit(res.to_json(), args.out)
    return EXIT_OK if res.found else EXIT_FALSE


def cmd_sweep(args) -> int:
    xs = [GroundSet.parse(args.ground_set)] if args.ground_set else ground_sets(args.xsize, args.xmax)
    graphs = list(family(args.family, _range(args.n)))
    rows = sweep_graphs(graphs, xs, args.predicate, enumerate_all=not args.decide_only,
                        workers=args.workers)
    _emit("".join(_dump(r) + "\n" for r in rows), args.out)
    return EXIT_OK


def cmd_audit(args) -> int:
    bounds = AuditBounds(max_size=args.xsize, max_value=args.xmax, max_vertices=args.nmax)
    report = run_full_audit(bounds, workers=args.workers)
    _emit(report.to_json(), args.out)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = _load_graph(args.graph)
    _emit(g.to_dot(args.name), args.out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="iassl",
        description="Integer additive set-sequential labelings: classify, verify, construct, search, audit.",
        epilog="Capacity guards: IASSL_MAX_CLASSIFY_SIZE, IASSL_MAX_SEARCH_SIZE, IASSL_MAX_SEARCH_VERTICES.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="partition the non-empty subsets of X")
    s.add_argument("--ground-set", required=True, help="comma-separated, e.g. 0,1,2")
    s.add_argument("--out")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", help="check a labeled graph against a predicate")
    s.add_argument("--graph", required=True)
    s.add_argument("--ground-set")
    s.add_argument("--predicate", default="iassl", choices=["iasl", "iasi", "iasgl", "iassl", "iassi"])
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", help="build an IASSL or IASSI graph for X")
    s.add_argument("--ground-set", required=True)
    s.add_argument("--mode", default="iassl", choices=["iassl", "iassi"])
    s.add_argument("--out", help="graph JSON; the trace goes to <stem>.trace.json beside it")
    s.add_argument("--dot")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", help="exhaustive labeling search for one graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--ground-set", help="omit to search for the smallest admissible X")
    s.add_argument("--predicate", default="iassl", choices=PREDICATES)
    s.add_argument("--all", action="store_true", help="enumerate every labeling")
    s.add_argument("--cap", type=int)
    s.add_argument("--min-ground-set", action="store_true")
    s.add_argument("--xsize", type=int, default=3)
    s.add_argument("--xmax", type=int, default=4)
    s.add_argument("--symmetry", action="store_true", help="prune by graph automorphisms")
    s.add_argument("--no-pruning", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("sweep", help="decision table over a graph family and ground sets")
    s.add_argument("--family", required=True, choices=FAMILIES)
    s.add_argument("--n", required=True, help="size range, e.g. 3..6")
    s.add_argument("--ground-set")
    s.add_argument("--xsize", type=int, default=3)
    s.add_argument("--xmax", type=int, default=4)
    s.add_argument("--predicate", default="iassl", choices=PREDICATES)
    s.add_argument("--decide-only", action="store_true", help="stop each cell at the first labeling")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("audit", help="evaluate every claim over a bounded range")
    s.add_argument("--xsize", type=int, default=3)
    s.add_argument("--xmax", type=int, default=4)
    s.add_argument("--nmax", type=int, default=5)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("export-dot", help="render a labeled graph as DOT")
    s.add_argument("--graph", required=True)
    s.add_argument("--name", default="G")
    s.add_argument("--out")
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"iassl: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except IasslError as exc:
        print(f"iassl: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
