"""Command-line front end.

Subcommands: check, solve, tree, family, census. Text output is
human-first; --json switches to a machine format. Exit codes are a stable
contract per subcommand (documented in each handler).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import census as census_mod
from .check import (Mode, PartitionError, bipartition, check_partition,
                    format_partition, parse_partition)
from .family import (FamilyParams, FamilyParamsError, build_member,
                     enumerate_members, verify_family_no_2cs)
from .graph import (Graph, GraphError, emit_graph6, from_edge_list_text,
                    parse_graph6, to_edge_list_text)
from .solver import Outcome, SolveOptions, find_2cs, tree_connected_2cs

EXIT_OK = 0
EXIT_NEGATIVE = 1  # invalid partition / no structure found / theorem falsified
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def _load_graph(args) -> Graph:
    if args.graph6:
        return parse_graph6(args.graph6)
    if not args.input:
        raise GraphError("no graph given: use --graph6 or --in")
    text = _read_text(args.input)
    fmt = args.format
    if fmt == "auto":
        fmt = "graph6" if args.input.endswith(".g6") else "edges"
        if args.input == "-" and text.lstrip().startswith(">>graph6<<"):
            fmt = "graph6"
    if fmt == "graph6":
        return parse_graph6(text.strip().splitlines()[0])
    return from_edge_list_text(text)


def _mode(args) -> Mode:
    return Mode.RELAXED if args.mode == "relaxed" else Mode.STRICT


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)


def cmd_check(args) -> int:
    """Exit 0 valid, 1 invalid, 2 usage/parse error."""
    g = _load_graph(args)
    p = parse_partition(args.partition, g.n)
    verdict = check_partition(g, p, _mode(args), require_connected=args.connected)
    if verdict.valid:
        _emit(args, {"valid": True}, "valid")
        return EXIT_OK
    if verdict.witness is not None:
        w = verdict.witness
        _emit(args,
              {"valid": False, "witness": asdict(w)},
              f"invalid: vertex {w.vertex} unsatisfied against part {w.other}: "
              f"{w.lhs} < {w.rhs}")
    else:
        _emit(args, {"valid": False, "reason": verdict.reason},
              f"invalid: {verdict.reason}")
    return EXIT_NEGATIVE


def cmd_solve(args) -> int:
    """Exit 0 FOUND, 1 NONE, 3 budget exceeded, 2 usage error."""
    g = _load_graph(args)
    opts = SolveOptions(mode=_mode(args), require_connected=args.connected,
                        require_balanced=args.balanced,
                        enumerate_all=args.enumerate_all, budget=args.budget)
    result = find_2cs(g, opts)
    if result.outcome is Outcome.FOUND:
        parts = format_partition(result.partition(g.n))
        payload = {"outcome": "found", "partition": parts,
                   "partitions_examined": result.partitions_examined}
        if opts.enumerate_all:
            payload["all"] = [format_partition(bipartition(g.n, a))
                              for a in result.all_solutions]
        _emit(args, payload, f"FOUND {parts}")
        if opts.enumerate_all and not args.json:
            for a in result.all_solutions:
                print("  " + format_partition(bipartition(g.n, a)))
        return EXIT_OK
    if result.outcome is Outcome.BUDGET_EXCEEDED:
        _emit(args, {"outcome": "budget_exceeded",
                     "partitions_examined": result.partitions_examined},
              "BUDGET_EXCEEDED")
        return EXIT_BUDGET
    _emit(args, {"outcome": "none",
                 "partitions_examined": result.partitions_examined}, "NONE")
    return EXIT_NEGATIVE


def cmd_tree(args) -> int:
    """Edge-removal search for a connected 2-community structure on a tree."""
    g = _load_graph(args)
    result = tree_connected_2cs(g)
    if result.outcome is Outcome.FOUND:
        parts = format_partition(result.partition(g.n))
        _emit(args, {"outcome": "found", "partition": parts}, f"FOUND {parts}")
        return EXIT_OK
    _emit(args, {"outcome": "none"}, "NONE")
    return EXIT_NEGATIVE


def _print_member(args, member) -> None:
    roles = {str(v): r for v, r in sorted(member.roles.items())}
    if args.out_format == "edges":
        graph_text = to_edge_list_text(member.graph).rstrip("\n")
    else:
        graph_text = emit_graph6(member.graph)
    if args.json:
        print(json.dumps({"params": asdict(member.params),
                          "graph": graph_text, "roles": roles},
                         separators=(",", ":")))
    else:
        print(graph_text)
        print(json.dumps(roles, separators=(",", ":")))


def cmd_family(args) -> int:
    """Exit 0 success, 1 if verification unexpectedly finds a structure,
    2 on invalid parameters."""
    if args.action == "build":
        if None in (args.dx, args.dy, args.o1, args.o2):
            print("family build requires --dx --dy --o1 --o2", file=sys.stderr)
            return EXIT_USAGE
        member = build_member(FamilyParams(args.k, args.dx, args.dy, args.o1, args.o2))
        _print_member(args, member)
        return EXIT_OK
    if args.action == "enumerate":
        for member in enumerate_members(args.k):
            _print_member(args, member)
        return EXIT_OK
    # verify
    if None not in (args.dx, args.dy, args.o1, args.o2):
        members = [build_member(FamilyParams(args.k, args.dx, args.dy, args.o1, args.o2))]
    else:
        members = enumerate_members(args.k)
    status = EXIT_OK
    for member in members:
        report = verify_family_no_2cs(member)
        line = {
            "params": asdict(member.params),
            "outcome": report.result.outcome.value,
            "partitions_examined": report.result.partitions_examined,
            "fixtures": [
                {"label": f.label,
                 "witness": asdict(f.verdict.witness) if f.verdict.witness else None}
                for f in report.fixtures],
        }
        if args.json:
            print(json.dumps(line, separators=(",", ":")))
        else:
            print(f"{member.graph.name}: {report.result.outcome.value.upper()} "
                  f"({report.result.partitions_examined} bipartitions)")
        if not report.confirmed:
            status = EXIT_NEGATIVE
    return status


def cmd_census(args) -> int:
    """Exit 0 on completion (even when exceptional graphs are found);
    2 on I/O-level failure."""
    if args.generate is not None:
        source = census_mod.generator_source(args.generate)
        config = {"source": f"generate:{args.generate}"}
    else:
        try:
            text = _read_text(args.input)
        except OSError as exc:
            print(f"cannot read {args.input}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        source = census_mod.graph6_source(text.splitlines())
        config = {"source": args.input}
    config["workers"] = args.workers
    records, summary = census_mod.run_census(source, workers=args.workers,
                                             config=config)
    if args.records:
        with open(args.records, "w") as f:
            census_mod.write_records_jsonl(records, f)
    if args.summary:
        with open(args.summary, "w") as f:
            f.write(census_mod.summary_json(summary))
    else:
        print(census_mod.summary_json(summary), end="")
    lacking = summary["ids_lacking_relaxed"]
    if lacking:
        print(f"graphs lacking a relaxed 2-community structure: {lacking}",
              file=sys.stderr)
    return EXIT_OK


def _add_graph_args(sp) -> None:
    sp.add_argument("--graph6", help="inline graph6 string")
    sp.add_argument("--in", dest="input", help="input path or - for stdin")
    sp.add_argument("--format", choices=["auto", "graph6", "edges"], default="auto")
    sp.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twocs",
                                 description="2-community structure toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="verify a given partition")
    _add_graph_args(sp)
    sp.add_argument("--partition", required=True, help='e.g. "0,1,2|3,4"')
    sp.add_argument("--mode", choices=["strict", "relaxed"], default="strict")
    sp.add_argument("--connected", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("solve", help="exhaustive 2-community search")
    _add_graph_args(sp)
    sp.add_argument("--mode", choices=["strict", "relaxed"], default="strict")
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--balanced", action="store_true")
    sp.add_argument("--all", dest="enumerate_all", action="store_true")
    sp.add_argument("--budget", type=int)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("tree", help="edge-removal algorithm for trees")
    _add_graph_args(sp)
    sp.set_defaults(func=cmd_tree)

    sp = sub.add_parser("family", help="counterexample family operations")
    sp.add_argument("action", choices=["build", "enumerate", "verify"])
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--dx", type=int)
    sp.add_argument("--dy", type=int)
    sp.add_argument("--o1", type=int)
    sp.add_argument("--o2", type=int)
    sp.add_argument("--out-format", choices=["graph6", "edges"], default="graph6")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("census", help="classify a stream of graphs")
    sp.add_argument("--generate", type=int, help="internal generator order (<= 7)")
    sp.add_argument("--in", dest="input", help="graph6 file or - for stdin")
    sp.add_argument("--records", help="write JSON Lines records here")
    sp.add_argument("--summary", help="write JSON summary here (default: stdout)")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_census)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "census" and (args.generate is None) == (args.input is None):
        print("census needs exactly one of --generate or --in", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (GraphError, PartitionError, FamilyParamsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
