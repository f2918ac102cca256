"""Command line front end.

Subcommands: check, cycles, double, search, gen, convert.  Exit codes
are scriptable: 0 means success (and, for predicates, the condition
holds), 1 means the condition fails with a witness, 2 means usage or
input error.  JSON output is byte-deterministic for a fixed input and
flag set; text output is for humans and carries no stability promise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .burst import check_tran_condition, is_burst
from .cycles import enumerate_induced_cycles
from .doubling import iterate_doubles, star_double_minus
from .formats import (
    FormatError,
    parse_edge_list,
    parse_graph6,
    sniff_format,
    write_dot,
    write_edge_list,
    write_graph6,
)
from .graph import Graph, GraphError
from .generators import gen_complete, gen_cycle, gen_hypercube, gen_random, nonisomorphic_graphs
from .search import SearchError, SearchOptions, annotate_verdict, scan_stream

EXIT_OK = 0
EXIT_CONDITION_FAILS = 1
EXIT_ERROR = 2


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _resolve_format(path: str, override: str, data: bytes) -> str:
    if override != "auto":
        return override
    if path.endswith(".g6"):
        return "graph6"
    if path.endswith(".edges"):
        return "edges"
    return sniff_format(data)


def _load_graph(path: str, fmt_override: str) -> Graph:
    data = _read_input(path)
    fmt = _resolve_format(path, fmt_override, data)
    if fmt == "graph6":
        records = [r for r in data.splitlines() if r.strip()]
        if len(records) != 1:
            raise FormatError(
                f"expected exactly one graph6 record, found {len(records)}"
            )
        return parse_graph6(records[0])
    return parse_edge_list(data.decode("utf-8"))


def _emit_graph(g: Graph, mode: str, out) -> None:
    if mode == "graph6":
        out.write(write_graph6(g).decode("ascii") + "\n")
    elif mode == "edges":
        out.write(write_edge_list(g))
    elif mode == "dot":
        out.write(write_dot(g))
    else:
        raise FormatError(f"unsupported graph output mode {mode!r}")


def _print_json(payload: dict, out) -> None:
    json.dump(payload, out, indent=2, sort_keys=False)
    out.write("\n")


def cmd_check(args) -> int:
    g = _load_graph(args.input, args.format)
    verdict = check_tran_condition(
        g, max_len=args.max_len, witness_cap=args.witness_cap
    )
    notes = annotate_verdict(verdict)
    if args.output == "json":
        payload = verdict.to_json_dict(g)
        payload["annotations"] = list(notes)
        _print_json(payload, sys.stdout)
    else:
        state = "holds" if verdict.all_burst else "fails"
        print(f"burst condition {state} (n={g.n}, m={g.edge_count})")
        for length in sorted(verdict.counts):
            print(f"  induced cycles of length {length}: {verdict.counts[length]}")
        for cycle in verdict.non_burst_cycles:
            print("  non-burst cycle: " + " ".join(cycle.labels(g)))
        if verdict.truncated:
            print(f"  note: enumeration capped at length {args.max_len}")
        for note in notes:
            print("  " + note)
    return EXIT_OK if verdict.all_burst else EXIT_CONDITION_FAILS


def cmd_cycles(args) -> int:
    g = _load_graph(args.input, args.format)
    cycles = []
    enumerate_induced_cycles(
        g, min_len=args.min_len, max_len=args.max_len, visitor=cycles.append
    )
    entries = []
    for cycle in cycles:
        witness = is_burst(g, cycle)
        entry = {
            "vertices": list(cycle.labels(g)),
            "length": len(cycle),
            "burst": witness is not None,
        }
        if witness is not None:
            entry["witness"] = {
                "pair": [g.labels[v] for v in witness.pair],
                "square": [g.labels[v] for v in witness.square],
            }
        entries.append(entry)
    if args.output == "json":
        counts: dict[str, int] = {}
        for cycle in cycles:
            counts[str(len(cycle))] = counts.get(str(len(cycle)), 0) + 1
        _print_json(
            {"cycles": entries, "counts": dict(sorted(counts.items(), key=lambda kv: int(kv[0])))},
            sys.stdout,
        )
    else:
        for entry in entries:
            flag = "burst" if entry["burst"] else "NON-BURST"
            print(f"[{flag}] " + " ".join(entry["vertices"]))
        print(f"total: {len(entries)} induced cycles")
    return EXIT_OK


def cmd_double(args) -> int:
    g = _load_graph(args.input, args.format)
    if args.depth > 1 or args.explore:
        nodes = iterate_doubles(
            g,
            depth=args.depth,
            vertices=tuple(args.vertex) if args.vertex else None,
            max_n=args.max_n,
            max_len=args.max_len,
        )
        if args.output == "json":
            _print_json({"nodes": [node.to_json_dict() for node in nodes]}, sys.stdout)
        else:
            for node in nodes:
                trail = " -> ".join(step.vertex_label for step in node.path) or "(root)"
                if node.skipped:
                    print(f"{trail}: skipped ({node.skipped})")
                else:
                    state = "holds" if node.verdict.all_burst else "FAILS"
                    print(f"{trail}: n={node.n}, condition {state}")
        return EXIT_OK

    if not args.vertex:
        raise GraphError("double requires --vertex (or --depth for exploration)")
    x = g.index_of(args.vertex[0])
    result = star_double_minus(g, x)
    if args.check:
        verdict = check_tran_condition(
            result.graph, max_len=args.max_len, witness_cap=args.witness_cap
        )
        if args.output == "json":
            payload = {
                "center": result.center_label,
                "n": result.graph.n,
                "graph6": write_graph6(result.graph).decode("ascii"),
                "origin": result.origin_json(g),
                "check": verdict.to_json_dict(result.graph),
                "annotations": list(annotate_verdict(verdict)),
            }
            _print_json(payload, sys.stdout)
        else:
            state = "holds" if verdict.all_burst else "fails"
            print(f"double at {result.center_label}: n={result.graph.n}, condition {state}")
            for cycle in verdict.non_burst_cycles:
                print("  non-burst cycle: " + " ".join(cycle.labels(result.graph)))
        return EXIT_OK if verdict.all_burst else EXIT_CONDITION_FAILS

    if args.output == "json":
        payload = {
            "center": result.center_label,
            "n": result.graph.n,
            "graph6": write_graph6(result.graph).decode("ascii"),
            "labels": list(result.graph.labels),
            "origin": result.origin_json(g),
        }
        _print_json(payload, sys.stdout)
    else:
        _emit_graph(result.graph, args.output, sys.stdout)
    return EXIT_OK


def cmd_search(args) -> int:
    data = _read_input(args.input)
    workers = args.workers if args.workers is not None else (os.cpu_count() or 1)
    options = SearchOptions(
        max_len=args.max_len,
        vertices=tuple(args.vertex) if args.vertex else None,
        workers=workers,
        checkpoint_path=args.checkpoint,
        limit=args.limit,
        fast_skip=not args.no_fast_skip,
        source_kind="stdin" if args.input == "-" else "file",
        source_detail=args.input,
    )
    if args.checkpoint and args.out is None:
        raise SearchError("--checkpoint requires --out (a seekable output file)")
    if args.out is not None:
        mode = "r+b" if os.path.exists(args.out) else "w+b"
        sink = open(args.out, mode)
    else:
        sink = sys.stdout.buffer
    try:
        stats = scan_stream(data, sink, options, warn=sys.stderr)
    finally:
        if args.out is not None:
            sink.close()
    print(stats.line(), file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "cycle":
        graphs = [gen_cycle(int(args.params[0]))]
    elif args.family == "complete":
        graphs = [gen_complete(int(args.params[0]))]
    elif args.family == "hypercube":
        graphs = [gen_hypercube(int(args.params[0]))]
    elif args.family == "random":
        import random as _random

        n, p = int(args.params[0]), float(args.params[1])
        seed = int(args.params[2]) if len(args.params) > 2 else 0
        graphs = [gen_random(n, p, _random.Random(seed))]
    elif args.family == "all":
        graphs = nonisomorphic_graphs(int(args.params[0]))
    else:
        raise GraphError(f"unknown generator family {args.family!r}")
    for g in graphs:
        _emit_graph(g, args.output, sys.stdout)
    return EXIT_OK


def cmd_convert(args) -> int:
    data = _read_input(args.input)
    fmt = _resolve_format(args.input, args.format, data)
    if fmt == "graph6":
        graphs = [parse_graph6(r) for r in data.splitlines() if r.strip()]
    else:
        graphs = [parse_edge_list(data.decode("utf-8"))]
    for g in graphs:
        _emit_graph(g, args.output, sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burstcheck",
        description=(
            "Burst-cycle analysis on defining graphs of right-angled "
            "Coxeter groups: check the every-long-cycle-is-burst "
            "condition, double graphs over vertex stars, and mine graph6 "
            "corpora for counterexamples."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, output_choices, default_output):
        p.add_argument("input", nargs="?", default="-", help="input path or - for stdin")
        p.add_argument(
            "--format",
            choices=["auto", "graph6", "edges"],
            default="auto",
            help="input format (default: by extension, then content)",
        )
        p.add_argument(
            "--output", "-o", choices=output_choices, default=default_output,
            help="output mode",
        )

    p = sub.add_parser("check", help="decide whether every induced cycle of length >= 4 is burst")
    add_common(p, ["json", "text"], "json")
    p.add_argument("--max-len", type=int, default=None, help="cap on cycle length (default: n)")
    p.add_argument("--witness-cap", type=int, default=16)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cycles", help="list induced cycles with burst flags and witnesses")
    add_common(p, ["json", "text"], "json")
    p.add_argument("--min-len", type=int, default=3)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("double", help="double over a vertex star and delete the vertex")
    add_common(p, ["json", "graph6", "edges", "dot"], "json")
    p.add_argument("--vertex", action="append", default=[], metavar="LABEL",
                   help="vertex to double over (repeatable for --depth exploration)")
    p.add_argument("--check", action="store_true", help="run the burst check on the result")
    p.add_argument("--depth", type=int, default=1, help="iterate doublings up to this depth")
    p.add_argument("--explore", action="store_true",
                   help="breadth-first exploration even at depth 1")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--witness-cap", type=int, default=16)
    p.add_argument("--max-n", type=int, default=64, help="skip branches larger than this")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("search", help="scan a graph6 stream for counterexample records")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--vertex", action="append", default=[], metavar="LABEL",
                   help="only double over these labels")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: all cores)")
    p.add_argument("--checkpoint", default=None, help="checkpoint file for resume")
    p.add_argument("--out", default=None, help="output JSONL file (required for --checkpoint)")
    p.add_argument("--limit", type=int, default=None,
                   help="process at most this many records this run")
    p.add_argument("--no-fast-skip", action="store_true",
                   help="disable the sound double-stage accelerations")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gen", help="generate fixture graphs")
    p.add_argument("family", choices=["cycle", "complete", "hypercube", "random", "all"])
    p.add_argument("params", nargs="+",
                   help="cycle N | complete N | hypercube D | random N P [SEED] | all N")
    p.add_argument("--output", "-o", choices=["graph6", "edges", "dot"], default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("convert", help="convert between graph6, edge list, and DOT")
    add_common(p, ["graph6", "edges", "dot"], "graph6")
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, SearchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
