"""Command-line entry point: ``pforest {find,verify,enumerate,gen,check,flip}``.

Exit codes: 0 success, 1 verification failure, 2 odd-order component,
64 usage error, 65 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .forest import OddComponentError, find_perfect_forest
from .formats import ParseError, format_edge_list, format_forest, parse_edge_list, parse_forest
from .generate import MAX_SEED, generate_random_graph
from .graph import Graph
from .oracle import (
    DEFAULT_EDGE_CAP,
    DEFAULT_VERTEX_CAP,
    OracleInputError,
    enumerate_perfect_forests,
    exhaustive_theorem_check,
)
from .verify import VerificationInputError, verify_parity_flip, verify_perfect_forest

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ODD = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    def __init__(self, message: str, usage: str = "") -> None:
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message, self.format_usage())


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits: {text}")
    return value


def _probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"p must lie in [0, 1]: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pforest", description="Perfect forests of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_format(p):
        p.add_argument("--format", choices=["text", "structured"], default="text")
        return p

    p = with_format(sub.add_parser("find", help="find a perfect forest"))
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--check-algebra", action="store_true",
                   help="cross-check every dependency answer with GF(2) elimination")

    p = with_format(sub.add_parser("verify", help="check a forest against a graph"))
    p.add_argument("graph")
    p.add_argument("forest", help="forest document as printed by find")

    p = with_format(sub.add_parser("enumerate", help="list every perfect forest (small graphs)"))
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=DEFAULT_EDGE_CAP, help="maximum edge count")

    p = sub.add_parser("gen", help="print a seeded random connected graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_probability, default=0.0)
    p.add_argument("--seed", type=_seed, default=0)

    p = with_format(sub.add_parser("check", help="exhaustive check over all graphs of order n"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("--check-algebra", action="store_true")

    p = with_format(sub.add_parser("flip", help="subgraph flipping every degree parity"))
    p.add_argument("graph")
    p.add_argument("--check-algebra", action="store_true")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read(path))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cmd_find(args, out) -> int:
    g = _load_graph(args.graph)
    forest = find_perfect_forest(g, check_algebra=args.check_algebra)
    out.write(format_forest(forest, args.format))
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    g = _load_graph(args.graph)
    edges = parse_forest(_read(args.forest))
    violations = verify_perfect_forest(g, edges)
    if args.format == "structured":
        out.write(_dump({
            "valid": not violations,
            "violations": [{"kind": v.kind, "detail": v.detail} for v in violations],
        }))
    elif violations:
        for v in violations:
            out.write(f"{v}\n")
    else:
        out.write("valid\n")
    return EXIT_INVALID if violations else EXIT_OK


def _cmd_enumerate(args, out) -> int:
    g = _load_graph(args.graph)
    report = enumerate_perfect_forests(g, cap=args.cap)
    if args.format == "structured":
        out.write(_dump({
            "subsets_scanned": report.subsets_scanned,
            "forests": [[list(e) for e in f] for f in report.forests],
        }))
    else:
        out.write(f"{len(report.forests)} perfect forests "
                  f"({report.subsets_scanned} subsets scanned)\n")
        for f in report.forests:
            out.write(" ".join(f"{a}-{b}" for a, b in f) + "\n")
    return EXIT_OK


def _cmd_gen(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    out.write(format_edge_list(generate_random_graph(args.n, args.p, args.seed)))
    return EXIT_OK


def _cmd_check(args, out) -> int:
    try:
        summary = exhaustive_theorem_check(args.n, vertex_cap=args.vertex_cap,
                                           check_algebra=args.check_algebra)
    except OracleInputError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "structured":
        out.write(_dump({
            "n": summary.n,
            "graphs_checked": summary.graphs_checked,
            "failures": summary.failures,
            "max_iterations": summary.max_iterations,
            "converse_graphs_checked": summary.converse_graphs_checked,
            "converse_failures": summary.converse_failures,
        }))
    else:
        out.write(f"{summary.graphs_checked} graphs, {len(summary.failures)} failures\n")
        out.write(f"converse: {summary.converse_graphs_checked} odd-order graphs, "
                  f"{len(summary.converse_failures)} failures\n")
        for line in summary.failures + summary.converse_failures:
            out.write(f"FAIL {line}\n")
    return EXIT_OK if summary.ok else EXIT_INVALID


def _cmd_flip(args, out) -> int:
    g = _load_graph(args.graph)
    forest = find_perfect_forest(g, check_algebra=args.check_algebra)
    h = g.remove_edges(forest.edges)
    violations = verify_parity_flip(g, h)
    bound = g.m - 2 * g.n + 2
    rows = [(v, g.degree(v), h.degree(v)) for v in g.vertices]
    if args.format == "structured":
        out.write(_dump({
            "n": h.n,
            "edges": [list(e) for e in h.edges],
            "certificate": {
                "vertices": [
                    {"vertex": v, "degree_g": dg, "degree_h": dh,
                     "parity_g": dg % 2, "parity_h": dh % 2}
                    for v, dg, dh in rows
                ],
                "edges_g": g.m,
                "edges_h": h.m,
                "bound": bound,
                "valid": not violations,
            },
        }))
    else:
        out.write(format_edge_list(h))
        out.write(f"# certificate: |E(H)| = {h.m} >= |E(G)| - 2n + 2 = {bound}\n")
        for v, dg, dh in rows:
            out.write(f"# vertex {v}: d_G = {dg} (parity {dg % 2}), "
                      f"d_H = {dh} (parity {dh % 2})\n")
    return EXIT_INVALID if violations else EXIT_OK


COMMANDS = {
    "find": _cmd_find,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "gen": _cmd_gen,
    "check": _cmd_check,
    "flip": _cmd_flip,
}


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(exc.usage or parser.format_usage())
        err.write(f"pforest: error: {exc}\n")
        return EXIT_USAGE
    except OddComponentError as exc:
        err.write(f"pforest: {exc}\n")
        return EXIT_ODD
    except (ParseError, VerificationInputError, OracleInputError, OSError,
            UnicodeDecodeError) as exc:
        err.write(f"pforest: {exc}\n")
        return EXIT_DATA


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
