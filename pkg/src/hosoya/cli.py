"""Command-line entry point.

Exit codes: 0 ok, 1 internal check failed, 2 input error, 3 a stated
display disagrees with the oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .bench import DEFAULT_SIZES, rows_to_csv, run_bench
from .chem import Family, FamilyParams, default_cap, evaluate_family
from .decomp import decomposition_to_json, find_blocks, hosoya_via_decomposition
from .errors import HosoyaError, InvalidParams
from .graph import format_edge_list, hosoya_bruteforce, parse_graph
from .poly import Method, indices_from_hosoya
from .verify import MUTATIONS, run_verify

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_DISCREPANCY = 3


def _positive_sizes(text: str) -> list[int]:
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hosoya",
        description="Exact Hosoya polynomials and Wiener/hyper-Wiener indices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="indices of a graph given as an edge list")
    p.add_argument("--input", "-i", required=True, type=Path, help="edge-list file ('-' for stdin)")
    p.add_argument("--method", choices=("brute", "decompose", "auto"), default="auto")
    p.add_argument("--json", action="store_true")
    p.add_argument("--show-decomposition", action="store_true", help="also print blocks and cut vertices")

    p = sub.add_parser("family", help="closed forms for a chemical family")
    p.add_argument("name", choices=[f.value for f in Family])
    for flag in ("m", "n", "q", "h", "k"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--emit-graph", type=Path, metavar="PATH", help="write the explicit graph as an edge list")
    p.add_argument("--cap", type=int, help="largest k materialised for dendrimers and triangulanes")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the invariant matrix against the oracle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--cap", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--mutate", choices=sorted(MUTATIONS), help=argparse.SUPPRESS)

    p = sub.add_parser("bench", help="time brute force against decomposition")
    p.add_argument("--sizes", type=_positive_sizes, default=list(DEFAULT_SIZES), help="comma-separated block counts")
    return parser


def _fail(message: str, code: int = EXIT_INPUT) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _dump(data: dict) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def cmd_compute(args: argparse.Namespace) -> int:
    try:
        text = sys.stdin.read() if str(args.input) == "-" else args.input.read_text()
    except OSError as exc:
        return _fail(f"cannot read {args.input}: {exc.strerror}")
    try:
        g = parse_graph(text)
    except HosoyaError as exc:
        return _fail(f"{args.input}: {exc}")

    blocks = find_blocks(g) if args.method != "brute" or args.show_decomposition else None
    method = args.method
    if method == "auto":
        method = "decompose" if blocks.cut_vertices else "brute"
    if method == "decompose":
        report = hosoya_via_decomposition(g)
    else:
        report = indices_from_hosoya(hosoya_bruteforce(g), Method.BRUTE)

    if args.json:
        out = {"vertices": g.n, "edges": g.num_edges, **report.to_json()}
        if args.show_decomposition:
            out["decomposition"] = decomposition_to_json(blocks)
        _dump(out)
        return EXIT_OK
    print(report.render())
    print(f"method = {report.method.value}")
    if args.show_decomposition:
        labels = g.labels
        print(f"blocks = {len(blocks.blocks)}")
        for i, part in enumerate(blocks.blocks):
            print(f"  block {i}: " + " ".join(labels[v] for v in part.vertices))
        print("cut vertices = " + (" ".join(labels[v] for v in sorted(blocks.cut_vertices)) or "none"))
    return EXIT_OK


def _render_family(result) -> list[str]:
    p = result.params
    lines = [f"family {p.family.value} {p.describe()}"]
    if result.graph is not None:
        lines.append(f"graph: {result.graph.n} vertices, {result.graph.num_edges} edges")
    else:
        lines.append("graph: not materialised (k above cap); closed form only")
    lines.append(result.report.render())
    lines.append(f"method = {result.report.method.value}")
    match = result.oracle_match
    lines.append("oracle: " + {True: "match", False: "MISMATCH", None: "not run"}[match])
    lines.append(f"displays checked: {len(result.checks)}")
    if result.discrepancies:
        lines.append("discrepancies:")
        lines.extend(f"  {d}" for d in result.discrepancies)
    else:
        lines.append("discrepancies: none")
    if result.notes:
        lines.append("notes:")
        lines.extend(f"  {n}" for n in result.notes)
    return lines


def cmd_family(args: argparse.Namespace) -> int:
    try:
        params = FamilyParams(Family(args.name), m=args.m, n=args.n, q=args.q, h=args.h, k=args.k)
        cap = default_cap() if args.cap is None else args.cap
        result = evaluate_family(params, cap)
    except InvalidParams as exc:
        return _fail(str(exc))

    if args.emit_graph is not None:
        if result.graph is None:
            return _fail(f"k={params.k} exceeds the materialisation cap {cap}; raise --cap to emit the graph")
        try:
            args.emit_graph.write_text(format_edge_list(result.graph))
        except OSError as exc:
            return _fail(f"cannot write {args.emit_graph}: {exc.strerror}")

    if args.json:
        out = result.to_json()
        if args.emit_graph is not None:
            out["emitted_graph"] = str(args.emit_graph)
        _dump(out)
    else:
        print("\n".join(_render_family(result)))
        if args.emit_graph is not None:
            print(f"graph written to {args.emit_graph}")

    if result.oracle_match is False:
        return _fail("closed form disagrees with the brute-force oracle", EXIT_FAILED)
    return EXIT_DISCREPANCY if result.discrepancies else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.trials < 1:
        return _fail("--trials must be positive")
    try:
        cap = default_cap() if args.cap is None else args.cap
    except InvalidParams as exc:
        return _fail(str(exc))
    report = run_verify(seed=args.seed, trials=args.trials, cap=cap, mutation=args.mutate)
    if args.json:
        _dump(report.to_json())
    else:
        print(report.render())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_bench(args: argparse.Namespace) -> int:
    rows = run_bench(args.sizes)
    sys.stdout.write(rows_to_csv(rows))
    return EXIT_OK if all(r.equal for r in rows) else EXIT_FAILED


COMMANDS = {"compute": cmd_compute, "family": cmd_family, "verify": cmd_verify, "bench": cmd_bench}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
