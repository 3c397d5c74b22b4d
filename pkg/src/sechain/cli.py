"""Command line interface.

Subcommands: construct, verify, ci, graph, render.  Exit codes follow
one contract everywhere: 0 on success (for verify: every check passed),
1 when verification ran and failed, 2 for unusable input (bad flags,
unreadable or malformed documents, guard violations).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .construction import EpsilonSearchError, build
from .convex_subsets import ci_bruteforce, ci_dp
from .document import (
    ConstructionDoc,
    DocumentError,
    construction_to_document,
    dumps,
    encode_point,
    graph_to_document,
    load_path,
)
from .geometry import (
    is_convexly_independent,
    is_south_east_chain,
    midpoint,
    midpoint_set,
)
from .graphs import (
    BipartiteDrawing,
    drawing_from_level,
    edge_list_text,
    family,
    verify_drawing,
)
from .render import render_construction

_DEFAULT_MAX_K = 10
_DEFAULT_MAX_EPS_EXPONENT = 256


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.k < 1 or args.k > args.max_k:
        print(
            f"error: k must be between 1 and {args.max_k} "
            f"(raise --max-k to go higher)",
            file=sys.stderr,
        )
        return 2
    try:
        level = build(args.k, max_eps_exponent=args.max_eps_exponent)
    except EpsilonSearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = ConstructionDoc(
        k=level.k,
        a=list(level.a),
        b=list(level.b),
        witness=list(level.witness),
        eps_history=list(level.eps_history),
    )
    _write_output(dumps(construction_to_document(doc)), args.output)
    return 0


def _construction_checks(doc: ConstructionDoc) -> list[tuple[str, bool, str]]:
    """Every level invariant, re-proved from the file contents alone."""
    checks: list[tuple[str, bool, str]] = []
    n = 2**doc.k
    expected_witness = (doc.k + 2) * 2 ** (doc.k - 1)
    counts_ok = (
        len(doc.a) == n
        and len(doc.b) == n
        and len(doc.witness) == expected_witness
        and len(doc.eps_history) == doc.k - 1
        and all(e > 0 for e in doc.eps_history)
    )
    checks.append(
        (
            "counts",
            counts_ok,
            f"|a|={len(doc.a)} |b|={len(doc.b)} |witness|={len(doc.witness)} "
            f"expected {n}/{n}/{expected_witness}",
        )
    )
    pairs_ok = len(set(doc.witness)) == len(doc.witness)
    checks.append(("witness-pairs-distinct", pairs_ok, ""))

    def chain_ok(points) -> bool:
        return len(points) >= 2 and is_south_east_chain(points)

    checks.append(("chain-a", chain_ok(doc.a), ""))
    checks.append(("chain-b", chain_ok(doc.b), ""))
    mids = [midpoint(doc.a[i], doc.b[j]) for i, j in doc.witness]
    checks.append(("witness-midpoint-chain", chain_ok(mids), ""))
    ci_ok = (
        is_convexly_independent(doc.a)
        and is_convexly_independent(doc.b)
        and is_convexly_independent(mids)
    )
    checks.append(("convex-independence", ci_ok, ""))
    return checks


def _graph_checks(graph, placements) -> list[tuple[str, bool, str]]:
    checks: list[tuple[str, bool, str]] = [
        ("graph-structure", True, f"{graph.vertex_count} vertices, "
         f"{graph.edge_count} edges")
    ]
    if placements is not None:
        missing = (set(graph.u) | set(graph.v)) - set(placements)
        if missing:
            checks.append(("placements-complete", False, f"{len(missing)} missing"))
            return checks
        checks.append(("placements-complete", True, ""))
        drawing = BipartiteDrawing(graph=graph, placement=placements)
        checks.append(("drawing-chains", verify_drawing(drawing), ""))
    return checks


def _report(checks: list[tuple[str, bool, str]], as_json: bool) -> int:
    all_pass = all(ok for _, ok, _ in checks)
    if as_json:
        payload = {
            "all_pass": all_pass,
            "checks": [
                {"name": name, "pass": ok, "detail": detail}
                for name, ok, detail in checks
            ],
        }
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        for name, ok, detail in checks:
            suffix = f"  ({detail})" if detail else ""
            print(f"{'PASS' if ok else 'FAIL'}  {name}{suffix}")
        print("all checks passed" if all_pass else "verification failed")
    return 0 if all_pass else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    kind, payload = load_path(args.input)
    if kind == "construction":
        return _report(_construction_checks(payload), args.json)
    if kind == "graph":
        graph, placements = payload
        return _report(_graph_checks(graph, placements), args.json)
    # A bare point set has no invariants beyond being well-formed.
    return _report([("parsed", True, f"{len(payload)} points")], args.json)


def _cmd_ci(args: argparse.Namespace) -> int:
    kind, payload = load_path(args.input)
    if kind == "construction":
        points = midpoint_set(payload.a, payload.b)
    elif kind == "points":
        points = payload
    else:
        print("error: ci needs a construction or points document",
              file=sys.stderr)
        return 2
    solver = ci_dp if args.algo == "dp" else ci_bruteforce
    try:
        result = solver(points)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        payload_out: dict[str, Any] = {
            "algo": args.algo,
            "size": result.size,
            "witness": [encode_point(p) for p in result.witness],
        }
        sys.stdout.write(json.dumps(payload_out, sort_keys=True, indent=2) + "\n")
    else:
        print(f"largest convexly independent subset: {result.size} "
              f"(algo={args.algo}, input={len(set(points))} points)")
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    if args.k < 1 or args.k > args.max_k:
        print(
            f"error: k must be between 1 and {args.max_k} "
            f"(raise --max-k to go higher)",
            file=sys.stderr,
        )
        return 2
    graph = family(args.k)
    if args.placements:
        level = build(args.k, max_eps_exponent=args.max_eps_exponent)
        drawing = drawing_from_level(level)
        text = dumps(
            graph_to_document(graph, placements=dict(drawing.placement), k=args.k)
        )
    else:
        text = edge_list_text(graph)
    _write_output(text, args.output)
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    kind, payload = load_path(args.input)
    if kind != "construction":
        print("error: render needs a construction document", file=sys.stderr)
        return 2
    _write_output(render_construction(payload), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sechain",
        description="Exact south-east chain constructions and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser(
        "construct", help="build a level and write it as a document"
    )
    p_construct.add_argument("-k", type=int, required=True, help="level index")
    p_construct.add_argument("-o", "--output", default=None, help="output path")
    p_construct.add_argument("--max-k", type=int, default=_DEFAULT_MAX_K)
    p_construct.add_argument(
        "--max-eps-exponent", type=int, default=_DEFAULT_MAX_EPS_EXPONENT
    )
    p_construct.set_defaults(func=_cmd_construct)

    p_verify = sub.add_parser("verify", help="re-check a document's invariants")
    p_verify.add_argument("input")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_ci = sub.add_parser(
        "ci", help="largest convexly independent subset of a document"
    )
    p_ci.add_argument("input")
    p_ci.add_argument("--algo", choices=("dp", "brute"), default="dp")
    p_ci.add_argument("--json", action="store_true")
    p_ci.set_defaults(func=_cmd_ci)

    p_graph = sub.add_parser("graph", help="emit a family graph")
    p_graph.add_argument("-k", type=int, required=True, help="family index")
    p_graph.add_argument("-o", "--output", default=None, help="output path")
    p_graph.add_argument(
        "--placements",
        action="store_true",
        help="JSON document with exact vertex placements (builds level k)",
    )
    p_graph.add_argument("--max-k", type=int, default=_DEFAULT_MAX_K)
    p_graph.add_argument(
        "--max-eps-exponent", type=int, default=_DEFAULT_MAX_EPS_EXPONENT
    )
    p_graph.set_defaults(func=_cmd_graph)

    p_render = sub.add_parser("render", help="render a construction as SVG")
    p_render.add_argument("input")
    p_render.add_argument("-o", "--output", required=True, help="output path")
    p_render.set_defaults(func=_cmd_render)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
