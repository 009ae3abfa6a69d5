"""Command line driver.

Subcommands: gen, analyze, construct, verify, rc-exact.  All results are
JSON on standard out (``--pretty`` for indentation); diagnostics go to
standard error.  Exit codes: 0 success (and verified, where that applies),
1 usage or input error, 2 verification failure or inconclusive search,
3 construction verified but the palette bound was not met.

The exact-search work cap defaults to the RAINBOWCC_WORK_CAP environment
variable (10**8 steps when unset); ``--work-cap`` overrides it per run.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import factory
from .coloring import EXCEEDED, is_rainbow_connected, rc_exact
from .connectivity import vertex_connectivity
from .diameter import ConstructionError, diameter_coloring
from .graphs import Graph, GraphError, is_connected, metrics
from .io import (
    FormatError,
    coloring_from_json,
    coloring_to_dot,
    coloring_to_json,
    diameter_report,
    emit_edge_list,
    emit_rotation_system,
    parse_edge_list,
    parse_rotation_system,
    planar_report,
    verification_report,
)
from .planar import PlanarEmbedding, faces, planar_coloring, validate_maximal_planar

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNVERIFIED = 2
EXIT_BOUND = 3


class _UsageError(Exception):
    """Flag combinations argparse cannot express on its own."""


def _dump(payload, pretty: bool) -> str:
    return json.dumps(payload, indent=2 if pretty else None, sort_keys=True)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def _load_input(path: str, rotation: bool) -> tuple[Graph, PlanarEmbedding | None]:
    text = _read_text(path)
    if rotation:
        emb = parse_rotation_system(text)
        return emb.graph, emb
    return parse_edge_list(text), None


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "clique-tower":
        if args.kappa is None or args.layers is None:
            raise _UsageError("--family clique-tower needs --kappa and --layers")
        artifact: Graph | PlanarEmbedding = factory.clique_tower(args.kappa, args.layers)
    elif args.family == "stacked":
        if args.vertices is None:
            raise _UsageError("--family stacked needs --vertices")
        artifact = factory.stacked_triangulation(args.vertices, args.seed)
    else:  # named
        if args.name is None:
            raise _UsageError("--family named needs --name")
        artifact = factory.named(args.name)

    if isinstance(artifact, PlanarEmbedding):
        text, kind, g = emit_rotation_system(artifact), "rotation", artifact.graph
    else:
        text, kind, g = emit_edge_list(artifact), "edge-list", artifact
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    _write_text(args.out, text)
    summary = {
        "family": args.family,
        "format": kind,
        "n": g.n,
        "m": g.edge_count(),
        "out": args.out,
    }
    print(_dump(summary, args.pretty))
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    g, emb = _load_input(args.input, args.rotation)
    stats = metrics(g)
    payload = {
        "n": g.n,
        "m": g.edge_count(),
        "connected": stats.connected,
        "diam": stats.diameter,
        "radius": stats.radius,
        "girth": None if math.isinf(stats.girth) else int(stats.girth),
        "min_degree": stats.min_degree,
        "kappa": vertex_connectivity(g),
    }
    if emb is not None:
        face_list = faces(emb)
        payload["faces"] = len(face_list)
        try:
            validate_maximal_planar(emb)
            payload["maximal_planar"] = True
        except GraphError:
            payload["maximal_planar"] = False
    print(_dump(payload, args.pretty))
    return EXIT_OK


def _emit_construction(args: argparse.Namespace, coloring, report: dict) -> None:
    if args.coloring_out is not None:
        _write_text(args.coloring_out, coloring_to_json(coloring))
        report["coloring_out"] = args.coloring_out
    if args.dot_out is not None:
        _write_text(args.dot_out, coloring_to_dot(coloring))
        report["dot_out"] = args.dot_out
    print(_dump(report, args.pretty))


def _cmd_construct(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.mode == "planar":
        if not args.rotation:
            raise _UsageError("--mode planar needs --rotation input (faces are required)")
        _, emb = _load_input(args.input, rotation=True)
        cons = planar_coloring(emb)
        report = planar_report(cons)
        report["seconds"] = round(time.perf_counter() - started, 3)
        _emit_construction(args, cons.coloring, report)
        if not cons.verified:  # defensive; the builder raises instead
            return EXIT_UNVERIFIED
        return EXIT_OK if cons.bound_met else EXIT_BOUND
    g, _ = _load_input(args.input, args.rotation)
    cons = diameter_coloring(g)
    report = diameter_report(cons)
    report["seconds"] = round(time.perf_counter() - started, 3)
    _emit_construction(args, cons.coloring, report)
    if not cons.verified:  # defensive; the builder raises instead
        return EXIT_UNVERIFIED
    return EXIT_OK if cons.palette <= cons.bound else EXIT_BOUND


def _cmd_verify(args: argparse.Namespace) -> int:
    g, _ = _load_input(args.graph, args.rotation)
    col = coloring_from_json(_read_text(args.coloring), graph=g)
    report = verification_report(col)
    print(_dump(report, args.pretty))
    return EXIT_OK if report["verified"] else EXIT_UNVERIFIED


def _cmd_rc_exact(args: argparse.Namespace) -> int:
    g, _ = _load_input(args.input, args.rotation)
    if not is_connected(g):
        raise GraphError("graph is disconnected; rainbow connection is undefined")
    started = time.perf_counter()
    value = rc_exact(g, budget=args.budget, work_cap=args.work_cap)
    payload = {
        "n": g.n,
        "m": g.edge_count(),
        "seconds": round(time.perf_counter() - started, 3),
    }
    if value is EXCEEDED:
        payload["rc"] = None
        payload["exceeded"] = True
        print(_dump(payload, args.pretty))
        return EXIT_UNVERIFIED
    payload["rc"] = value
    payload["exceeded"] = False
    print(_dump(payload, args.pretty))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowcc",
        description="Rainbow-connection colorings: generators, constructions, verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate an instance and write it to a file")
    gen.add_argument("--family", required=True, choices=["clique-tower", "stacked", "named"])
    gen.add_argument("--kappa", type=int, help="clique-tower connectivity")
    gen.add_argument("--layers", type=int, help="clique-tower length parameter")
    gen.add_argument("--vertices", type=int, help="stacked triangulation size")
    gen.add_argument("--seed", type=int, default=0, help="stacked triangulation seed")
    gen.add_argument("--name", help="named instance, e.g. K5, P7, C9, star6, petersen")
    gen.add_argument("--out", help="output path (omit to write the raw format to stdout)")
    gen.set_defaults(func=_cmd_gen)

    analyze = sub.add_parser("analyze", parents=[common], help="metrics and connectivity of a graph file")
    analyze.add_argument("--input", required=True, help="input path, '-' for stdin")
    analyze.add_argument("--rotation", action="store_true", help="input is a rotation system")
    analyze.set_defaults(func=_cmd_analyze)

    construct = sub.add_parser("construct", parents=[common], help="build a verified rainbow coloring")
    construct.add_argument("--input", required=True, help="input path, '-' for stdin")
    construct.add_argument("--rotation", action="store_true", help="input is a rotation system")
    construct.add_argument("--mode", required=True, choices=["diameter", "planar"])
    construct.add_argument("--coloring-out", help="write the coloring JSON here")
    construct.add_argument("--dot-out", help="write a DOT rendering here")
    construct.set_defaults(func=_cmd_construct)

    verify = sub.add_parser("verify", parents=[common], help="check a coloring JSON against a graph")
    verify.add_argument("--graph", required=True, help="graph path, '-' for stdin")
    verify.add_argument("--rotation", action="store_true", help="graph is a rotation system")
    verify.add_argument("--coloring", required=True, help="coloring JSON path")
    verify.set_defaults(func=_cmd_verify)

    exact = sub.add_parser("rc-exact", parents=[common], help="exact rainbow connection number (small graphs)")
    exact.add_argument("--input", required=True, help="input path, '-' for stdin")
    exact.add_argument("--rotation", action="store_true", help="input is a rotation system")
    exact.add_argument("--budget", type=int, help="largest palette size to try")
    exact.add_argument(
        "--work-cap",
        type=int,
        help="search step limit (default: RAINBOWCC_WORK_CAP or 10**8)",
    )
    exact.set_defaults(func=_cmd_rc_exact)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; the contract here says 1
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (_UsageError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNVERIFIED
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
