"""``verify`` command line.

    verify <suite>|all [--depth N] [--budget M] [--format json|text] [--list] [--no-timing]

Environment variables VERIFY_DEPTH, VERIFY_BUDGET, VERIFY_FORMAT and
VERIFY_NO_TIMING supply defaults; flags win.  Exit codes: 0 when nothing
fails (assumptions allowed), 1 on any failure, 2 on usage errors.

Auxiliary modes, each replacing the suite argument:

    verify --polyhedron TABLE.txt          check a face/angle table
    verify --express WORD --group Delta0   search a word for an element
    verify --export-graph N | M,N          print a cover graph (graphml or dot)
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import covergraph as cg
from . import hypgeom as hg
from . import wordsearch as ws
from .suites import SUITES, SuiteConfig, UnknownSuite, list_suites, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw in (None, ""):
        return None
    try:
        return int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{name} must be an integer, got {raw!r}") from None


def _truthy(raw: Optional[str]) -> bool:
    return (raw or "").strip().lower() in ("1", "true", "yes", "on")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="verify", description="Exact verification suites.")
    p.add_argument("suite", nargs="?", help="suite name or 'all'")
    p.add_argument("--depth", type=int, default=None, help="override every search radius")
    p.add_argument("--budget", type=int, default=None, help="node budget for ball enumeration")
    p.add_argument("--format", choices=("json", "text"), default=None)
    p.add_argument("--list", action="store_true", help="list suites and exit")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for byte-identical output")
    p.add_argument("--polyhedron", metavar="FILE", help="verify a 'faceA faceB relation' table")
    p.add_argument("--express", metavar="EXPR", help="word or matrix literal to express in --group")
    p.add_argument("--group", default="Delta0", help="preset group for --express")
    p.add_argument("--export-graph", metavar="N|M,N", help="print build_N(N) or build_closed(M,N)")
    p.add_argument("--graph-format", choices=("graphml", "dot"), default="graphml")
    return p


def _config(args) -> SuiteConfig:
    depth = args.depth if args.depth is not None else _env_int("VERIFY_DEPTH")
    budget = args.budget if args.budget is not None else _env_int("VERIFY_BUDGET")
    if depth is not None and depth < 0:
        raise argparse.ArgumentTypeError("depth must be >= 0")
    if budget is not None and budget < 1:
        raise argparse.ArgumentTypeError("budget must be >= 1")
    timing = not (args.no_timing or _truthy(os.environ.get("VERIFY_NO_TIMING")))
    return SuiteConfig(depth=depth, budget=budget or ws.DEFAULT_BUDGET, timing=timing)


def _format(args) -> str:
    fmt = args.format or os.environ.get("VERIFY_FORMAT") or "json"
    if fmt not in ("json", "text"):
        raise argparse.ArgumentTypeError(f"format must be json or text, got {fmt!r}")
    return fmt


def _emit(obj: dict, fmt: str, text: str) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n" if fmt == "json" else text)


def _run_polyhedron(path: str, fmt: str) -> int:
    with open(path, encoding="utf-8") as fh:
        spec = hg.parse_polyhedron_spec(fh.read(), name=os.path.basename(path))
    rep = hg.verify_polyhedron(spec)
    rows = [{"faces": [c.face_a, c.face_b], "expected": c.expected.value, "actual": c.actual.value,
             "detail": c.detail, "ok": c.ok} for c in rep.checks]
    text = "".join(f"  [{'pass' if c.ok else 'fail':^6}] {c.face_a} {c.face_b}: expected {c.expected.value}, "
                   f"got {c.actual.value} ({c.detail})\n" for c in rep.checks)
    _emit({"table": spec.name, "checks": rows, "mismatches": len(rep.mismatches)}, fmt,
          f"table {spec.name}\n{text}  {len(rep.mismatches)} mismatch(es)\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _run_express(expr: str, group: str, cfg: SuiteConfig, fmt: str) -> int:
    G = ws.preset(group)
    target = ws.evaluate_expression(expr)
    radius = cfg.radius(ws.DELTA0_RADIUS if group == "Delta0" else ws.DEFAULT_RADIUS)
    result = ws.express(target, G, radius, cfg.budget)
    found = bool(result)
    _emit({"target": str(target), "group": group, "radius": radius, "found": found, "word": str(result) if found else None,
           "message": None if found else str(result)}, fmt,
          f"{expr} in {group}: {result}\n")
    return EXIT_OK if found else EXIT_FAIL


def _run_export(spec: str, graph_format: str) -> int:
    parts = [int(x) for x in spec.split(",")]
    if len(parts) == 1:
        g = cg.build_N(parts[0])
    elif len(parts) == 2:
        g = cg.build_closed(parts[0], parts[1])
    else:
        raise argparse.ArgumentTypeError("expected N or M,N")
    sys.stdout.write(cg.to_graphml(g) + "\n" if graph_format == "graphml" else cg.to_dot(g))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg, fmt = _config(args), _format(args)
        if args.list:
            entries = list_suites()
            _emit({"suites": entries}, fmt, "".join(f"{e['name']:<22} {e['description']}  [{e['anchor']}]\n"
                                                   for e in entries))
            return EXIT_OK
        if args.polyhedron:
            return _run_polyhedron(args.polyhedron, fmt)
        if args.express:
            return _run_express(args.express, args.group, cfg, fmt)
        if args.export_graph:
            return _run_export(args.export_graph, args.graph_format)
        if not args.suite:
            parser.error("a suite name (or 'all') is required")
        report = run_suite(args.suite, cfg)
    except UnknownSuite as exc:
        sys.stderr.write(f"verify: unknown suite {exc.args[0]!r}; known: {', '.join(list(SUITES) + ['all'])}\n")
        return EXIT_USAGE
    except (argparse.ArgumentTypeError, ArithmeticError, ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"verify: {exc}\n")
        return EXIT_USAGE
    sys.stdout.write(report.to_json() if fmt == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
