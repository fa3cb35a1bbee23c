"""Command-line frontend.

Verbs: classify (full report for one polytope), enumerate (grid census),
plot (SVG drawing), selftest (built-in invariant suites).  Exit codes:
0 = completed (the report may still say valid: false), 2 = input error
(unparseable document or polytope outside the chamber), 1 = internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import run_census
from .errors import ChamberError, GeometryError
from .polygon import convex_hull
from .report import (
    DocumentError,
    full_report,
    parse_polytope_document,
    point_out,
    render_document,
)
from .selftest import run_selftest
from .svgplot import OVERLAYS, render_svg


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mompoly",
        description="Momentum polytopes of multiplicity free U(2)-manifolds: "
        "validity, triangle families, Kähler criterion, x-rays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify one polytope document")
    p_classify.add_argument("input", help="JSON document path, or - for stdin")
    p_classify.add_argument("--output", help="report destination (default stdout)")

    p_enum = sub.add_parser("enumerate", help="census over a rational grid")
    p_enum.add_argument("--max-coord", type=int, required=True)
    p_enum.add_argument("--denominator", type=int, default=1)
    p_enum.add_argument("--shape", choices=["triangles", "all"], default="triangles")
    p_enum.add_argument("--threads", type=int, default=1)
    p_enum.add_argument(
        "--output", help="write a per-item JSON-lines stream here, summary to stdout"
    )

    p_plot = sub.add_parser("plot", help="SVG drawing of a polytope")
    p_plot.add_argument("input", help="JSON document path, or - for stdin")
    p_plot.add_argument(
        "--overlay",
        action="append",
        default=[],
        choices=list(OVERLAYS),
        help="repeatable: reflection, xray, fixpoints",
    )
    p_plot.add_argument("--output", help="SVG destination (default stdout)")

    p_self = sub.add_parser("selftest", help="run the built-in invariant suites")
    p_self.add_argument("--threads", type=int, default=1)
    p_self.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def _cmd_classify(args) -> int:
    points = parse_polytope_document(_read_input(args.input))
    doc = full_report(points)
    _write_output(args.output, render_document(doc))
    return 0


def _cmd_enumerate(args) -> int:
    if args.max_coord < 1:
        raise DocumentError("--max-coord must be at least 1")
    if args.denominator < 1:
        raise DocumentError("--denominator must be at least 1")
    stream = open(args.output, "w", encoding="utf-8") if args.output else None
    try:
        def on_item(item):
            if stream is None:
                return
            record = {
                "vertices": [point_out(v) for v in item.vertices],
                "valid": item.valid,
                "family": item.family_tag,
                "kaehler": item.kaehler,
                "diff_type": item.diff_type,
            }
            stream.write(json.dumps(record) + "\n")

        summary = run_census(
            args.max_coord,
            denominator=args.denominator,
            shape=args.shape,
            threads=max(1, args.threads),
            on_item=on_item,
        )
    finally:
        if stream is not None:
            stream.close()
    sys.stdout.write(render_document(summary.as_dict()))
    return 0


def _cmd_plot(args) -> int:
    points = parse_polytope_document(_read_input(args.input))
    polygon = convex_hull(points)
    svg = render_svg(polygon, tuple(args.overlay))
    _write_output(args.output, svg)
    return 0


def _cmd_selftest(args) -> int:
    ok, lines = run_selftest(threads=max(1, args.threads), inject_fault=args.inject_fault)
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "classify": _cmd_classify,
        "enumerate": _cmd_enumerate,
        "plot": _cmd_plot,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except (DocumentError, ChamberError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GeometryError, ValueError) as exc:
        # Ill-posed geometric input (empty hulls, bad overlay preconditions).
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
