"""Command-line front end: constructions, minimizations, scans, figures.

Exit codes are exhaustive and disjoint:
  0 success, 1 parse/config failure, 2 precondition violation (non-acute or
  degenerate input), 3 non-convergence, 4 counterexample or residual breach,
  5 I/O failure.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import golden, jsonio, render
from .geometry import (
    ANGLE_TOL,
    DegenerateTriangleError,
    NotAcuteError,
    Point,
    Triangle,
    TriangleKind,
    angles,
    classify_points,
    orthic_triangle,
)
from .optimize import (
    DEFAULT_DESCENT_TOL,
    DEFAULT_GRID_N,
    DEFAULT_MAX_ITER,
    DEFAULT_SIMPLEX_TOL,
    InscribedConfig,
    MinimizeResult,
    minimize_grid_then_simplex,
    minimize_reflection_descent,
)
from .theorem import DEFAULT_BOUNDARY_BAND, scan_angle_space

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_NONCONVERGENCE = 3
EXIT_COUNTEREXAMPLE = 4
EXIT_IO = 5

GOLDEN_RESIDUAL_LIMIT = 1e-12


class ParseFailure(Exception):
    """Bad command line or bad triangle text; maps to exit 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseFailure(message)


def _preset_triangle(name: str) -> tuple[float, ...] | None:
    if name == "equilateral":
        return (0.0, 0.0, 1.0, 0.0, 0.5, math.sqrt(3.0) / 2.0)
    if name == "golden-bfc":
        phi = (1.0 + math.sqrt(5.0)) / 2.0
        return (1.0, 0.0, 0.0, 1.0, 1.0, phi)
    return None


def parse_triangle(text: str) -> Triangle:
    """Six comma-separated reals ``ax,ay,bx,by,cx,cy`` or a named preset."""
    coords = _preset_triangle(text)
    if coords is None:
        parts = text.split(",")
        if len(parts) != 6:
            raise ParseFailure(
                f"expected six comma-separated coordinates or a preset "
                f"(equilateral, golden-bfc), got {text!r}"
            )
        try:
            coords = tuple(float(p) for p in parts)
        except ValueError as exc:
            raise ParseFailure(f"bad coordinate in {text!r}: {exc}") from exc
        if not all(math.isfinite(v) for v in coords):
            raise ParseFailure(f"coordinates must be finite, got {text!r}")
    pa = Point(coords[0], coords[1])
    pb = Point(coords[2], coords[3])
    pc = Point(coords[4], coords[5])
    cls = classify_points(pa, pb, pc)
    if cls.kind is TriangleKind.DEGENERATE:
        raise DegenerateTriangleError(
            f"degenerate triangle {text!r}: vertices are (near-)collinear"
        )
    return Triangle(pa, pb, pc)


def parse_config(text: str) -> InscribedConfig:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseFailure(f"expected three comma-separated parameters, got {text!r}")
    try:
        values = tuple(float(p) for p in parts)
    except ValueError as exc:
        raise ParseFailure(f"bad parameter in {text!r}: {exc}") from exc
    try:
        return InscribedConfig(*values)
    except ValueError as exc:
        raise ParseFailure(str(exc)) from exc


def _point_doc(p: Point) -> list[float]:
    return [p.x, p.y]


def _triangle_doc(t: Triangle) -> dict:
    return {"a": _point_doc(t.a), "b": _point_doc(t.b), "c": _point_doc(t.c)}


def _deliver(text: str, output: str | None) -> None:
    """Write to the output path when given, else to stdout."""
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_orthic(args) -> int:
    t = parse_triangle(args.triangle)
    result = orthic_triangle(t, args.tol)
    doc = {
        "triangle": _triangle_doc(t),
        "feet": {
            "from_a": _point_doc(result.foot_from_a),
            "from_b": _point_doc(result.foot_from_b),
            "from_c": _point_doc(result.foot_from_c),
        },
        "angles": {
            "at_foot_from_a": result.angles.alpha,
            "at_foot_from_b": result.angles.beta,
            "at_foot_from_c": result.angles.gamma,
        },
        "side_lengths": list(result.side_lengths()),
        "perimeter": result.perimeter,
    }
    _deliver(jsonio.dumps(doc), args.output)
    return EXIT_OK


def _minimize_doc(method: str, t: Triangle, result: MinimizeResult) -> dict:
    return {
        "method": method,
        "triangle": _triangle_doc(t),
        "config": {
            "t_on_bc": result.config.t_on_bc,
            "t_on_ca": result.config.t_on_ca,
            "t_on_ab": result.config.t_on_ab,
        },
        "perimeter": result.perimeter,
        "iterations": result.iterations,
        "converged": result.converged,
        "clamped": result.clamped,
        "warning": result.warning,
        "history": [[i, p] for i, p in result.history],
    }


def _cmd_minimize(args) -> int:
    t = parse_triangle(args.triangle)
    if args.method == "grid-simplex":
        tol = args.tol if args.tol is not None else DEFAULT_SIMPLEX_TOL
        result = minimize_grid_then_simplex(
            t, grid_n=args.grid_n, max_iter=args.max_iter, tol=tol
        )
    else:
        tol = args.tol if args.tol is not None else DEFAULT_DESCENT_TOL
        start = parse_config(args.start)
        result = minimize_reflection_descent(
            t, start, max_iter=args.max_iter, tol=tol
        )
    _deliver(jsonio.dumps(_minimize_doc(args.method, t, result)), args.output)
    return EXIT_OK if result.converged else EXIT_NONCONVERGENCE


def _cmd_scan(args) -> int:
    try:
        report = scan_angle_space(
            args.resolution, tol_angle=args.tol_angle, boundary_band=args.boundary_band
        )
    except ValueError as exc:
        raise ParseFailure(str(exc)) from exc
    _deliver(jsonio.dumps(report.to_document()), args.output)
    return EXIT_OK if not report.counterexamples else EXIT_COUNTEREXAMPLE


def _cmd_golden(args) -> int:
    fig = golden.build()
    checks = golden.reproduce_paper_values(fig)
    doc = {"phi": fig.phi}
    doc.update(golden.report_document(checks))
    _deliver(jsonio.dumps(doc), args.output)
    limit = args.tol if args.tol is not None else GOLDEN_RESIDUAL_LIMIT
    return EXIT_OK if doc["max_residual"] <= limit else EXIT_COUNTEREXAMPLE


def _cmd_render(args) -> int:
    spec = render.RenderSpec(
        width_px=args.width,
        height_px=args.height,
        margin_px=args.margin,
        show_altitudes=not args.no_altitudes,
        show_orthic=not args.no_orthic,
        show_labels=not args.no_labels,
    )
    if args.triangle == "golden-figure":
        svg = render.render_golden(golden.build(), spec)
    else:
        svg = render.render_triangle(parse_triangle(args.triangle), spec)
    _deliver(svg, args.output)
    if args.json:
        summary = {
            "output": args.output,
            "line_elements": svg.count("<line "),
            "polygon_elements": svg.count("<polygon "),
            "text_elements": svg.count("<text "),
        }
        sys.stdout.write(jsonio.dumps(summary))
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="fagnano", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orthic", help="altitude feet, orthic angles and perimeter")
    p.add_argument("triangle", help="ax,ay,bx,by,cx,cy or preset (equilateral, golden-bfc)")
    p.add_argument("--tol", type=float, default=ANGLE_TOL, help="acuteness tolerance")
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.add_argument("--json", action="store_true", help="(JSON is already the output format)")
    p.set_defaults(func=_cmd_orthic)

    p = sub.add_parser("minimize", help="search for the minimal inscribed triangle")
    p.add_argument("triangle")
    p.add_argument(
        "--method", choices=("grid-simplex", "reflection"), default="grid-simplex"
    )
    p.add_argument("--grid-n", type=int, default=DEFAULT_GRID_N)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--tol", type=float, default=None, help="per-method default when omitted")
    p.add_argument("--start", default="0.5,0.5,0.5", help="reflection start parameters")
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("scan", help="sweep shape space for characterization failures")
    p.add_argument("--resolution", type=int, default=200)
    p.add_argument("--tol-angle", type=float, default=ANGLE_TOL)
    p.add_argument("--boundary-band", type=float, default=DEFAULT_BOUNDARY_BAND)
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("golden", help="reproduce the golden-rectangle values")
    p.add_argument("--tol", type=float, default=None, help="residual limit (default 1e-12)")
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_golden)

    p = sub.add_parser("render", help="emit an SVG figure")
    p.add_argument("triangle", help="coordinates, preset, or golden-figure")
    p.add_argument("--output", default="figure.svg")
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=480)
    p.add_argument("--margin", type=int, default=48)
    p.add_argument("--no-altitudes", action="store_true")
    p.add_argument("--no-orthic", action="store_true")
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--json", action="store_true", help="print an element summary to stdout")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ParseFailure as exc:
        print(f"fagnano: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotAcuteError, DegenerateTriangleError) as exc:
        print(f"fagnano: precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"fagnano: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"fagnano: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
