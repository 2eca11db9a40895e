"""Standalone SVG diagrams of triangles with altitudes and orthic overlays.

Output is deterministic byte-for-byte for identical inputs: fixed coordinate
formatting, no timestamps, no environment lookups.  World coordinates map
into the margin-inset viewport by one uniform scale-and-translate (aspect
preserved) with the y axis flipped so figures read the usual way up.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Point, Triangle, orthic_triangle
from .golden import GoldenFigure


@dataclass(frozen=True)
class RenderSpec:
    width_px: int = 640
    height_px: int = 480
    margin_px: int = 48
    show_altitudes: bool = True
    show_orthic: bool = True
    show_labels: bool = True

    def __post_init__(self):
        if self.width_px < 64 or self.height_px < 64:
            raise ValueError(
                f"viewport {self.width_px}x{self.height_px} below the 64 px minimum"
            )
        if not (0 <= self.margin_px < min(self.width_px, self.height_px) / 4):
            raise ValueError(
                f"margin {self.margin_px} must be nonnegative and below "
                f"min(width, height)/4 = {min(self.width_px, self.height_px) / 4:g}"
            )


class _Canvas:
    """Collects SVG elements over a fixed world-to-screen transform."""

    def __init__(self, points: list[Point], spec: RenderSpec):
        xs = [p.x for p in points]
        ys = [p.y for p in points]
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        span_x = max(xmax - xmin, 1e-12)
        span_y = max(ymax - ymin, 1e-12)
        avail_w = spec.width_px - 2 * spec.margin_px
        avail_h = spec.height_px - 2 * spec.margin_px
        self.scale = min(avail_w / span_x, avail_h / span_y)
        self.ox = spec.margin_px + (avail_w - self.scale * span_x) / 2.0
        self.oy = spec.margin_px + (avail_h - self.scale * span_y) / 2.0
        self.xmin, self.ymin = xmin, ymin
        self.height = spec.height_px
        self.elements: list[str] = []

    def to_screen(self, p: Point) -> tuple[float, float]:
        sx = self.ox + (p.x - self.xmin) * self.scale
        sy = self.height - (self.oy + (p.y - self.ymin) * self.scale)
        return sx, sy

    def line(self, p: Point, q: Point, stroke: str, width: float, dash: str = "") -> None:
        x1, y1 = self.to_screen(p)
        x2, y2 = self.to_screen(q)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.elements.append(
            f'<line x1="{x1:.4f}" y1="{y1:.4f}" x2="{x2:.4f}" y2="{y2:.4f}" '
            f'stroke="{stroke}" stroke-width="{width:g}"{extra}/>'
        )

    def polygon(self, points: list[Point], stroke: str, width: float) -> None:
        coords = " ".join(
            "{:.4f},{:.4f}".format(*self.to_screen(p)) for p in points
        )
        self.elements.append(
            f'<polygon points="{coords}" fill="none" stroke="{stroke}" '
            f'stroke-width="{width:g}"/>'
        )

    def dot(self, p: Point, fill: str, radius: float = 2.5) -> None:
        x, y = self.to_screen(p)
        self.elements.append(
            f'<circle cx="{x:.4f}" cy="{y:.4f}" r="{radius:g}" fill="{fill}"/>'
        )

    def label(self, p: Point, text: str, dx: float = 6.0, dy: float = -6.0) -> None:
        x, y = self.to_screen(p)
        self.elements.append(
            f'<text x="{x + dx:.4f}" y="{y + dy:.4f}" font-family="sans-serif" '
            f'font-size="14">{text}</text>'
        )

    def render(self, spec: RenderSpec) -> str:
        head = (
            '<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{spec.width_px}" height="{spec.height_px}" '
            f'viewBox="0 0 {spec.width_px} {spec.height_px}">'
        )
        body = "\n".join("  " + el for el in self.elements)
        return f"{head}\n{body}\n</svg>\n"


def _draw_construction(
    canvas: _Canvas,
    t: Triangle,
    spec: RenderSpec,
    vertex_labels: tuple[str | None, str | None, str | None],
    foot_labels: tuple[str | None, str | None, str | None],
) -> None:
    a, b, c = t.vertices
    canvas.line(a, b, "#1a1a1a", 1.6)
    canvas.line(b, c, "#1a1a1a", 1.6)
    canvas.line(c, a, "#1a1a1a", 1.6)
    feet = None
    if spec.show_altitudes or spec.show_orthic:
        feet = orthic_triangle(t).feet
    if spec.show_altitudes and feet is not None:
        for vertex, foot in zip(t.vertices, feet):
            canvas.line(vertex, foot, "#7a7a7a", 1.0, dash="5,4")
    if spec.show_orthic and feet is not None:
        fa, fb, fc = feet
        canvas.line(fa, fb, "#c03030", 1.4)
        canvas.line(fb, fc, "#c03030", 1.4)
        canvas.line(fc, fa, "#c03030", 1.4)
    if spec.show_labels:
        for p, name in zip(t.vertices, vertex_labels):
            canvas.dot(p, "#1a1a1a")
            if name:
                canvas.label(p, name)
        if feet is not None:
            for p, name in zip(feet, foot_labels):
                canvas.dot(p, "#c03030")
                if name:
                    canvas.label(p, name, dx=6.0, dy=14.0)


def render_triangle(t: Triangle, spec: RenderSpec) -> str:
    """Triangle with optional altitude and orthic overlays (feet D, E, F)."""
    canvas = _Canvas(list(t.vertices), spec)
    _draw_construction(canvas, t, spec, ("A", "B", "C"), ("D", "E", "F"))
    return canvas.render(spec)


def render_golden(fig: GoldenFigure, spec: RenderSpec) -> str:
    """The golden rectangle, its unit square, and the inscribed construction.

    The triangle's vertices already carry rectangle labels, so only the two
    feet away from the square corner get their own (H from b, G from c).
    """
    canvas = _Canvas([fig.a, fig.b, fig.c, fig.d], spec)
    canvas.polygon([fig.a, fig.b, fig.c, fig.d], "#9a9a9a", 1.0)
    canvas.polygon([fig.a, fig.b, fig.e, fig.f], "#9a9a9a", 1.0)
    _draw_construction(
        canvas, fig.triangle_bfc, spec, (None, None, None), ("H", "G", None)
    )
    if spec.show_labels:
        for p, name in (
            (fig.a, "A"),
            (fig.b, "B"),
            (fig.c, "C"),
            (fig.d, "D"),
            (fig.e, "E"),
            (fig.f, "F"),
        ):
            canvas.label(p, name, dx=-16.0 if p.x < 0.5 else 6.0, dy=-6.0)
    return canvas.render(spec)
