"""
Deterministic SVG output.

Pattern units (dot radius indices) are scaled so that radius m touches the
inner edge of the margin. Arcs that bulge past radius m shrink the scale until
their farthest point touches it instead. The origin sits at the canvas centre
and the y-axis is flipped, so counterclockwise arms stay counterclockwise on
screen. Every number is written with six fixed decimals, which keeps the bytes
identical from run to run.
"""
from __future__ import annotations

import enum
import io
import logging
import math
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import svgwrite

from kolam.exceptions import EmptyStrokeList, NonFiniteCoordinate, RenderConfigError
from kolam.geometry import Stroke, StrokeKind, stroke_array, stroke_extent, to_cartesian
from kolam.layout import DotMatrix, PolarPoint
from kolam.sequence import KolamSpec

logger = logging.getLogger(__name__)

MIN_CANVAS_PX = 64

HEX_COLOR = re.compile(r"^#(?:[0-9a-fA-F]{3}|[0-9a-fA-F]{6})$")


class FillMode(str, enum.Enum):
    NONE = "none"
    EVENODD = "evenodd"


@dataclass(frozen=True)
class RenderConfig:
    canvas_px: int = 800
    margin_ratio: float = 0.08
    show_dots: bool = True
    show_arms: bool = False
    stroke_width_px: float = 2.0
    dot_radius_px: float = 3.0
    fill_mode: FillMode = FillMode.NONE
    palette: tuple = ("#8b1e3f", "#f2c14e")
    dot_color: str = "#2b2b2b"

    def __post_init__(self):
        object.__setattr__(self, "palette", tuple(self.palette))
        try:
            object.__setattr__(self, "fill_mode", FillMode(self.fill_mode))
        except ValueError as exc:
            raise RenderConfigError(f"unknown fill mode {self.fill_mode!r}") from exc

        if isinstance(self.canvas_px, bool) or not isinstance(self.canvas_px, int):
            raise RenderConfigError(f"canvas_px must be an integer, got {self.canvas_px!r}")
        if self.canvas_px < MIN_CANVAS_PX:
            raise RenderConfigError(f"canvas_px must be at least {MIN_CANVAS_PX}, got {self.canvas_px}")
        if not 0 <= self.margin_ratio < 0.5:
            raise RenderConfigError(f"margin_ratio must lie in [0, 0.5), got {self.margin_ratio}")
        if not self.stroke_width_px > 0:
            raise RenderConfigError(f"stroke_width_px must be positive, got {self.stroke_width_px}")
        if not self.dot_radius_px > 0:
            raise RenderConfigError(f"dot_radius_px must be positive, got {self.dot_radius_px}")
        if self.fill_mode is FillMode.EVENODD and not self.palette:
            raise RenderConfigError("even-odd fill needs a non-empty palette")
        for color in (*self.palette, self.dot_color):
            if not HEX_COLOR.match(color):
                raise RenderConfigError(f"{color!r} is not a hex color")

    @property
    def stroke_color(self) -> str:
        return self.palette[0] if self.palette else "#000000"

    @property
    def fill_color(self) -> str:
        return self.palette[1 % len(self.palette)]


def fmt(value: float) -> str:
    # round first so -0.0000001 prints as 0.000000, not -0.000000
    return f"{round(value, 6) + 0.0:.6f}"


class _Canvas:
    """Pattern-to-screen transform for one spec and config."""

    def __init__(self, spec: KolamSpec, cfg: RenderConfig, extent: float = 0.0):
        self.size = cfg.canvas_px
        self.centre = cfg.canvas_px / 2
        self.reach = max(float(spec.m), extent)
        self.scale = (1 - 2 * cfg.margin_ratio) * self.centre / self.reach
        self.ray_length = self.reach * self.scale + cfg.margin_ratio * cfg.canvas_px / 2

    def point(self, x: float, y: float) -> tuple[float, float]:
        return self.centre + x * self.scale, self.centre - y * self.scale

    def coords(self, x: float, y: float) -> str:
        sx, sy = self.point(x, y)
        return f"{fmt(sx)} {fmt(sy)}"


def _drawing(spec: KolamSpec, cfg: RenderConfig, title: str) -> svgwrite.Drawing:
    dwg = svgwrite.Drawing(size=(cfg.canvas_px, cfg.canvas_px), profile="full", debug=False)
    dwg.viewbox(0, 0, cfg.canvas_px, cfg.canvas_px)
    dwg.set_desc(title=title, desc=f"m={spec.m} dots per arm, n={spec.n} arms")
    return dwg


def _segment(canvas: _Canvas, stroke: Stroke) -> str:
    end = canvas.coords(*stroke.end)
    if stroke.kind is StrokeKind.LINE:
        return f"L {end}"
    sx, sy = canvas.point(*stroke.start)
    ex, ey = canvas.point(*stroke.end)
    mx, my = canvas.point(*stroke.arc_mid)
    # in screen coordinates sweep-flag 1 runs towards increasing angle
    cross = (ex - sx) * (my - sy) - (ey - sy) * (mx - sx)
    sweep = 1 if cross < 0 else 0
    radius = fmt(stroke.arc_radius * canvas.scale)
    large = 1 if stroke.is_major_arc else 0
    return f"A {radius} {radius} 0 {large} {sweep} {end}"


def _add_arms(dwg, canvas: _Canvas, spec: KolamSpec, cfg: RenderConfig):
    arms = dwg.g(id="arms", stroke="#9a9a9a", stroke_width=fmt(cfg.stroke_width_px / 2))
    centre = fmt(canvas.centre)
    for arm in range(spec.n):
        theta = arm * 2 * math.pi / spec.n
        x = canvas.centre + canvas.ray_length * math.cos(theta)
        y = canvas.centre - canvas.ray_length * math.sin(theta)
        arms.add(dwg.line(start=(centre, centre), end=(fmt(x), fmt(y))))
    dwg.add(arms)


def _add_dots(dwg, canvas: _Canvas, cfg: RenderConfig, dots: Sequence[PolarPoint]):
    group = dwg.g(id="dots", fill=cfg.dot_color)
    radius = fmt(cfg.dot_radius_px)
    for dot in dots:
        x, y = canvas.point(*to_cartesian(dot))
        group.add(dwg.circle(center=(fmt(x), fmt(y)), r=radius))
    centre = fmt(canvas.centre)
    group.add(dwg.circle(center=(centre, centre), r=radius, class_="centre"))
    dwg.add(group)


def _serialize(dwg: svgwrite.Drawing) -> bytes:
    buffer = io.StringIO()
    dwg.write(buffer, pretty=False)
    return buffer.getvalue().encode("utf-8")


def render_svg(spec: KolamSpec, strokes: Sequence[Stroke], matrix: DotMatrix, cfg: RenderConfig) -> bytes:
    if not strokes:
        raise EmptyStrokeList("nothing to draw: the stroke list is empty")
    if not np.isfinite(stroke_array(strokes)).all():
        raise NonFiniteCoordinate(f"a stroke of {spec} has a non-finite coordinate")

    canvas = _Canvas(spec, cfg, stroke_extent(strokes))
    if canvas.reach > spec.m:
        logger.debug("%s: arcs reach radius %.3f, scaling the figure down to fit", spec, canvas.reach)
    dwg = _drawing(spec, cfg, f"Hridaya kolam ({spec.m}, {spec.n}) {spec.style.value}")
    if cfg.show_arms:
        _add_arms(dwg, canvas, spec, cfg)

    outline = dict(
        stroke=cfg.stroke_color,
        stroke_width=fmt(cfg.stroke_width_px),
        stroke_linecap="round",
        stroke_linejoin="round",
    )
    if cfg.fill_mode is FillMode.EVENODD:
        group = dwg.g(id="strokes", fill=cfg.fill_color, fill_rule="evenodd", **outline)
        segments = " ".join(_segment(canvas, stroke) for stroke in strokes)
        group.add(dwg.path(d=f"M {canvas.coords(*strokes[0].start)} {segments} Z"))
    else:
        group = dwg.g(id="strokes", fill="none", **outline)
        for stroke in strokes:
            group.add(dwg.path(d=f"M {canvas.coords(*stroke.start)} {_segment(canvas, stroke)}"))
    dwg.add(group)

    if cfg.show_dots:
        n = matrix.cols
        _add_dots(dwg, canvas, cfg, [PolarPoint.on_arm(value, j, n) for _, j, value in matrix.cells()])

    logger.debug("rendered %s: %d strokes on a %dpx canvas", spec, len(strokes), cfg.canvas_px)
    return _serialize(dwg)


def render_dot_grid(spec: KolamSpec, cfg: RenderConfig) -> bytes:
    """The bare m*n dot grid plus the centre dot, with arm rays when enabled."""
    canvas = _Canvas(spec, cfg)
    dwg = _drawing(spec, cfg, f"Dot grid ({spec.m}, {spec.n})")
    if cfg.show_arms:
        _add_arms(dwg, canvas, spec, cfg)
    dots = [PolarPoint.on_arm(r, arm, spec.n) for arm in range(spec.n) for r in range(1, spec.m + 1)]
    _add_dots(dwg, canvas, cfg, dots)
    return _serialize(dwg)
