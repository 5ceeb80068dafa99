"""
Planar geometry for kolam strokes.

A closed path of polar dots becomes a list of strokes in one of three
connection styles: straight chords, arcs bulging away from the pattern
centre (convex) or arcs bulging towards it (concave). Every arc is a true
circular arc through both dots whose midpoint sits at distance
``bulge * chord_length`` from the chord midpoint.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, NamedTuple, Optional

import numpy as np

from kolam.exceptions import BulgeOutOfRange, DegenerateChord, GeometryError

if TYPE_CHECKING:
    from kolam.layout import ClosedPath, PolarPoint

# Below this a chord midpoint counts as lying on the line through the origin
# perpendicular to the chord, and the tie-break direction is used.
TIE_TOLERANCE = 1e-12


class ConnectionStyle(str, enum.Enum):
    STRAIGHT = "straight"
    CONVEX_ARC = "convex"
    CONCAVE_ARC = "concave"

    @property
    def is_arc(self) -> bool:
        return self is not ConnectionStyle.STRAIGHT


class StrokeKind(str, enum.Enum):
    LINE = "line"
    ARC = "arc"


class CartesianPoint(NamedTuple):
    x: float
    y: float


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Stroke:
    start: CartesianPoint
    end: CartesianPoint
    kind: StrokeKind = StrokeKind.LINE
    arc_mid: Optional[CartesianPoint] = None

    def __post_init__(self):
        if self.kind is StrokeKind.LINE:
            if self.arc_mid is not None:
                raise GeometryError("a straight stroke cannot carry an arc midpoint")
            return
        if self.arc_mid is None:
            raise GeometryError("an arc stroke needs its midpoint")
        scale = max(1.0, self.chord_length**2)
        if abs(_cross(self.start, self.end, self.arc_mid)) <= 1e-15 * scale:
            raise GeometryError("arc midpoint is collinear with the chord")

    @property
    def chord_length(self) -> float:
        return math.hypot(self.end.x - self.start.x, self.end.y - self.start.y)

    @property
    def chord_midpoint(self) -> CartesianPoint:
        return CartesianPoint((self.start.x + self.end.x) / 2, (self.start.y + self.end.y) / 2)

    @property
    def sagitta(self) -> float:
        if self.arc_mid is None:
            return 0.0
        mid = self.chord_midpoint
        return math.hypot(self.arc_mid.x - mid.x, self.arc_mid.y - mid.y)

    @property
    def arc_radius(self) -> float:
        """Radius of the circle through start, arc_mid and end."""
        if self.arc_mid is None:
            return math.inf
        half_chord = self.chord_length / 2
        h = self.sagitta
        return (half_chord**2 + h**2) / (2 * h)

    @property
    def is_major_arc(self) -> bool:
        return self.sagitta > self.chord_length / 2

    @property
    def arc_centre(self) -> Optional[CartesianPoint]:
        if self.arc_mid is None:
            return None
        mid = self.chord_midpoint
        t = self.arc_radius / self.sagitta
        return CartesianPoint(
            self.arc_mid.x + (mid.x - self.arc_mid.x) * t,
            self.arc_mid.y + (mid.y - self.arc_mid.y) * t,
        )

    def max_radius(self) -> float:
        """Largest distance from the pattern centre reached anywhere along the stroke."""
        reach = max(math.hypot(*self.start), math.hypot(*self.end))
        centre = self.arc_centre
        if centre is None:
            return reach
        offset = math.hypot(*centre)
        if offset == 0:
            return reach
        # the circle's farthest point from the origin counts only when it lies on the drawn side of the chord
        radius = self.arc_radius
        far = CartesianPoint(centre.x * (1 + radius / offset), centre.y * (1 + radius / offset))
        if _cross(self.start, self.end, far) * _cross(self.start, self.end, self.arc_mid) > 0:
            return max(reach, offset + radius)
        return reach

    def reversed(self) -> "Stroke":
        return Stroke(self.end, self.start, self.kind, self.arc_mid)


def to_cartesian(p: "PolarPoint") -> CartesianPoint:
    return CartesianPoint(p.radius * math.cos(p.theta), p.radius * math.sin(p.theta))


def path_coordinates(path: "ClosedPath") -> np.ndarray:
    """(len(path), 2) array of Cartesian coordinates, closure point included."""
    return np.array([to_cartesian(p) for p in path.points], dtype=float).reshape(-1, 2)


def _tie_break_signs(normals: np.ndarray) -> np.ndarray:
    # the normal with positive y wins; a horizontal normal falls back to positive x
    horizontal = np.abs(normals[:, 1]) <= TIE_TOLERANCE
    return np.where(horizontal, np.sign(normals[:, 0]), np.sign(normals[:, 1]))


def make_strokes(path: "ClosedPath", style: ConnectionStyle, bulge=0.3) -> list[Stroke]:
    """
    One stroke per consecutive pair of path points.

    For arcs the chord midpoint is pushed along the chord normal by
    ``bulge * chord_length``: away from the origin for convex arcs, towards it
    for concave ones. When the chord midpoint gives no preference (it sits on
    the origin, or the chord line passes through it) the convex arc takes the
    normal with positive y and the concave arc the opposite one.
    """
    style = ConnectionStyle(style)
    bulge = float(bulge)
    if not 0 < bulge < 1:
        raise BulgeOutOfRange(bulge)

    coords = path_coordinates(path)
    starts, ends = coords[:-1], coords[1:]
    chords = ends - starts
    lengths = np.hypot(chords[:, 0], chords[:, 1])

    degenerate = np.flatnonzero(lengths <= TIE_TOLERANCE)
    if degenerate.size:
        index = int(degenerate[0])
        raise DegenerateChord(index, path.points[index])

    start_points = [CartesianPoint(float(x), float(y)) for x, y in starts]
    end_points = [CartesianPoint(float(x), float(y)) for x, y in ends]
    if not style.is_arc:
        return [Stroke(s, e) for s, e in zip(start_points, end_points)]

    mids = (starts + ends) / 2
    normals = np.column_stack((-chords[:, 1], chords[:, 0])) / lengths[:, None]
    outward = np.einsum("ij,ij->i", normals, mids)
    tolerance = TIE_TOLERANCE * max(1.0, float(np.abs(coords).max()))
    signs = np.where(np.abs(outward) <= tolerance, _tie_break_signs(normals), np.sign(outward))
    if style is ConnectionStyle.CONCAVE_ARC:
        signs = -signs

    arc_mids = mids + (signs * bulge * lengths)[:, None] * normals
    return [
        Stroke(s, e, StrokeKind.ARC, CartesianPoint(float(x), float(y)))
        for s, e, (x, y) in zip(start_points, end_points, arc_mids)
    ]


def rotate_point(point: CartesianPoint, angle: float) -> CartesianPoint:
    c, s = math.cos(angle), math.sin(angle)
    return CartesianPoint(c * point.x - s * point.y, s * point.x + c * point.y)


def rotate_strokes(strokes: Iterable[Stroke], angle: float) -> list[Stroke]:
    """Rotate every stroke about the pattern centre by ``angle`` radians."""
    rotated = []
    for stroke in strokes:
        mid = None if stroke.arc_mid is None else rotate_point(stroke.arc_mid, angle)
        rotated.append(
            Stroke(rotate_point(stroke.start, angle), rotate_point(stroke.end, angle), stroke.kind, mid)
        )
    return rotated


def stroke_extent(strokes: Iterable[Stroke]) -> float:
    return max((stroke.max_radius() for stroke in strokes), default=0.0)


def stroke_array(strokes: Iterable[Stroke]) -> np.ndarray:
    """
    (k, 6) array of [start, end, arc_mid] rows; straight strokes repeat the
    chord midpoint as their arc_mid so every row has the same shape.
    """
    rows = []
    for stroke in strokes:
        mid = stroke.arc_mid if stroke.arc_mid is not None else stroke.chord_midpoint
        rows.append((*stroke.start, *stroke.end, *mid))
    return np.array(rows, dtype=float).reshape(-1, 6)


def stroke_sets_match(a: Iterable[Stroke], b: Iterable[Stroke], tol: float = 1e-9) -> bool:
    """
    True when both collections hold the same strokes up to ``tol``, ignoring
    order and the direction each stroke is travelled in.
    """
    left = stroke_array(a)
    right = stroke_array(b)
    if left.shape != right.shape:
        return False
    if not left.size:
        return True
    flipped = right[:, [2, 3, 0, 1, 4, 5]]
    unmatched = np.ones(len(right), dtype=bool)
    for row in left:
        forward = np.abs(right - row).max(axis=1)
        backward = np.abs(flipped - row).max(axis=1)
        distance = np.where(unmatched, np.minimum(forward, backward), np.inf)
        best = int(np.argmin(distance))
        if distance[best] > tol:
            return False
        unmatched[best] = False
    return True
