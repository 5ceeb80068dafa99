"""
Dot matrix and closed polar path.

The generator sequence is repeated n times and poured row by row into an
m x n matrix: row i is a concentric layer, column j is arm j. Walking the same
repeated sequence while stepping one arm per term gives the closed path that
is drawn as the kolam.
"""
from __future__ import annotations

import json
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from kolam.sequence import GeneratorSequence, KolamSpec, generate_sequence

logger = logging.getLogger(__name__)

# Arm 0 lies on the positive x-axis; arms advance counterclockwise.
ANGLE_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class DotMatrix:
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.int64)
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def row(self, i: int) -> list[int]:
        return self.entries[i].tolist()

    def column(self, j: int) -> list[int]:
        return self.entries[:, j].tolist()

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """(radius, arm) dot of every cell, as (i, j, value) triples."""
        for (i, j), value in np.ndenumerate(self.entries):
            yield int(i), int(j), int(value)

    def __eq__(self, other):
        if not isinstance(other, DotMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None


@dataclass(frozen=True)
class PolarPoint:
    radius: int
    arm: int
    theta: float = field(compare=False)

    @classmethod
    def on_arm(cls, radius: int, arm: int, arms: int) -> "PolarPoint":
        return cls(radius=radius, arm=arm, theta=arm * (2 * math.pi / arms))

    @property
    def key(self) -> tuple[int, int]:
        return self.radius, self.arm


@dataclass(frozen=True)
class ClosedPath:
    points: tuple
    m: int
    n: int

    def __len__(self):
        return len(self.points)

    @property
    def dots(self) -> tuple:
        """Every visited dot once, i.e. the path without its closure point."""
        return self.points[:-1]

    @property
    def is_closed(self) -> bool:
        return bool(self.points) and self.points[0] == self.points[-1]

    def reversed(self) -> "ClosedPath":
        return ClosedPath(points=self.points[::-1], m=self.m, n=self.n)

    def undirected_edges(self) -> Counter:
        return Counter(frozenset((a.key, b.key)) for a, b in zip(self.points, self.points[1:]))


def fill_order(seq: GeneratorSequence, n: int) -> Iterator[tuple[int, int, int, int]]:
    """
    Row-major insertion of the sequence repeated n times.

    Yields (t, i, j, value) for each of the m*n writes. When m > n one copy of
    the sequence spills over several rows; when m < n a row holds more than
    one copy. Both cases are the same flat walk.
    """
    m = len(seq)
    for t in range(m * n):
        i, j = divmod(t, n)
        yield t, i, j, seq[t % m]


def build_matrix(seq: GeneratorSequence, n: int) -> DotMatrix:
    """entries[i][j] = seq[(n*i + j) mod m]."""
    m = len(seq)
    entries = np.resize(np.asarray(seq.terms, dtype=np.int64), m * n).reshape(m, n)
    return DotMatrix(entries)


def build_closed_path(spec: KolamSpec) -> ClosedPath:
    """
    Point i sits on arm (i mod n) at radius S[i mod m]; the first point is
    appended again to close the loop.
    """
    seq = generate_sequence(spec)
    m, n = spec.m, spec.n
    points = [PolarPoint.on_arm(seq[i % m], i % n, n) for i in range(m * n)]
    points.append(points[0])
    logger.debug("closed path for %s has %d points", spec, len(points))
    return ClosedPath(points=tuple(points), m=m, n=n)


def matrix_to_path_consistency(matrix: DotMatrix, path: ClosedPath) -> bool:
    """Same multiset of (radius, arm) dots in the matrix and along the path."""
    from_matrix = Counter((value, j) for _, j, value in matrix.cells())
    from_path = Counter(p.key for p in path.dots)
    return from_matrix == from_path


def path_follows_matrix(matrix: DotMatrix, path: ClosedPath) -> bool:
    """
    Point t of the path is cell t of the matrix read row-major, on arm t mod n.
    Stronger than the multiset check: it also pins down the visiting order.
    """
    flat = matrix.entries.ravel()
    if len(path.dots) != flat.size:
        return False
    return all(
        p.radius == int(flat[t]) and p.arm == t % matrix.cols for t, p in enumerate(path.dots)
    )


def angle_is_on_arm(point: PolarPoint, n: int) -> bool:
    step = 2 * math.pi / n
    return 0 <= point.theta < 2 * math.pi and math.isclose(
        point.theta, point.arm * step, rel_tol=0.0, abs_tol=ANGLE_TOLERANCE
    )


def dump_matrix_text(matrix: DotMatrix) -> str:
    return "".join(" ".join(str(v) for v in row) + "\n" for row in matrix.tolist())


def dump_matrix_json(matrix: DotMatrix) -> str:
    payload = {"m": matrix.rows, "n": matrix.cols, "rows": matrix.tolist()}
    return json.dumps(payload, separators=(",", ":"))


def dump_path_json(path: ClosedPath) -> str:
    payload = {"m": path.m, "n": path.n, "points": [[p.radius, p.arm] for p in path.points]}
    return json.dumps(payload, separators=(",", ":"))
