"""Read drawn geometry back out of rendered SVG documents."""
import math

import numpy as np

SVG = "{http://www.w3.org/2000/svg}"


def arc_samples(start, radius, large, sweep, end, samples=64):
    """Points along an SVG arc segment with equal radii and no rotation."""
    (sx, sy), (ex, ey) = start, end
    half = math.hypot(ex - sx, ey - sy) / 2
    radius = max(radius, half)
    rise = math.sqrt(max(radius**2 - half**2, 0.0))
    sign = 1 if large != sweep else -1
    k = sign * rise / half
    cx = (sx + ex) / 2 + k * (sy - ey) / 2
    cy = (sy + ey) / 2 - k * (sx - ex) / 2

    first = math.atan2(sy - cy, sx - cx)
    delta = (math.atan2(ey - cy, ex - cx) - first) % (2 * math.pi)
    if not sweep:
        delta -= 2 * math.pi
    angles = first + np.linspace(0.0, 1.0, samples) * delta
    return np.column_stack((cx + radius * np.cos(angles), cy + radius * np.sin(angles)))


def path_points(d, samples=64):
    """Every vertex of a path plus sampled points along its arcs, as an (k, 2) array."""
    tokens = d.replace(",", " ").split()
    points, cursor, i = [], None, 0
    while i < len(tokens):
        command = tokens[i]
        if command in ("M", "L"):
            cursor = (float(tokens[i + 1]), float(tokens[i + 2]))
            points.append(cursor)
            i += 3
        elif command == "A":
            end = (float(tokens[i + 6]), float(tokens[i + 7]))
            arc = arc_samples(cursor, float(tokens[i + 1]), int(tokens[i + 4]), int(tokens[i + 5]), end, samples)
            points.extend(map(tuple, arc))
            cursor = end
            i += 8
        elif command == "Z":
            i += 1
        else:
            raise ValueError(f"unexpected path command {command!r}")
    return np.array(points, dtype=float).reshape(-1, 2)


def stroke_points(root):
    paths = [path_points(p.get("d")) for p in root.iter(f"{SVG}path")]
    return np.vstack(paths) if paths else np.empty((0, 2))


def all_points(root):
    """Stroke samples, dot centres and arm ray endpoints of a document."""
    circles = [(float(c.get("cx")), float(c.get("cy"))) for c in root.iter(f"{SVG}circle")]
    lines = []
    for line in root.iter(f"{SVG}line"):
        lines.append((float(line.get("x1")), float(line.get("y1"))))
        lines.append((float(line.get("x2")), float(line.get("y2"))))
    return np.vstack([stroke_points(root), np.array(circles + lines, dtype=float).reshape(-1, 2)])


def view_box(root):
    return [float(v) for v in root.get("viewBox").replace(",", " ").split()]
