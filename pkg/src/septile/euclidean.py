"""Planar circle geometry: point powers, radical lines, half-plane clipping.

All points are plain length-2 numpy arrays.  The half-plane attached to an
``OrientedLine`` is ``{x : normal . x <= offset}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

EPS = 1e-12
TOL = 1e-9


def _vec2(p) -> np.ndarray:
    a = np.asarray(p, dtype=float)
    if a.shape != (2,) or not np.all(np.isfinite(a)):
        raise ValueError(f"expected a finite 2-vector, got {p!r}")
    return a


@dataclass(frozen=True)
class Disc:
    """Closed circular disc with center ``c`` and radius ``r > 0``."""

    c: np.ndarray
    r: float

    def __init__(self, c, r):
        object.__setattr__(self, "c", _vec2(c))
        object.__setattr__(self, "r", float(r))
        if not (np.isfinite(self.r) and self.r > 0):
            raise ValueError("radius must be positive and finite")


@dataclass(frozen=True)
class OrientedLine:
    """Line ``normal . x = offset`` with unit normal; keeps ``{normal . x <= offset}``."""

    normal: np.ndarray
    offset: float

    def __init__(self, normal, offset):
        n = _vec2(normal)
        norm = float(np.linalg.norm(n))
        if norm < EPS:
            raise ValueError("degenerate line normal")
        object.__setattr__(self, "normal", n / norm)
        object.__setattr__(self, "offset", float(offset) / norm)

    def value(self, p) -> float:
        """Signed constraint value ``normal . p - offset`` (<= 0 inside)."""
        return float(self.normal @ np.asarray(p, dtype=float)) - self.offset

    def flipped(self) -> "OrientedLine":
        return OrientedLine(-self.normal, -self.offset)


def power(a, disc: Disc) -> float:
    """Power of point ``a`` with respect to ``disc``: |a - c|^2 - r^2.

    Negative inside the disc, zero on the boundary, positive outside; for an
    exterior point it equals the squared tangent length.
    """
    d = _vec2(a) - disc.c
    return float(d @ d) - disc.r * disc.r


def radical_line(d1: Disc, d2: Disc) -> OrientedLine:
    """Locus of equal power with respect to two disjoint discs.

    The result is perpendicular to the center line, strictly separates the
    discs, and is oriented so its half-plane contains ``d1``.

    Raises ValueError("concentric pair") for coincident centers and
    ValueError("not a packing") for overlapping discs.
    """
    delta = d2.c - d1.c
    dist = float(np.linalg.norm(delta))
    scale = max(1.0, d1.r, d2.r)
    if dist <= EPS * scale:
        raise ValueError("concentric pair")
    if dist <= d1.r + d2.r:
        raise ValueError("not a packing")
    u = delta / dist
    c1sq = float(d1.c @ d1.c)
    c2sq = float(d2.c @ d2.c)
    offset = (c2sq - c1sq + d1.r * d1.r - d2.r * d2.r) / (2.0 * dist)
    return OrientedLine(u, offset)


# ---------------------------------------------------------------------------
# Convex polygon utilities (counterclockwise vertex loops).
# ---------------------------------------------------------------------------


def box_polygon(bbox) -> np.ndarray:
    """Counterclockwise vertex loop of the axis-aligned box (xmin, ymin, xmax, ymax)."""
    xmin, ymin, xmax, ymax = (float(v) for v in bbox)
    if not (xmax > xmin and ymax > ymin):
        raise ValueError("empty bounding box")
    return np.array([[xmin, ymin], [xmax, ymin], [xmax, ymax], [xmin, ymax]])


def box_lines(bbox) -> list[OrientedLine]:
    """The four half-plane constraints whose intersection is the box."""
    xmin, ymin, xmax, ymax = (float(v) for v in bbox)
    return [
        OrientedLine((1.0, 0.0), xmax),
        OrientedLine((-1.0, 0.0), -xmin),
        OrientedLine((0.0, 1.0), ymax),
        OrientedLine((0.0, -1.0), -ymin),
    ]


def clip_polygon(vertices: np.ndarray, line: OrientedLine, tol: float = EPS) -> np.ndarray:
    """Intersect a convex ccw polygon with ``{x : line.normal . x <= line.offset}``.

    Returns the clipped ccw loop, or an empty (0, 2) array when the
    intersection has empty interior.
    """
    verts = np.asarray(vertices, dtype=float)
    if len(verts) == 0:
        return verts.reshape(0, 2)
    vals = verts @ line.normal - line.offset
    if np.all(vals <= tol):
        return verts
    if np.all(vals >= -tol):
        return np.empty((0, 2))
    out: list[np.ndarray] = []
    k = len(verts)
    for i in range(k):
        a, b = verts[i], verts[(i + 1) % k]
        fa, fb = vals[i], vals[(i + 1) % k]
        if fa <= tol:
            out.append(a)
        if (fa < -tol and fb > tol) or (fa > tol and fb < -tol):
            t = fa / (fa - fb)
            out.append(a + t * (b - a))
    cleaned: list[np.ndarray] = []
    for p in out:
        if not cleaned or np.linalg.norm(p - cleaned[-1]) > tol:
            cleaned.append(p)
    if len(cleaned) >= 2 and np.linalg.norm(cleaned[0] - cleaned[-1]) <= tol:
        cleaned.pop()
    if len(cleaned) < 3:
        return np.empty((0, 2))
    return np.array(cleaned)


def polygon_area(vertices) -> float:
    """Shoelace area of a ccw vertex loop."""
    v = np.asarray(vertices, dtype=float)
    if len(v) < 3:
        return 0.0
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def convex_hull(points) -> np.ndarray:
    """Strict convex hull (monotone chain), ccw, collinear points dropped."""
    pts = sorted({(float(x), float(y)) for x, y in np.asarray(points, dtype=float)})
    if len(pts) < 3:
        raise ValueError("need at least 3 distinct points")

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= EPS:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= EPS:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise ValueError("points are collinear")
    return np.array(hull)


def point_in_convex(point, vertices, tol: float = TOL) -> bool:
    """True when ``point`` lies in the closed convex ccw polygon."""
    p = _vec2(point)
    v = np.asarray(vertices, dtype=float)
    k = len(v)
    for i in range(k):
        e = v[(i + 1) % k] - v[i]
        if e[0] * (p[1] - v[i][1]) - e[1] * (p[0] - v[i][0]) < -tol:
            return False
    return True


def polygon_separation(p_verts, q_verts) -> float:
    """Largest edge-normal gap between two convex polygons (SAT).

    Positive means disjoint interiors with that clearance along some edge
    normal of either polygon; for convex polygons a positive value is exact
    evidence of disjointness.
    """
    p = np.asarray(p_verts, dtype=float)
    q = np.asarray(q_verts, dtype=float)
    best = -np.inf
    for verts in (p, q):
        k = len(verts)
        for i in range(k):
            e = verts[(i + 1) % k] - verts[i]
            n = np.array([e[1], -e[0]])
            norm = np.linalg.norm(n)
            if norm < EPS:
                continue
            n = n / norm
            gap1 = np.min(q @ n) - np.max(p @ n)
            gap2 = np.min(p @ n) - np.max(q @ n)
            best = max(best, gap1, gap2)
    return float(best)
