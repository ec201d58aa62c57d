"""Geometry of circular discs on the unit sphere.

Points are unit 3-vectors.  A disc ("cap") is a center with an angular radius
in (0, pi/2); its boundary circle has the center as its pole.  The potential
of a point with respect to a disc is cos(angular distance to the center)
divided by cos(radius); the locus where two discs have equal potential is a
great circle that separates them, which is what the tiling engine clips with.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

EPS = 1e-12
TOL = 1e-9
MAX_RADIUS = np.pi / 2 - 1e-9


def unit3(u) -> np.ndarray:
    a = np.asarray(u, dtype=float)
    if a.shape != (3,) or not np.all(np.isfinite(a)):
        raise ValueError(f"expected a finite 3-vector, got {u!r}")
    norm = float(np.linalg.norm(a))
    if norm < EPS:
        raise ValueError("zero vector cannot be normalized")
    return a / norm


def _check_unit(u) -> np.ndarray:
    a = np.asarray(u, dtype=float)
    if a.shape != (3,):
        raise ValueError("expected a 3-vector")
    if abs(float(a @ a) - 1.0) > 1e-10:
        raise ValueError("vector is not unit length")
    return a


@dataclass(frozen=True)
class Disc:
    """Spherical cap: unit center ``c``, angular radius ``r`` in (0, pi/2)."""

    c: np.ndarray
    r: float

    def __init__(self, c, r):
        object.__setattr__(self, "c", _check_unit(c))
        object.__setattr__(self, "r", float(r))
        if not (0.0 < self.r < MAX_RADIUS):
            raise ValueError("radius must lie in (0, pi/2), strictly below pi/2")


@dataclass(frozen=True)
class GreatCircle:
    """Great circle with unit pole ``normal``; keeps hemisphere {u : normal . u >= 0}."""

    normal: np.ndarray

    def __init__(self, normal):
        object.__setattr__(self, "normal", unit3(normal))

    def value(self, u) -> float:
        return float(self.normal @ np.asarray(u, dtype=float))

    def flipped(self) -> "GreatCircle":
        return GreatCircle(-self.normal)


def angular_distance(a, b) -> float:
    """Angle in [0, pi] between two unit vectors."""
    d = float(np.clip(np.asarray(a, float) @ np.asarray(b, float), -1.0, 1.0))
    return float(np.arccos(d))


def potential(a, disc: Disc) -> float:
    """Spherical potential cos(dist(a, center)) / cos(radius).

    Equals (a . c) / cos r for unit vectors; 1 on the disc boundary, greater
    than 1 inside, decreasing with distance from the center.
    """
    return float(np.asarray(a, float) @ disc.c) / np.cos(disc.r)


def bisector(d1: Disc, d2: Disc) -> GreatCircle:
    """Equal-potential great circle of two disjoint caps.

    The hemisphere {normal . u >= 0} contains ``d1`` entirely.  Raises
    ValueError("degenerate pair") for equal or antipodal centers.
    """
    dot = float(d1.c @ d2.c)
    if dot > 1.0 - EPS or dot < -1.0 + EPS:
        raise ValueError("degenerate pair")
    if angular_distance(d1.c, d2.c) <= d1.r + d2.r:
        raise ValueError("not a packing")
    n = d1.c / np.cos(d1.r) - d2.c / np.cos(d2.r)
    return GreatCircle(n)


def equipotential_pair(d1: Disc, d2: Disc) -> tuple[np.ndarray, np.ndarray]:
    """The two equipotential points on the great circle through both centers.

    They are antipodal; the first returned point is the one on the shorter
    center arc, strictly between the two disc boundaries.
    """
    circle = bisector(d1, d2)
    m = np.cross(d1.c, d2.c)
    p = np.cross(circle.normal, m)
    norm = float(np.linalg.norm(p))
    if norm < EPS:
        raise ValueError("degenerate pair")
    p = p / norm
    d = angular_distance(d1.c, d2.c)
    if abs(angular_distance(p, d1.c) + angular_distance(p, d2.c) - d) > 1e-6:
        p = -p
    return p, -p


def foot_of_perpendicular(a, circle: GreatCircle) -> np.ndarray:
    """Nearest point of a great circle to ``a``.

    Undefined when ``a`` is one of the circle's poles.
    """
    u = _check_unit(a)
    s = float(u @ circle.normal)
    if abs(s) >= 1.0 - EPS:
        raise ValueError("projection undefined")
    return unit3(u - s * circle.normal)


def tangent_toward(v, w) -> np.ndarray:
    """Unit tangent at ``v`` of the minor great-circle arc toward ``w``."""
    v = np.asarray(v, float)
    w = np.asarray(w, float)
    t = w - float(v @ w) * v
    norm = float(np.linalg.norm(t))
    if norm < EPS:
        raise ValueError("tangent undefined for equal or antipodal points")
    return t / norm
