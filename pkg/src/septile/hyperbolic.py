"""Hyperbolic plane geometry in the hyperboloid model.

Points live on the upper sheet of x1^2 + x2^2 - x0^2 = -1 (coordinates ordered
(x0, x1, x2)) with the Minkowski form <X, Y> = x1 y1 + x2 y2 - x0 y0, so that
cosh(dist(A, B)) = -<A, B>.  Geodesics are cut out by Minkowski-unit spacelike
normals; the kept half-plane is {X : <X, n> <= 0}.  The Poincare disc is used
only at the I/O boundary, the Klein disc internally for clipping (geodesics
are straight chords there).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

EPS = 1e-12
TOL = 1e-9


def mdot(x, y) -> float:
    """Minkowski bilinear form x1 y1 + x2 y2 - x0 y0."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(x[1] * y[1] + x[2] * y[2] - x[0] * y[0])


def point(x) -> np.ndarray:
    """Validate a hyperboloid point (<X, X> = -1, x0 >= 1)."""
    a = np.asarray(x, dtype=float)
    if a.shape != (3,) or not np.all(np.isfinite(a)):
        raise ValueError(f"expected a finite 3-vector, got {x!r}")
    if abs(mdot(a, a) + 1.0) > 1e-7 * max(1.0, a[0] * a[0]) or a[0] < 1.0 - 1e-9:
        raise ValueError("not a point of the upper hyperboloid sheet")
    return a


ORIGIN = np.array([1.0, 0.0, 0.0])


@dataclass(frozen=True)
class Disc:
    """Hyperbolic disc: hyperboloid center ``c``, radius ``r > 0`` (hyperbolic length)."""

    c: np.ndarray
    r: float

    def __init__(self, c, r):
        object.__setattr__(self, "c", point(c))
        object.__setattr__(self, "r", float(r))
        if not (np.isfinite(self.r) and self.r > 0):
            raise ValueError("radius must be positive and finite")


@dataclass(frozen=True)
class Geodesic:
    """Geodesic <X, n> = 0 with spacelike unit normal; keeps {X : <X, n> <= 0}."""

    normal: np.ndarray

    def __init__(self, normal):
        n = np.asarray(normal, dtype=float)
        if n.shape != (3,) or not np.all(np.isfinite(n)):
            raise ValueError("expected a finite 3-vector")
        nn = mdot(n, n)
        if nn <= EPS:
            raise ValueError("normal is not spacelike")
        object.__setattr__(self, "normal", n / np.sqrt(nn))

    def value(self, x) -> float:
        return mdot(np.asarray(x, dtype=float), self.normal)

    def flipped(self) -> "Geodesic":
        return Geodesic(-self.normal)


def distance(a, b) -> float:
    """Hyperbolic distance, cosh d = -<A, B>."""
    c = -mdot(a, b)
    return float(np.arccosh(max(c, 1.0)))


def potential(a, disc: Disc) -> float:
    """Hyperbolic potential cosh(dist(a, center)) / cosh(radius).

    Equals -<a, c> / cosh r; it is 1 on the disc boundary, below 1 strictly
    inside (minimum 1/cosh r at the center), and grows with distance.
    """
    return -mdot(a, disc.c) / np.cosh(disc.r)


def bisector(d1: Disc, d2: Disc) -> Geodesic:
    """Equal-potential geodesic of two disjoint hyperbolic discs.

    The half-plane {<X, n> <= 0} contains ``d1`` entirely.  For disjoint discs
    the construction always yields a spacelike normal.
    """
    if distance(d1.c, d2.c) <= d1.r + d2.r:
        raise ValueError("not a packing")
    w = d2.c / np.cosh(d2.r) - d1.c / np.cosh(d1.r)
    if mdot(w, w) <= EPS:
        raise ValueError("degenerate pair")
    return Geodesic(w)


# ---------------------------------------------------------------------------
# Model conversions.
# ---------------------------------------------------------------------------


def poincare_to_hyperboloid(p) -> np.ndarray:
    """Map a Poincare-disc point (|p| < 1) to the hyperboloid sheet."""
    a = np.asarray(p, dtype=float)
    if a.shape != (2,) or not np.all(np.isfinite(a)):
        raise ValueError(f"expected a finite 2-vector, got {p!r}")
    s = float(a @ a)
    if s >= 1.0 - 1e-12:
        raise ValueError("outside model")
    denom = 1.0 - s
    return np.array([(1.0 + s) / denom, 2.0 * a[0] / denom, 2.0 * a[1] / denom])


def hyperboloid_to_poincare(x) -> np.ndarray:
    """Inverse of :func:`poincare_to_hyperboloid`."""
    a = point(x)
    return np.array([a[1] / (1.0 + a[0]), a[2] / (1.0 + a[0])])


def klein_to_hyperboloid(k) -> np.ndarray:
    """Lift a Klein-disc point (|k| < 1) to the hyperboloid sheet."""
    a = np.asarray(k, dtype=float)
    s = float(a @ a)
    if s >= 1.0:
        raise ValueError("outside model")
    w = 1.0 / np.sqrt(1.0 - s)
    return np.array([w, w * a[0], w * a[1]])


def hyperboloid_to_klein(x) -> np.ndarray:
    a = np.asarray(x, dtype=float)
    return np.array([a[1] / a[0], a[2] / a[0]])


def poincare_distance(p, q) -> float:
    """Distance computed directly in the Poincare model (used as an oracle)."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    pq = float((p - q) @ (p - q))
    c = 1.0 + 2.0 * pq / ((1.0 - float(p @ p)) * (1.0 - float(q @ q)))
    return float(np.arccosh(max(c, 1.0)))


def polar_point(rho: float, phi: float) -> np.ndarray:
    """Hyperboloid point at hyperbolic distance ``rho`` from the origin, direction ``phi``."""
    return np.array([np.cosh(rho), np.sinh(rho) * np.cos(phi), np.sinh(rho) * np.sin(phi)])


def tangent_toward(x, y) -> np.ndarray:
    """Minkowski-unit tangent at ``x`` of the geodesic toward ``y``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    t = y + mdot(x, y) * x
    tt = mdot(t, t)
    if tt <= EPS:
        raise ValueError("tangent undefined for coincident points")
    return t / np.sqrt(tt)
