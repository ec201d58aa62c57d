"""Caps of convex polygon discs.

A cap is the pair of tangent segments from an exterior apex to its two
contact points on the disc boundary; it is isosceles when the segments have
equal length.  Discs are strictly convex polygons (smooth discs are used via
dense polygon surrogates), which keeps every tangent computation exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .euclidean import OrientedLine, convex_hull, polygon_area

TWO_PI = 2.0 * np.pi

# Sampling window for cap angles when a disc is probed as a circle surrogate.
# Caps flatter than ALPHA_MAX have their apex within an edge length of the
# boundary and measure single-edge geometry rather than the disc's shape, so
# dense regular polygons would stop reading as circles without the bound.
ALPHA_MIN = 0.2
ALPHA_MAX = 1.4


def _hull_diameter(hull: np.ndarray) -> float:
    """Exact diameter of a convex ccw polygon by rotating calipers."""
    k = len(hull)
    j = 1
    best = 0.0
    for i in range(k):
        nxt = (i + 1) % k
        e = hull[nxt] - hull[i]
        while True:
            jn = (j + 1) % k
            d_new = hull[jn] - hull[i]
            d_old = hull[j] - hull[i]
            if e[0] * d_new[1] - e[1] * d_new[0] > e[0] * d_old[1] - e[1] * d_old[0]:
                j = jn
            else:
                break
        best = max(
            best,
            float(((hull[i] - hull[j]) ** 2).sum()),
            float(((hull[nxt] - hull[j]) ** 2).sum()),
        )
    return float(np.sqrt(best))


@dataclass(frozen=True)
class ConvexDisc:
    """Strictly convex polygon, ccw vertex loop, no three collinear."""

    vertices: np.ndarray
    diameter: float

    def __init__(self, vertices):
        v = np.asarray(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or len(v) < 3:
            raise ValueError("need at least 3 planar vertices")
        hull = convex_hull(v)
        object.__setattr__(self, "vertices", hull)
        object.__setattr__(self, "diameter", _hull_diameter(hull))
        edges = np.roll(hull, -1, axis=0) - hull
        object.__setattr__(self, "_edges", edges)
        object.__setattr__(
            self, "_normal_angles", np.sort(np.arctan2(-edges[:, 0], edges[:, 1]) % TWO_PI)
        )

    def edge_normal_angles(self) -> np.ndarray:
        """Outward normal angle of every edge, ascending in [0, 2*pi)."""
        return self._normal_angles

    def contains(self, p, tol: float = 0.0) -> bool:
        v = self.vertices
        e = self._edges
        p = np.asarray(p, dtype=float)
        cross = e[:, 0] * (p[1] - v[:, 1]) - e[:, 1] * (p[0] - v[:, 0])
        return bool(np.all(cross >= -tol))


@dataclass(frozen=True)
class Cap:
    """Tangent wedge from an exterior apex: two contact points and side lengths."""

    apex: np.ndarray
    contact1: np.ndarray
    contact2: np.ndarray
    side1: float
    side2: float
    angle: float
    normal1: float
    normal2: float


def support_line(disc: ConvexDisc, normal_angle: float):
    """Supporting line with the given outward normal, plus its contact set.

    The contact set is a single vertex, or the two endpoints of an edge when
    the normal matches an edge normal to within 1e-12.
    """
    u = np.array([np.cos(normal_angle), np.sin(normal_angle)])
    vals = disc.vertices @ u
    h = float(vals.max())
    scale = max(1.0, float(np.abs(vals).max()))
    idx = np.nonzero(vals >= h - 1e-12 * scale)[0]
    contacts = disc.vertices[idx]
    if len(contacts) > 2:
        raise ValueError("disc is not strictly convex")
    return OrientedLine(u, h), contacts


def _wrap_pi(x: float) -> float:
    return (x + np.pi) % TWO_PI - np.pi


def cap_from_normals(disc: ConvexDisc, theta1: float, theta2: float) -> Cap:
    """Cap cut by the two supporting lines with the given outward normals.

    The apex is the line intersection; the cap angle is pi minus the normal
    gap.  Contact points are the contact-set points nearest the apex.  Raises
    for (anti)parallel normals and when the apex is not strictly outside.
    """
    d = abs(_wrap_pi(theta1 - theta2))
    if d < 1e-9 or d > np.pi - 1e-9:
        raise ValueError("parallel normals")
    line1, set1 = support_line(disc, theta1)
    line2, set2 = support_line(disc, theta2)
    mat = np.array([line1.normal, line2.normal])
    rhs = np.array([line1.offset, line2.offset])
    apex = np.linalg.solve(mat, rhs)
    if disc.contains(apex, tol=1e-12 * max(1.0, disc.diameter)):
        raise ValueError("degenerate cap")

    def nearest(contacts):
        d2 = ((contacts - apex) ** 2).sum(-1)
        return contacts[int(np.argmin(d2))]

    c1 = nearest(set1)
    c2 = nearest(set2)
    s1 = float(np.linalg.norm(c1 - apex))
    s2 = float(np.linalg.norm(c2 - apex))
    angle = np.pi - d
    return Cap(apex, c1, c2, s1, s2, float(angle), float(theta1), float(theta2))


def cap_angle_from_rays(cap: Cap) -> float:
    """Apex angle recomputed from the two contact rays."""
    r1 = cap.contact1 - cap.apex
    r2 = cap.contact2 - cap.apex
    c = float(r1 @ r2) / (np.linalg.norm(r1) * np.linalg.norm(r2))
    return float(np.arccos(np.clip(c, -1.0, 1.0)))


def is_isosceles(cap: Cap, tol: float = 1e-9) -> bool:
    """Relative side-length equality: |s1 - s2| <= tol * (s1 + s2)."""
    return abs(cap.side1 - cap.side2) <= tol * (cap.side1 + cap.side2)


def axis_cap(disc: ConvexDisc, axis: float, alpha: float) -> Cap:
    """Cap of angle ``alpha`` whose normal pair is symmetric about ``axis``."""
    half = (np.pi - alpha) / 2.0
    return cap_from_normals(disc, axis + half, axis - half)


def cap_region_area(disc: ConvexDisc, cap: Cap) -> float:
    """Area enclosed between the two tangent segments and the disc boundary."""
    v = disc.vertices
    k = len(v)

    def vert_index(p):
        d2 = ((v - p) ** 2).sum(-1)
        i = int(np.argmin(d2))
        if d2[i] > 1e-18 * max(1.0, disc.diameter) ** 2:
            raise ValueError("contact is not a polygon vertex")
        return i

    i1 = vert_index(cap.contact1)
    i2 = vert_index(cap.contact2)
    chain = [i1]
    j = i1
    while j != i2:
        j = (j + 1) % k
        chain.append(j)
    poly = np.vstack([cap.apex, v[chain]])
    area = polygon_area(poly)
    if area < 0:
        chain = [i2]
        j = i2
        while j != i1:
            j = (j + 1) % k
            chain.append(j)
        poly = np.vstack([cap.apex, v[chain]])
        area = polygon_area(poly)
    return abs(area)


def _scan_breakpoints(disc: ConvexDisc, alpha: float) -> np.ndarray:
    """Axis angles where a contact jumps: edge normals shifted by +-(pi-alpha)/2."""
    half = (np.pi - alpha) / 2.0
    normals = disc.edge_normal_angles()
    pts = np.concatenate([(normals - half) % TWO_PI, (normals + half) % TWO_PI])
    return np.sort(np.unique(pts))


def _bracket_roots(disc, alpha, target, breaks, samples, collect_all):
    """Scan each continuity piece for sign changes of side1 - side2."""

    def f(theta: float) -> float | None:
        try:
            cap = axis_cap(disc, theta, alpha)
        except ValueError:
            return None
        return cap.side1 - cap.side2

    def bisect(lo, hi, flo):
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            fm = f(mid)
            if fm is None:
                return None
            if abs(fm) <= target:
                return mid
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
            if hi - lo < 1e-15:
                return mid if abs(fm) <= 1e3 * target else None
        return None

    roots: list[float] = []
    for b0, b1 in zip(breaks, np.roll(breaks, -1)):
        if b1 <= b0:
            b1 += TWO_PI
        span = b1 - b0
        m = max(4, int(np.ceil(samples * span / TWO_PI)))
        thetas = b0 + span * (np.arange(1, m + 1) - 0.5) / m
        vals = [f(t) for t in thetas]
        for (ta, fa), (tb, fb) in zip(zip(thetas, vals), zip(thetas[1:], vals[1:])):
            if fa is None or fb is None:
                continue
            found = None
            if abs(fa) <= target:
                found = ta
            elif (fa > 0) != (fb > 0):
                found = bisect(ta, tb, fa)
            if found is not None:
                roots.append(found)
                if not collect_all:
                    return roots
        if vals and vals[-1] is not None and abs(vals[-1]) <= target and collect_all:
            roots.append(float(thetas[-1]))
    return roots


def find_isosceles_cap(
    disc: ConvexDisc, alpha: float, tol: float = 1e-9, samples: int = 4096
) -> Cap:
    """Isosceles cap of the prescribed angle ``alpha`` in (0, pi).

    Scans cap axes between contact breakpoints, where the side difference is
    continuous, then bisects a bracketed sign change down to a residual of
    ``tol * diameter``.  Falls back to seeding near the largest-area cap, and
    raises ValueError("search failed") only if every strategy comes up empty.
    """
    if not (0.0 < alpha < np.pi):
        raise ValueError("cap angle must lie in (0, pi)")
    target = tol * disc.diameter
    breaks = _scan_breakpoints(disc, alpha)
    roots = _bracket_roots(disc, alpha, target, breaks, samples, collect_all=False)
    if not roots:
        roots = _bracket_roots(disc, alpha, target, breaks, 8 * samples, collect_all=False)
    if not roots:
        best = None
        for b0, b1 in zip(breaks, np.roll(breaks, -1)):
            if b1 <= b0:
                b1 += TWO_PI
            for t in np.linspace(b0, b1, 66)[1:-1]:
                try:
                    cap = axis_cap(disc, float(t), alpha)
                except ValueError:
                    continue
                area = cap_region_area(disc, cap)
                if best is None or area > best[0]:
                    best = (area, float(t))
        if best is not None:
            t0 = best[1]
            local = np.sort(np.concatenate([breaks, [t0 - 0.2, t0 + 0.2]]))
            lo = local[local < t0].max() if np.any(local < t0) else t0 - 0.2
            hi = local[local > t0].min() if np.any(local > t0) else t0 + 0.2
            roots = _bracket_roots(
                disc, alpha, target, np.array([lo, hi]), 64 * samples, collect_all=False
            )
    if not roots:
        raise ValueError("search failed")
    return axis_cap(disc, roots[0], alpha)


def find_all_isosceles_caps(
    disc: ConvexDisc, alpha: float, tol: float = 1e-9, samples: int = 4096
) -> list[Cap]:
    """All isosceles caps of angle ``alpha`` located by the bracketing scan."""
    target = tol * disc.diameter
    breaks = _scan_breakpoints(disc, alpha)
    roots = _bracket_roots(disc, alpha, target, breaks, samples, collect_all=True)
    return [axis_cap(disc, t, alpha) for t in roots]


def cap_grid(disc: ConvexDisc, n_axis: int = 211, n_alpha: int = 48,
             alpha_range: tuple[float, float] = (ALPHA_MIN, ALPHA_MAX)):
    """Deterministic grid of valid caps over axis direction and cap angle."""
    for alpha in np.linspace(alpha_range[0], alpha_range[1], n_alpha):
        for axis in np.arange(n_axis) * TWO_PI / n_axis:
            try:
                yield axis_cap(disc, float(axis), float(alpha))
            except ValueError:
                continue


def relative_side_difference(cap: Cap) -> float:
    return abs(cap.side1 - cap.side2) / (cap.side1 + cap.side2)


def find_non_isosceles_cap(
    disc: ConvexDisc,
    margin: float = 1e-3,
    n_axis: int = 211,
    n_alpha: int = 48,
    alpha_range: tuple[float, float] = (ALPHA_MIN, ALPHA_MAX),
) -> Cap | None:
    """Most lopsided cap found on the sampling grid, or None.

    Returns the cap maximizing the relative side difference when that maximum
    exceeds ``margin``; None means every sampled cap is isosceles to within
    ``margin``, the expected answer for (near-)circular discs.
    """
    best: Cap | None = None
    best_diff = -1.0
    for cap in cap_grid(disc, n_axis, n_alpha, alpha_range):
        diff = relative_side_difference(cap)
        if diff > best_diff:
            best, best_diff = cap, diff
    if best is not None and best_diff > margin:
        return best
    return None


def regular_polygon(m: int, radius: float = 1.0, center=(0.0, 0.0)) -> ConvexDisc:
    """Regular m-gon, the circle surrogate used throughout the tests."""
    ang = TWO_PI * np.arange(m) / m
    cx, cy = center
    pts = np.stack([cx + radius * np.cos(ang), cy + radius * np.sin(ang)], axis=1)
    return ConvexDisc(pts)
