"""Separating diagrams: one convex cell per packing disc, in three geometries.

Cells are built by clipping pairwise bisector half-spaces:

- Euclidean: least power, cells clipped to a bounding box;
- sphere: greatest spherical potential (the potential is largest at a disc's
  own center), cells are intersections of hemispheres;
- hyperbolic: least hyperbolic potential, cells built in the Klein model
  where geodesic half-planes are straight half-planes.

Every cell records all its half-space constraints together with the index of
the disc that induced each one (source -1 marks a domain constraint), which
lets the verifier check pairwise separation by matching complementary
constraints instead of re-deriving bisectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import euclidean as E
from . import hyperbolic as H
from . import spherical as S

ANG_TOL = 1e-9


# ---------------------------------------------------------------------------
# Cell records.
# ---------------------------------------------------------------------------


@dataclass
class PolygonCell:
    """Euclidean cell: half-plane constraints and a ccw vertex loop."""

    constraints: list[E.OrientedLine]
    sources: list[int]
    vertices: np.ndarray

    @property
    def is_empty(self) -> bool:
        return len(self.vertices) == 0


@dataclass
class SphericalCell:
    """Spherically convex cell: hemisphere normals plus boundary structure.

    ``kind`` is one of "sphere", "hemisphere", "polygon", "empty".  For a
    polygon (including the 2-vertex lune) ``vertices[i] -> vertices[i+1]``
    travels an arc of the great circle ``normals[edge_circles[i]]``, always in
    the positive sense around that circle's pole (cell on the left).
    """

    normals: list[np.ndarray]
    sources: list[int]
    kind: str
    vertices: np.ndarray = field(default_factory=lambda: np.empty((0, 3)))
    edge_circles: list[int] = field(default_factory=list)
    boundary_index: int = -1

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"


@dataclass
class HyperbolicCell:
    """Hyperbolic cell stored as its Klein-model polygon.

    ``klein_vertices`` is a ccw Euclidean loop; edges tagged with the index of
    the inducing constraint, or -1 for an artificial far-field edge (the cell
    is unbounded in that direction).  Constraint normals are Minkowski-unit
    spacelike vectors with the cell in {X : <X, n> <= 0}.
    """

    normals: list[np.ndarray]
    sources: list[int]
    klein_vertices: np.ndarray
    edge_tags: list[int]

    @property
    def is_empty(self) -> bool:
        return len(self.klein_vertices) == 0

    @property
    def unbounded(self) -> bool:
        if self.is_empty:
            return False
        radii = np.linalg.norm(self.klein_vertices, axis=1)
        return bool(np.any(radii >= 1.0 - 1e-12) or any(t < 0 for t in self.edge_tags))

    def finite_vertices(self) -> np.ndarray:
        """Hyperboloid coordinates of the cell's real geodesic vertices."""
        pts = [
            H.klein_to_hyperboloid(v)
            for v in self.klein_vertices
            if float(v @ v) < 1.0 - 1e-12
        ]
        return np.array(pts) if pts else np.empty((0, 3))

    def unbounded_directions(self) -> list[bool]:
        """Per-edge flag: edge escapes to the ideal boundary."""
        out = []
        k = len(self.klein_vertices)
        for i in range(k):
            a = self.klein_vertices[i]
            b = self.klein_vertices[(i + 1) % k]
            escapes = (
                self.edge_tags[i] < 0
                or float(a @ a) >= 1.0 - 1e-12
                or float(b @ b) >= 1.0 - 1e-12
            )
            out.append(bool(escapes))
        return out


@dataclass
class Tiling:
    """A diagram: one cell per disc, cells[k] owned by disc owners[k]."""

    geometry: str
    cells: list
    domain: dict
    owners: list[int]


# ---------------------------------------------------------------------------
# Euclidean power diagram.
# ---------------------------------------------------------------------------


def _pairwise_radical_lines(discs: list[E.Disc]):
    """All radical lines; entry (i, j) with i < j oriented toward disc i."""
    lines = {}
    for i in range(len(discs)):
        for j in range(i + 1, len(discs)):
            lines[(i, j)] = E.radical_line(discs[i], discs[j])
    return lines


def validate_euclidean_packing(discs: list[E.Disc], bbox=None) -> None:
    for i in range(len(discs)):
        for j in range(i + 1, len(discs)):
            gap = np.linalg.norm(discs[i].c - discs[j].c) - discs[i].r - discs[j].r
            if gap <= 0:
                raise ValueError(f"not a packing: discs {i} and {j} overlap")
    if bbox is not None:
        xmin, ymin, xmax, ymax = (float(v) for v in bbox)
        for i, d in enumerate(discs):
            if not (
                d.c[0] - d.r >= xmin
                and d.c[0] + d.r <= xmax
                and d.c[1] - d.r >= ymin
                and d.c[1] + d.r <= ymax
            ):
                raise ValueError(f"disc {i} not inside bounding box")


def build_power_diagram(discs: list[E.Disc], bbox) -> Tiling:
    """Least-power diagram of a Euclidean circle packing, clipped to ``bbox``.

    Each cell is bbox intersected with the power-majority half-planes against
    every other disc; it always contains its own disc.
    """
    validate_euclidean_packing(discs, bbox)
    lines = _pairwise_radical_lines(discs)
    cells = []
    for i, disc in enumerate(discs):
        constraints = list(E.box_lines(bbox))
        sources = [-1, -1, -1, -1]
        others = []
        for j in range(len(discs)):
            if j == i:
                continue
            line = lines[(i, j)] if i < j else lines[(j, i)].flipped()
            others.append((line.value(disc.c), line, j))
        others.sort(key=lambda t: t[0], reverse=True)
        verts = E.box_polygon(bbox)
        for _, line, j in others:
            constraints.append(line)
            sources.append(j)
            verts = E.clip_polygon(verts, line)
            if len(verts) == 0:
                raise AssertionError(f"cell {i} clipped to nothing; packing invalid?")
        cells.append(PolygonCell(constraints, sources, verts))
    bbox_f = [float(v) for v in bbox]
    return Tiling("euclidean", cells, {"bbox": bbox_f}, list(range(len(discs))))


def clip_cell_euclidean(cell: PolygonCell, line: E.OrientedLine, source: int = -1) -> PolygonCell:
    verts = E.clip_polygon(cell.vertices, line)
    return PolygonCell(cell.constraints + [line], cell.sources + [source], verts)


# ---------------------------------------------------------------------------
# Spherical diagram.
# ---------------------------------------------------------------------------


def _arc_angle(v, w, pole) -> float:
    """Positive angle from v to w around the circle with the given pole."""
    ang = float(np.arctan2(pole @ np.cross(v, w), v @ w))
    if ang <= 0.0:
        ang += 2.0 * np.pi
    return ang


def _arc_point(v, pole, theta: float) -> np.ndarray:
    t = np.cross(pole, v)
    return v * np.cos(theta) + t * np.sin(theta)


def _arc_plane_crossings(v, pole, span: float, n) -> list[float]:
    """Angles in (0, span) where the arc from v crosses the plane n.u = 0."""
    a = float(n @ v)
    b = float(n @ np.cross(pole, v))
    r = np.hypot(a, b)
    if r < 1e-15:
        return []
    phi = np.arctan2(b, a)
    out = []
    for base in (phi + np.pi / 2.0, phi - np.pi / 2.0):
        th = base % (2.0 * np.pi)
        for cand in (th, th - 2.0 * np.pi, th + 2.0 * np.pi):
            if ANG_TOL < cand < span - ANG_TOL:
                out.append(float(cand))
    return sorted(set(out))


def clip_cell_spherical(cell: SphericalCell, circle: S.GreatCircle, source: int = -1) -> SphericalCell:
    """Intersect a spherical cell with the hemisphere {u : n . u >= 0}."""
    n = circle.normal
    normals = cell.normals + [n]
    sources = cell.sources + [source]
    n_idx = len(normals) - 1

    if cell.kind == "empty":
        return SphericalCell(normals, sources, "empty")

    if cell.kind == "sphere":
        return SphericalCell(normals, sources, "hemisphere", boundary_index=n_idx)

    if cell.kind == "hemisphere":
        m = cell.normals[cell.boundary_index]
        d = float(m @ n)
        if d >= 1.0 - 1e-12:
            return SphericalCell(
                normals, sources, "hemisphere", boundary_index=cell.boundary_index
            )
        if d <= -1.0 + 1e-12:
            return SphericalCell(normals, sources, "empty")
        w = S.unit3(np.cross(m, n))
        verts = np.array([-w, w])
        return SphericalCell(
            normals, sources, "polygon", verts, [cell.boundary_index, n_idx]
        )

    # polygon: subdivide every edge at its crossings with the new circle,
    # classify sub-arcs by their midpoints, and close gaps with arcs on n.
    verts = cell.vertices
    k = len(verts)
    pts: list[np.ndarray] = []
    circs: list[int] = []
    for i in range(k):
        v, w = verts[i], verts[(i + 1) % k]
        ci = cell.edge_circles[i]
        pole = cell.normals[ci]
        span = _arc_angle(v, w, pole)
        pts.append(v)
        circs.append(ci)
        for th in _arc_plane_crossings(v, pole, span, n):
            pts.append(_arc_point(v, pole, th))
            circs.append(ci)

    m2 = len(pts)
    keep = []
    for j in range(m2):
        p, q = pts[j], pts[(j + 1) % m2]
        pole = normals[circs[j]]
        span = _arc_angle(p, q, pole)
        mid = _arc_point(p, pole, span / 2.0)
        keep.append(float(n @ mid) >= 0.0)

    if all(keep):
        return SphericalCell(
            normals, sources, "polygon", verts.copy(), list(cell.edge_circles)
        )
    if not any(keep):
        return SphericalCell(normals, sources, "empty")

    new_pts: list[np.ndarray] = []
    new_circs: list[int] = []
    for j in range(m2):
        if keep[j]:
            new_pts.append(pts[j])
            new_circs.append(circs[j])
        elif keep[j - 1]:
            # exit crossing: the boundary continues along the new circle
            new_pts.append(pts[j])
            new_circs.append(n_idx)

    # merge consecutive near-identical points
    cleaned_pts: list[np.ndarray] = []
    cleaned_circs: list[int] = []
    for p, c in zip(new_pts, new_circs):
        if cleaned_pts and S.angular_distance(p, cleaned_pts[-1]) < ANG_TOL:
            cleaned_circs[-1] = c
            continue
        cleaned_pts.append(p)
        cleaned_circs.append(c)
    while (
        len(cleaned_pts) >= 2
        and S.angular_distance(cleaned_pts[0], cleaned_pts[-1]) < ANG_TOL
    ):
        cleaned_pts.pop(0)
        cleaned_circs.pop(0)

    if len(cleaned_pts) < 2:
        return SphericalCell(normals, sources, "empty")
    return SphericalCell(
        normals, sources, "polygon", np.array(cleaned_pts), cleaned_circs
    )


def validate_spherical_packing(discs: list[S.Disc]) -> None:
    for i in range(len(discs)):
        for j in range(i + 1, len(discs)):
            gap = S.angular_distance(discs[i].c, discs[j].c) - discs[i].r - discs[j].r
            if gap <= 0:
                raise ValueError(f"not a packing: discs {i} and {j} overlap")


def build_spherical_diagram(discs: list[S.Disc]) -> Tiling:
    """Greatest-potential diagram of a spherical cap packing.

    Needs at least two caps: a single cap admits no one-cell partition of the
    sphere by great-circle polygons.
    """
    if len(discs) < 2:
        raise ValueError("no partition for a single cap on the sphere")
    validate_spherical_packing(discs)
    circles = {}
    for i in range(len(discs)):
        for j in range(i + 1, len(discs)):
            circles[(i, j)] = S.bisector(discs[i], discs[j])
    cells = []
    for i, disc in enumerate(discs):
        cell = SphericalCell([], [], "sphere")
        others = []
        for j in range(len(discs)):
            if j == i:
                continue
            circ = circles[(i, j)] if i < j else circles[(j, i)].flipped()
            others.append((float(circ.normal @ disc.c), circ, j))
        others.sort(key=lambda t: t[0])
        for _, circ, j in others:
            cell = clip_cell_spherical(cell, circ, source=j)
            if cell.is_empty:
                raise AssertionError(f"cell {i} clipped to nothing; packing invalid?")
        cells.append(cell)
    return Tiling("sphere", cells, {"sphere": True}, list(range(len(discs))))


# ---------------------------------------------------------------------------
# Hyperbolic diagram (Klein model internally).
# ---------------------------------------------------------------------------

_SEED_EXTENT = 1.5


def _seed_klein_polygon():
    s = _SEED_EXTENT
    verts = np.array([[-s, -s], [s, -s], [s, s], [-s, s]])
    tags = [-1, -1, -1, -1]
    return verts, tags


def _clip_tagged(verts, tags, a, c, new_tag, tol=1e-14):
    """Clip a tagged ccw polygon by {k : a . k <= c}; tags follow edges."""
    if len(verts) == 0:
        return verts, tags
    vals = verts @ a - c
    if np.all(vals <= tol):
        return verts, tags
    if np.all(vals >= -tol):
        return np.empty((0, 2)), []
    out_pts: list[np.ndarray] = []
    out_tags: list[int] = []
    k = len(verts)
    for i in range(k):
        p, q = verts[i], verts[(i + 1) % k]
        fp, fq = vals[i], vals[(i + 1) % k]
        tag = tags[i]
        if fp <= tol:
            out_pts.append(p)
            out_tags.append(tag)
        if (fp < -tol and fq > tol) or (fp > tol and fq < -tol):
            t = fp / (fp - fq)
            x = p + t * (q - p)
            # leaving: the boundary continues along the new line; entering:
            # the crossing starts the kept part of this edge
            out_pts.append(x)
            out_tags.append(new_tag if fp < fq else tag)
    cleaned_p: list[np.ndarray] = []
    cleaned_t: list[int] = []
    for p, t in zip(out_pts, out_tags):
        if cleaned_p and np.linalg.norm(p - cleaned_p[-1]) <= 1e-13:
            cleaned_t[-1] = t
            continue
        cleaned_p.append(p)
        cleaned_t.append(t)
    while len(cleaned_p) >= 2 and np.linalg.norm(cleaned_p[0] - cleaned_p[-1]) <= 1e-13:
        cleaned_p.pop(0)
        cleaned_t.pop(0)
    if len(cleaned_p) < 3:
        return np.empty((0, 2)), []
    return np.array(cleaned_p), cleaned_t


def clip_cell_hyperbolic(cell: HyperbolicCell, geo: H.Geodesic, source: int = -1) -> HyperbolicCell:
    """Intersect a hyperbolic cell with the half-plane {X : <X, n> <= 0}."""
    n = geo.normal
    normals = cell.normals + [n]
    sources = cell.sources + [source]
    idx = len(normals) - 1
    a = np.array([n[1], n[2]])
    c = float(n[0])
    verts, tags = _clip_tagged(cell.klein_vertices, cell.edge_tags, a, c, idx)
    return HyperbolicCell(normals, sources, verts, tags)


def validate_hyperbolic_packing(discs: list[H.Disc]) -> None:
    for i in range(len(discs)):
        for j in range(i + 1, len(discs)):
            gap = H.distance(discs[i].c, discs[j].c) - discs[i].r - discs[j].r
            if gap <= 0:
                raise ValueError(f"not a packing: discs {i} and {j} overlap")


def default_clip_radius(discs: list[H.Disc]) -> float:
    """Clipping radius covering the packing: max center distance + max radius + 2."""
    dmax = max((H.distance(H.ORIGIN, d.c) for d in discs), default=0.0)
    rmax = max((d.r for d in discs), default=0.0)
    return dmax + rmax + 2.0


def build_hyperbolic_diagram(discs: list[H.Disc], clip_radius: float | None = None) -> Tiling:
    """Least-potential diagram of a hyperbolic disc packing.

    Cells are stored unclipped (their constraint lists are exact); the clip
    radius recorded in the domain is used only for areas and rendering.
    """
    validate_hyperbolic_packing(discs)
    geos = {}
    for i in range(len(discs)):
        for j in range(i + 1, len(discs)):
            geos[(i, j)] = H.bisector(discs[i], discs[j])
    cells = []
    for i, disc in enumerate(discs):
        verts, tags = _seed_klein_polygon()
        cell = HyperbolicCell([], [], verts, tags)
        others = []
        for j in range(len(discs)):
            if j == i:
                continue
            geo = geos[(i, j)] if i < j else geos[(j, i)].flipped()
            others.append((geo.value(disc.c), geo, j))
        others.sort(key=lambda t: t[0], reverse=True)
        for _, geo, j in others:
            cell = clip_cell_hyperbolic(cell, geo, source=j)
            if cell.is_empty:
                raise AssertionError(f"cell {i} clipped to nothing; packing invalid?")
        cells.append(cell)
    radius = float(clip_radius) if clip_radius is not None else default_clip_radius(discs)
    return Tiling("hyperbolic", cells, {"clip_radius": radius}, list(range(len(discs))))


def clip_cell(cell, boundary, source: int = -1):
    """Geometry dispatch for the one-constraint clipping step."""
    if isinstance(cell, PolygonCell):
        return clip_cell_euclidean(cell, boundary, source)
    if isinstance(cell, SphericalCell):
        return clip_cell_spherical(cell, boundary, source)
    if isinstance(cell, HyperbolicCell):
        return clip_cell_hyperbolic(cell, boundary, source)
    raise TypeError(f"unknown cell type {type(cell)!r}")


# ---------------------------------------------------------------------------
# Cell areas.
# ---------------------------------------------------------------------------


def cell_area_euclidean(cell: PolygonCell) -> float:
    return E.polygon_area(cell.vertices)


def cell_area_spherical(cell: SphericalCell) -> float:
    """Area by angle excess: 2*pi minus the total boundary turning."""
    if cell.kind == "empty":
        return 0.0
    if cell.kind == "sphere":
        return 4.0 * np.pi
    if cell.kind == "hemisphere":
        return 2.0 * np.pi
    verts = cell.vertices
    k = len(verts)
    turn = 0.0
    for i in range(k):
        v = verts[i]
        c_in = cell.normals[cell.edge_circles[(i - 1) % k]]
        c_out = cell.normals[cell.edge_circles[i]]
        t_in = np.cross(c_in, v)
        t_out = np.cross(c_out, v)
        t_in = t_in / np.linalg.norm(t_in)
        t_out = t_out / np.linalg.norm(t_out)
        interior = np.arccos(np.clip(-t_in @ t_out, -1.0, 1.0))
        turn += np.pi - interior
    return float(2.0 * np.pi - turn)


def _polygon_circle_pieces(verts: np.ndarray, rho: float):
    """Boundary of (convex ccw polygon) intersect (origin disc of radius rho).

    Returns a cyclic list of pieces: ("seg", p, q) straight chords and
    ("arc", psi1, psi2) ccw circle arcs (psi2 > psi1 after unwrapping).
    Empty list means empty intersection; a single full arc means the circle
    lies inside the polygon.
    """
    k = len(verts)
    if k == 0:
        return []
    rsq = rho * rho
    inside = [float(v @ v) <= rsq for v in verts]

    chains: list[list[np.ndarray]] = []
    current: list[np.ndarray] | None = None
    crossings_seen = False

    def edge_pieces(p, q):
        d = q - p
        aa = float(d @ d)
        if aa < 1e-30:
            return []
        bb = 2.0 * float(p @ d)
        cc = float(p @ p) - rsq
        disc = bb * bb - 4.0 * aa * cc
        if disc <= 0:
            return []
        sq = np.sqrt(disc)
        t1 = (-bb - sq) / (2.0 * aa)
        t2 = (-bb + sq) / (2.0 * aa)
        return [t for t in (t1, t2) if 1e-12 < t < 1.0 - 1e-12]

    # walk the polygon, recording kept (inside) sub-segments in order
    events: list[tuple[np.ndarray, bool]] = []  # (point, is_circle_crossing)
    for i in range(k):
        p, q = verts[i], verts[(i + 1) % k]
        events.append((p, False))
        for t in edge_pieces(p, q):
            events.append((p + t * (q - p), True))
            crossings_seen = True

    m = len(events)
    kept = []
    for j in range(m):
        a = events[j][0]
        b = events[(j + 1) % m][0]
        mid = 0.5 * (a + b)
        kept.append(float(mid @ mid) <= rsq)

    if not crossings_seen:
        if all(inside):
            return [("seg", verts[i], verts[(i + 1) % k]) for i in range(k)]
        if E.point_in_convex((0.0, 0.0), verts) and all(
            not flag for flag in inside
        ):
            return [("arc", 0.0, 2.0 * np.pi)]
        return []

    # assemble kept chains of boundary points
    pieces = []
    start = None
    for j in range(m):
        if kept[j] and not kept[j - 1]:
            start = j
            break
    if start is None:
        return []
    chain: list[np.ndarray] = [events[start][0]]
    gaps: list[tuple[np.ndarray, np.ndarray]] = []
    chain_list: list[list[np.ndarray]] = []
    j = start
    for _ in range(m):
        nxt = (j + 1) % m
        if kept[j]:
            chain.append(events[nxt][0])
        if kept[j] and not kept[nxt]:
            chain_list.append(chain)
        if not kept[j] and kept[nxt]:
            chain = [events[nxt][0]]
        j = nxt
    # connect chains with ccw arcs
    for idx, ch in enumerate(chain_list):
        for a, b in zip(ch[:-1], ch[1:]):
            if np.linalg.norm(b - a) > 1e-13:
                pieces.append(("seg", a, b))
        end = ch[-1]
        nxt_start = chain_list[(idx + 1) % len(chain_list)][0]
        psi1 = float(np.arctan2(end[1], end[0]))
        psi2 = float(np.arctan2(nxt_start[1], nxt_start[0]))
        while psi2 <= psi1 + 1e-14:
            psi2 += 2.0 * np.pi
        pieces.append(("arc", psi1, psi2))
    return pieces


def _hyperbolic_pieces_area(pieces, clip_radius: float) -> float:
    """Gauss-Bonnet area of a convex region bounded by geodesics and arcs of
    the clip circle (in Klein coordinates around the origin)."""
    if not pieces:
        return 0.0
    if len(pieces) == 1 and pieces[0][0] == "arc":
        return float(2.0 * np.pi * (np.cosh(clip_radius) - 1.0))

    coshR = np.cosh(clip_radius)
    sinhR = np.sinh(clip_radius)

    def lift(kpt):
        s = float(kpt @ kpt)
        if s >= 1.0:
            raise ValueError("clip region reaches the ideal boundary")
        w = 1.0 / np.sqrt(1.0 - s)
        return np.array([w, w * kpt[0], w * kpt[1]])

    def circle_point(psi):
        return np.array([coshR, sinhR * np.cos(psi), sinhR * np.sin(psi)])

    def circle_tangent(psi):
        return np.array([0.0, -np.sin(psi), np.cos(psi)])

    def endpoints(piece):
        kind = piece[0]
        if kind == "seg":
            return lift(piece[1]), lift(piece[2])
        return circle_point(piece[1]), circle_point(piece[2])

    def depart_tangent(piece, x_start, x_end):
        if piece[0] == "seg":
            return H.tangent_toward(x_start, x_end)
        return circle_tangent(piece[1])

    def arrive_tangent(piece, x_start, x_end):
        if piece[0] == "seg":
            return -H.tangent_toward(x_end, x_start)
        return circle_tangent(piece[2])

    n = len(pieces)
    pts = [endpoints(p) for p in pieces]
    turn = 0.0
    arc_sum = 0.0
    for i, piece in enumerate(pieces):
        if piece[0] == "arc":
            arc_sum += piece[2] - piece[1]
        x_in_s, x_in_e = pts[i]
        nxt = pieces[(i + 1) % n]
        x_out_s, x_out_e = pts[(i + 1) % n]
        t_in = arrive_tangent(piece, x_in_s, x_in_e)
        t_out = depart_tangent(nxt, x_out_s, x_out_e)
        cosang = -H.mdot(t_in, t_out)
        interior = np.arccos(np.clip(cosang, -1.0, 1.0))
        turn += np.pi - interior
    return float(turn + coshR * arc_sum - 2.0 * np.pi)


def cell_area_hyperbolic(cell: HyperbolicCell, clip_radius: float | None) -> float:
    """Area of the cell, clipped at a hyperbolic circle around the origin.

    A bounded cell is measured exactly by its angle deficit; an unbounded cell
    requires a clip radius.
    """
    if cell.is_empty:
        return 0.0
    if clip_radius is None:
        if cell.unbounded:
            raise ValueError("unbounded")
        clip_radius = np.arccosh(
            1.0
            / np.sqrt(
                max(
                    1e-300,
                    1.0 - float(np.max(np.sum(cell.klein_vertices**2, axis=1))),
                )
            )
        ) + 1.0
    rho = np.tanh(clip_radius)
    pieces = _polygon_circle_pieces(cell.klein_vertices, rho)
    return _hyperbolic_pieces_area(pieces, clip_radius)


def cell_area(cell, clip_radius: float | None = None) -> float:
    if isinstance(cell, PolygonCell):
        return cell_area_euclidean(cell)
    if isinstance(cell, SphericalCell):
        return cell_area_spherical(cell)
    if isinstance(cell, HyperbolicCell):
        return cell_area_hyperbolic(cell, clip_radius)
    raise TypeError(f"unknown cell type {type(cell)!r}")


# ---------------------------------------------------------------------------
# Verification.
# ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    ok: bool
    failures: list[str]

    @property
    def first_violation(self) -> str | None:
        return self.failures[0] if self.failures else None


def _euclidean_cell_contains_disc(cell: PolygonCell, disc: E.Disc, tol: float) -> bool:
    return all(line.value(disc.c) <= -disc.r + tol for line in cell.constraints)


def _spherical_cell_contains_disc(cell: SphericalCell, disc: S.Disc, tol: float) -> bool:
    return all(
        float(n @ disc.c) >= np.sin(disc.r) - tol for n in cell.normals
    )


def _hyperbolic_cell_contains_disc(cell: HyperbolicCell, disc: H.Disc, tol: float) -> bool:
    return all(H.mdot(disc.c, n) <= -np.sinh(disc.r) + tol for n in cell.normals)


def _complementary(c1, c2, geometry: str, tol: float = 1e-9) -> bool:
    if geometry == "euclidean":
        return (
            np.linalg.norm(c1.normal + c2.normal) <= tol
            and abs(c1.offset + c2.offset) <= tol
        )
    return np.linalg.norm(np.asarray(c1) + np.asarray(c2)) <= tol


def verify_separating_tiling(discs, tiling: Tiling, tol: float = 1e-9) -> VerifyReport:
    """Check that a tiling separates the packing.

    Verifies cardinality, per-cell convexity and constraint/vertex agreement,
    pairwise interior disjointness through complementary constraints, domain
    coverage by area, and that each cell contains exactly its own disc.
    """
    failures: list[str] = []
    geometry = tiling.geometry
    n = len(discs)
    if len(tiling.cells) != n:
        return VerifyReport(False, [f"expected {n} cells, found {len(tiling.cells)}"])
    if sorted(tiling.owners) != list(range(n)):
        return VerifyReport(False, ["owners are not a bijection onto discs"])

    cell_of = [None] * n
    for cell, owner in zip(tiling.cells, tiling.owners):
        cell_of[owner] = cell

    # (a) constraint/vertex consistency and convexity
    for i, cell in enumerate(cell_of):
        if geometry == "euclidean":
            for v in cell.vertices:
                worst = max(line.value(v) for line in cell.constraints)
                if worst > tol:
                    failures.append(f"cell {i}: vertex violates a constraint by {worst:g}")
                    break
            if E.polygon_area(cell.vertices) <= 0:
                failures.append(f"cell {i}: vertex loop is not counterclockwise")
        elif geometry == "sphere":
            if cell.kind == "polygon":
                for v in cell.vertices:
                    worst = min(float(np.asarray(m) @ v) for m in cell.normals)
                    if worst < -tol:
                        failures.append(
                            f"cell {i}: vertex violates a constraint by {-worst:g}"
                        )
                        break
        else:
            for v in cell.finite_vertices():
                worst = max(H.mdot(v, m) for m in cell.normals)
                if worst > tol:
                    failures.append(f"cell {i}: vertex violates a constraint by {worst:g}")
                    break

    # (b) pairwise separation via complementary constraints
    for i in range(n):
        ci = cell_of[i]
        src_i = ci.sources
        cons_i = ci.constraints if geometry == "euclidean" else ci.normals
        for j in range(i + 1, n):
            cj = cell_of[j]
            cons_j = cj.constraints if geometry == "euclidean" else cj.normals
            try:
                ki = src_i.index(j)
                kj = cj.sources.index(i)
            except ValueError:
                ki = kj = -1
            found = False
            if ki >= 0 and kj >= 0:
                found = _complementary(cons_i[ki], cons_j[kj], geometry)
            if not found:
                found = any(
                    _complementary(a, b, geometry) for a in cons_i for b in cons_j
                )
            if not found:
                failures.append(f"cells {i} and {j}: no complementary separating constraint")

    # (c) domain coverage
    if geometry == "euclidean":
        total = sum(cell_area_euclidean(c) for c in cell_of)
        bbox = tiling.domain["bbox"]
        expected = (bbox[2] - bbox[0]) * (bbox[3] - bbox[1])
    elif geometry == "sphere":
        total = sum(cell_area_spherical(c) for c in cell_of)
        expected = 4.0 * np.pi
    else:
        radius = tiling.domain["clip_radius"]
        total = sum(cell_area_hyperbolic(c, radius) for c in cell_of)
        expected = 2.0 * np.pi * (np.cosh(radius) - 1.0)
    if abs(total - expected) > 1e-6 * max(expected, 1.0):
        failures.append(
            f"coverage: cell areas sum to {total:.12g}, domain measures {expected:.12g}"
        )

    # (d) each cell contains its own disc, and only its own
    contains = {
        "euclidean": _euclidean_cell_contains_disc,
        "sphere": _spherical_cell_contains_disc,
        "hyperbolic": _hyperbolic_cell_contains_disc,
    }[geometry]
    for i in range(n):
        if not contains(cell_of[i], discs[i], tol):
            failures.append(f"cell {i} does not contain its disc")
    for i in range(n):
        count = sum(1 for j in range(n) if contains(cell_of[i], discs[j], tol))
        if count > 1:
            failures.append(f"cell {i} contains {count} discs")

    return VerifyReport(not failures, failures)
