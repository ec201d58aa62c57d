"""Non-separable packings of a non-circular convex disc, with certification.

The arrangement: a small ring polygon with n exterior angles alpha and one
exterior angle beta (n*alpha + beta = 2*pi), sides shorter than a clearance
epsilon below the cap's side-length gap.  A congruent copy of the disc sits
at every alpha vertex, its lopsided tangent cap's apex on the vertex, the
long side lying along the extension of the incoming ring edge and the short
side along the outgoing edge; one scaled copy with an isosceles beta cap
fills the remaining beta wedge.  Consecutive copies then touch a shared edge
line from opposite sides, with the short contact of one landing strictly
between the ring edge and the long contact of the other, so a line
separating the pair cannot clear the ring polygon.

``certify_nonseparable`` checks exactly that: per consecutive pair, two
max-margin linear programs look for a line strictly separating one disc from
the other disc together with the ring; pass means both are infeasible for
every pair.  The certificate establishes the stated pairwise obstruction; it
does not by itself constitute a machine proof that no separating polygonal
tiling exists, which needs the accompanying convexity argument.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .caps import (
    Cap,
    ConvexDisc,
    cap_from_normals,
    cap_grid,
    find_all_isosceles_caps,
    relative_side_difference,
)
from .euclidean import polygon_separation

TWO_PI = 2.0 * np.pi

BETA_MIN = 1e-3
MAX_COPIES = 60

# Ring sides sit close below epsilon: the ring must be fat enough that a
# near-grazing line escaping over it is caught, while every side stays
# strictly shorter than epsilon.
SIDE_FRACTION = 0.85
SIDE_BOUNDS = (0.6, 0.98)


@dataclass(frozen=True)
class ConstructionParams:
    """Everything needed to rebuild the arrangement deterministically."""

    disc: ConvexDisc          # oriented base disc (may be a mirror image of the input)
    mirrored: bool
    cap: Cap                  # lopsided cap, contact1 is the long side
    alpha: float
    n: int
    beta: float
    epsilon: float
    scale: float
    beta_disc: ConvexDisc     # base disc for the scaled copy (may be mirrored)
    beta_mirrored: bool
    beta_cap: Cap             # isosceles beta cap of beta_disc (unscaled)
    side_target: float        # ring side length the solver aims for
    side_lo: float            # ring side bounds (both strictly below epsilon)
    side_hi: float


@dataclass(frozen=True)
class RingPolygon:
    """The small (n+1)-gon the copies are arranged around.

    ``vertices[0]`` carries the beta exterior angle; edge k runs from vertex
    k to vertex k+1.  ``exterior_angles`` lists the turn after each edge in
    order: n copies of alpha, then beta.
    """

    vertices: np.ndarray
    exterior_angles: np.ndarray
    side_lengths: np.ndarray


@dataclass(frozen=True)
class PlacedDisc:
    """A similar copy: scale, rotation and translation applied to a base polygon."""

    vertices: np.ndarray
    rotation: float
    translation: np.ndarray
    scale: float
    mirrored: bool


def _rot(t: float) -> np.ndarray:
    c, s = np.cos(t), np.sin(t)
    return np.array([[c, -s], [s, c]])


def _mirror_disc(disc: ConvexDisc) -> ConvexDisc:
    return ConvexDisc(disc.vertices * np.array([1.0, -1.0]))


def _mirror_cap(cap: Cap) -> Cap:
    m = np.array([1.0, -1.0])
    return Cap(cap.apex * m, cap.contact1 * m, cap.contact2 * m,
               cap.side1, cap.side2, cap.angle, -cap.normal1, -cap.normal2)


def _long_first(cap: Cap) -> Cap:
    if cap.side1 >= cap.side2:
        return cap
    return Cap(cap.apex, cap.contact2, cap.contact1, cap.side2, cap.side1,
               cap.angle, cap.normal2, cap.normal1)


def _signed_wedge(cap: Cap) -> float:
    """Sign of the turn from the contact1 ray to the contact2 ray."""
    r1 = cap.contact1 - cap.apex
    r2 = cap.contact2 - cap.apex
    return float(np.sign(r1[0] * r2[1] - r1[1] * r2[0]))


def _orient(disc: ConvexDisc, cap: Cap) -> tuple[ConvexDisc, Cap, bool]:
    """Mirror the pair if needed so the contact1 -> contact2 turn is ccw."""
    if _signed_wedge(cap) >= 0:
        return disc, cap, False
    return _mirror_disc(disc), _mirror_cap(cap), True


def grazing_geometry(disc: ConvexDisc, cap: Cap) -> tuple[float, float] | None:
    """(angle, edge length) of the boundary edge leaving the long contact back
    toward the apex.

    The angle is the slope at which a placed copy's underside rises off the
    shared ring-edge line and the length is how far back it reaches; together
    they bound the room a separating line has to escape over the ring.  None
    when no boundary edge heads back toward the apex.
    """
    v = disc.vertices
    k = len(v)
    d2 = ((v - cap.contact1) ** 2).sum(-1)
    i = int(np.argmin(d2))
    if d2[i] > (1e-9 * max(1.0, disc.diameter)) ** 2:
        return None
    u = (cap.contact1 - cap.apex) / cap.side1
    best = None
    for w in (v[(i - 1) % k], v[(i + 1) % k]):
        d = w - v[i]
        length = float(np.linalg.norm(d))
        d = d / length
        along = float(d @ u)
        if along < -1e-12:
            gamma = float(np.arccos(np.clip(-along, -1.0, 1.0)))
            if best is None or gamma < best[0]:
                best = (gamma, length)
    return best


def grazing_angle(disc: ConvexDisc, cap: Cap) -> float | None:
    geom = grazing_geometry(disc, cap)
    return None if geom is None else geom[0]


def _capture_score(cap: Cap, gamma: float | None) -> float:
    if gamma is None or gamma <= 0:
        return -np.inf
    gap = cap.side1 - cap.side2
    return gap / (cap.angle * cap.side2 * np.tan(min(gamma, np.pi / 2 - 1e-6)))


def _generic_caps(disc: ConvexDisc, margin: float) -> list[Cap]:
    """Lopsided caps from the plain sampling grid, most lopsided first."""
    out = []
    for cap in cap_grid(disc, n_axis=97, n_alpha=24):
        cap = _long_first(cap)
        if relative_side_difference(cap) > margin:
            out.append(cap)
    out.sort(key=lambda c: (-relative_side_difference(c), c.normal1, c.normal2))
    return out


def _edge_hugging_caps(disc: ConvexDisc, alpha: float) -> list[Cap]:
    """Caps of exactly angle ``alpha`` whose long tangent hugs a polygon edge.

    A tangent normal just off an edge normal makes the copy's underside rise
    off the shared ring line at the offset angle only, which is what lets the
    ring block every escape route for a separating line.
    """
    caps = []
    for nu in disc.edge_normal_angles():
        for sgn in (1.0, -1.0):
            for off in (0.01, 0.02, 0.035, 0.06, 0.1, 0.16):
                try:
                    cap = cap_from_normals(
                        disc, nu + sgn * off, nu + sgn * off - sgn * (np.pi - alpha)
                    )
                except ValueError:
                    continue
                caps.append(_long_first(cap))
    return caps


def _beta_cap_options(disc: ConvexDisc, beta: float, samples: int = 2048):
    """Isosceles beta caps in both labelings (mirroring when handedness asks).

    Sorted by the grazing angle of the contact that will face the ring, since
    that contact takes part in the same pinning as the congruent copies.
    """
    options = []
    for cap in find_all_isosceles_caps(disc, beta, samples=samples):
        swapped = Cap(cap.apex, cap.contact2, cap.contact1, cap.side2, cap.side1,
                      cap.angle, cap.normal2, cap.normal1)
        for labeled in (cap, swapped):
            b_disc, b_cap, b_mir = _orient(disc, labeled)
            geom = grazing_geometry(b_disc, b_cap)
            if geom is None:
                continue
            options.append((geom, b_disc, b_cap, b_mir))
    options.sort(key=lambda t: t[0][0])
    return options


def _survey_betas(disc: ConvexDisc, n_grid: int = 30) -> list[tuple[float, float]]:
    """(grazing angle, beta) per sampled beta, shallowest grazing first."""
    out = []
    for beta in np.linspace(0.3, np.pi - 0.3, n_grid):
        options = _beta_cap_options(disc, float(beta), samples=512)
        if options:
            out.append((options[0][0][0], float(beta)))
    out.sort()
    return out


def _ring_shape(alpha: float, n: int):
    """Unit-scale ring geometry from the minimum-norm closed side vector.

    Returns (sides, per-edge (height, x_top)) where ``height`` is how far the
    ring rises over each edge's line and ``x_top`` the along-edge coordinate
    of that highest vertex, measured from the edge's start vertex.  The same
    side vector, rescaled, is what ``build_ring_polygon`` produces.  None
    when the closure correction forces non-positive sides.
    """
    headings = np.arange(n + 1) * alpha
    dirs = np.stack([np.cos(headings), np.sin(headings)], axis=1)
    a_mat = dirs.T
    s0 = np.ones(n + 1)
    sides = s0 - a_mat.T @ np.linalg.solve(a_mat @ a_mat.T, a_mat @ s0)
    if np.any(sides <= 1e-3):
        return None
    verts = np.zeros((n + 1, 2))
    for k in range(n):
        verts[k + 1] = verts[k] + sides[k] * dirs[k]
    edge_stats = []
    for k in range(n + 1):
        start = verts[k]
        d = dirs[k]
        perp = np.array([-d[1], d[0]])  # ring interior side
        rel = verts - start
        heights = rel @ perp
        tops = rel @ d
        imax = int(np.argmax(heights))
        edge_stats.append((float(heights[imax]), float(tops[imax])))
    return sides, edge_stats


def _capture_margin(a: float, b: float, gamma: float, reach: float,
                    height: float, x_top: float, edge_len: float) -> float:
    """Clearance with which a copy's underside chain dips into the hull of
    (facing disc together with ring).

    Frame: the shared ring edge line with the ring's start vertex at the
    origin and the edge spanning [0, edge_len]; the facing disc touches from
    below at ``a``, the dipping copy from above at ``b``, its boundary
    rising at angle ``gamma`` over a horizontal distance ``reach``; the ring
    rises to ``height`` at along-edge coordinate ``x_top``.  The hull of the
    facing disc with the ring contains the chords from the ring's top vertex
    to both edge endpoints and to the below contact (a, 0); captured means
    some chain point falls strictly below one of those chords (or the
    dipper's own contact lands before the below contact).
    """
    if a <= 0 or reach <= 0 or height <= 0:
        return -np.inf
    if b < a:
        return a - b  # the dipper's tangency already sits inside the hull
    slope = np.tan(gamma)

    def hull_est(x: float) -> float:
        best = 0.0 if 0.0 <= x <= max(a, edge_len) else -np.inf
        if x_top > 0 and 0.0 <= x <= x_top:
            best = max(best, height * x / x_top)
        if a > x_top and x_top <= x <= a:
            best = max(best, height * (a - x) / (a - x_top))
        if edge_len > x_top and x_top <= x <= edge_len:
            best = max(best, height * (edge_len - x) / (edge_len - x_top))
        return best

    lo = max(b - reach, min(x_top, 0.0))
    hi = min(b, max(a, edge_len))
    if hi <= lo:
        return -np.inf
    best = -np.inf
    for x in np.linspace(lo, hi, 32):
        best = max(best, hull_est(x) - slope * (b - x))
    return best


def _sizing(cap: Cap, n: int, eps: float, reach_main: tuple[float, float],
            scaled: tuple[float, float, float, float]):
    """Pick the ring scale maximizing the worst capture margin.

    ``reach_main``: (grazing angle, edge length) at the congruent copies'
    long contact; ``scaled``: (grazing angle, scaled edge length, delta,
    scaled cap side).  Margins are evaluated per pair type against the true
    ring shape: congruent-congruent (worst edge), last copy against the
    scaled one (its incoming edge), scaled against the first copy.  Returns
    (score, side_target) or None when no scale captures all three.
    """
    gamma_m, len_m = reach_main
    gamma_s, len_s, delta, side_sc = scaled
    ep, fp = cap.side1, cap.side2
    reach_m = len_m * np.cos(gamma_m)
    reach_s = len_s * np.cos(gamma_s)
    shape = _ring_shape(cap.angle, n)
    if shape is None:
        return None
    sides_u, stats = shape
    smax = float(sides_u.max())
    best = None
    for lam in np.linspace(0.03, 0.97, 32) * eps / smax:
        m = np.inf
        for k in range(1, n):
            h, xt = stats[k]
            m = min(m, _capture_margin(
                fp, lam * sides_u[k] + ep, gamma_m, reach_m,
                lam * h, lam * xt, lam * sides_u[k]))
        h, xt = stats[n]
        m = min(m, _capture_margin(
            fp, lam * sides_u[n] + side_sc, gamma_s, reach_s,
            lam * h, lam * xt, lam * sides_u[n]))
        h, xt = stats[0]
        m = min(m, _capture_margin(
            side_sc, lam * sides_u[0] + ep, gamma_m, reach_m,
            lam * h, lam * xt, lam * sides_u[0]))
        if best is None or m > best[0]:
            best = (m, lam)
    if best is None or best[0] <= 0:
        return None
    margin, lam = best
    lo = 0.5 * lam * float(sides_u.min())
    hi = min(0.98 * eps, 1.05 * lam * smax)
    return margin / max(eps, 1e-12), lam, lo, hi


def _params_from_cap(disc: ConvexDisc, raw_cap: Cap, beta_cache: dict,
                     ) -> list[tuple[float, ConstructionParams]]:
    """Scored parameter sets for one candidate cap.

    The scaled copy must reach back over its own contact far enough to pin
    its two ring edges the way the congruent copies do, which couples the
    ring side length, the overshoot of the scaled cap's side beyond the short
    side, and the scaled copy's grazing geometry.  Parameter sets that leave
    no room are dropped; the rest carry a pessimistic capture margin used
    for ranking.  Certification remains the deciding test.
    """
    cap = _long_first(raw_cap)
    alpha = cap.angle
    n = int(np.floor(TWO_PI / alpha))
    beta = TWO_PI - n * alpha
    if beta <= BETA_MIN or n > MAX_COPIES:
        return []
    eps = (cap.side1 - cap.side2) / 2.0
    base, base_cap, mirrored = _orient(disc, cap)
    main_geom = grazing_geometry(base, base_cap)
    if main_geom is None:
        return []
    key = round(beta, 12)
    if key not in beta_cache:
        beta_cache[key] = _beta_cap_options(disc, beta)
    out: list[tuple[float, ConstructionParams]] = []
    for (gamma_sc, graze_len), b_disc, b_cap, b_mir in beta_cache[key]:
        sigma0 = cap.side2 / b_cap.side1
        reach0 = sigma0 * graze_len * np.cos(gamma_sc)
        for delta in (eps / 2.0, min(eps / 2.0, reach0 / 4.0)):
            if delta <= 1e-12:
                continue
            target = cap.side2 + delta  # scaled cap side in (short, long - eps)
            scale = target / b_cap.side1
            sized = _sizing(
                cap, n, eps, main_geom, (gamma_sc, scale * graze_len, delta, target)
            )
            if sized is None:
                continue
            score, side_target, side_lo, side_hi = sized
            out.append((score, ConstructionParams(
                disc=base, mirrored=mirrored, cap=base_cap, alpha=alpha, n=n,
                beta=beta, epsilon=eps, scale=scale, beta_disc=b_disc,
                beta_mirrored=b_mir, beta_cap=b_cap, side_target=side_target,
                side_lo=side_lo, side_hi=side_hi,
            )))
    out.sort(key=lambda t: -t[0])
    return out[:4]


def build_ring_polygon(params: ConstructionParams) -> RingPolygon:
    """Turtle-construct the (n+1)-gon with exterior angles alpha (n times), beta.

    Side lengths start uniform just below epsilon and receive the minimum-norm
    correction that closes the loop; if that leaves the allowed band, a small
    feasibility LP takes over.  Raises ValueError("ring infeasible ...") when
    no side assignment in the band closes the polygon.
    """
    n, alpha, eps = params.n, params.alpha, params.epsilon
    headings = np.arange(n + 1) * alpha
    dirs = np.stack([np.cos(headings), np.sin(headings)], axis=1)
    a_mat = dirs.T  # 2 x (n+1)
    lo, hi = params.side_lo, params.side_hi
    s0 = np.full(n + 1, params.side_target)
    gram = a_mat @ a_mat.T
    corr = a_mat.T @ np.linalg.solve(gram, a_mat @ s0)
    sides = s0 - corr
    if not (np.all(sides > lo) and np.all(sides < hi)):
        res = linprog(
            c=np.zeros(n + 1),
            A_eq=a_mat,
            b_eq=np.zeros(2),
            bounds=[(lo, hi)] * (n + 1),
            method="highs",
        )
        if not res.success:
            raise ValueError(
                f"ring infeasible (alpha={alpha!r}, beta={params.beta!r}, n={n})"
            )
        sides = res.x
    verts = np.zeros((n + 1, 2))
    for k in range(n):
        verts[k + 1] = verts[k] + sides[k] * dirs[k]
    closure = verts[n] + sides[n] * dirs[n]
    if np.linalg.norm(closure) > 1e-9 * eps:
        raise ValueError("ring infeasible (closure residual too large)")
    ext = np.array([params.alpha] * n + [params.beta])
    return RingPolygon(verts, ext, np.asarray(sides, dtype=float))


def _place(base: ConvexDisc, apex, ray1_point, vertex, heading, scale=1.0,
           mirrored=False) -> PlacedDisc:
    """Similarity mapping apex -> vertex and the apex->ray1_point ray onto heading."""
    apex = np.asarray(apex, dtype=float)
    r1 = np.asarray(ray1_point, dtype=float) - apex
    rot = float(heading - np.arctan2(r1[1], r1[0]))
    mat = scale * _rot(rot)
    vertex = np.asarray(vertex, dtype=float)
    verts = (base.vertices - apex) @ mat.T + vertex
    translation = vertex - mat @ apex
    return PlacedDisc(verts, rot, translation, float(scale), bool(mirrored))


def place_copies(params: ConstructionParams, ring: RingPolygon) -> list[PlacedDisc]:
    """Place the n congruent copies and the scaled copy around the ring.

    Entry k < n sits at ring vertex k+1 (the alpha vertices, in edge order);
    the last entry is the scaled copy at vertex 0.  Every congruent copy has
    its long cap side on the extension of its incoming ring edge and its cap
    apex exactly on its ring vertex.  Raises on any overlap.
    """
    n, alpha = params.n, params.alpha
    placed: list[PlacedDisc] = []
    for k in range(1, n + 1):
        heading_in = (k - 1) * alpha  # incoming edge heading; long side goes here
        placed.append(
            _place(
                params.disc,
                params.cap.apex,
                params.cap.contact1,
                ring.vertices[k],
                heading_in,
                1.0,
                params.mirrored,
            )
        )
    placed.append(
        _place(
            params.beta_disc,
            params.beta_cap.apex,
            params.beta_cap.contact1,
            ring.vertices[0],
            n * alpha,
            params.scale,
            params.beta_mirrored,
        )
    )
    scale_ref = max(float(np.abs(p.vertices).max()) for p in placed)
    for i in range(len(placed)):
        for j in range(i + 1, len(placed)):
            gap = polygon_separation(placed[i].vertices, placed[j].vertices)
            if gap <= 0.0:
                raise ValueError(
                    f"construction overlap: discs {i} and {j}, depth {-gap:.3e}"
                )
    for i, p in enumerate(placed):
        vert = ring.vertices[(i + 1) % (n + 1)]
        apex = params.cap.apex if i < n else params.beta_cap.apex
        mapped = p.scale * (_rot(p.rotation) @ apex) + p.translation
        if np.linalg.norm(mapped - vert) > 1e-12 * max(1.0, scale_ref):
            raise AssertionError("cap apex does not meet its ring vertex")
    return placed


def _margin_lp(below: np.ndarray, above: np.ndarray, span: float) -> float:
    """Best t for a line w.x = c with below <= c - t, above >= c + t, |w|inf <= 1."""
    rows = []
    for p in below:
        rows.append([p[0], p[1], -1.0, 1.0])
    for q in above:
        rows.append([-q[0], -q[1], 1.0, 1.0])
    a_ub = np.array(rows)
    b_ub = np.zeros(len(rows))
    bound = 10.0 * max(span, 1.0)
    res = linprog(
        c=[0.0, 0.0, 0.0, -1.0],
        A_ub=a_ub,
        b_ub=b_ub,
        bounds=[(-1.0, 1.0), (-1.0, 1.0), (-bound, bound), (None, None)],
        method="highs",
    )
    if not res.success:
        return -np.inf
    return float(-res.fun)


def separating_line_feasible(d1: PlacedDisc, d2: PlacedDisc, ring: RingPolygon,
                             delta: float | None = None) -> bool:
    """Is there a line strictly separating d1 from d2 that misses the ring?

    Such a line leaves the ring entirely on one side, so it must separate
    either d1 from (d2 with ring) or (d1 with ring) from d2; each orientation
    is one max-margin LP.  True when either margin clears delta (1e-9 of the
    configuration scale by default).
    """
    p1, p2, r = d1.vertices, d2.vertices, ring.vertices
    span = max(float(np.abs(v).max()) for v in (p1, p2, r))
    if delta is None:
        delta = 1e-9 * max(span, 1.0)
    if _margin_lp(p1, np.vstack([p2, r]), span) > delta:
        return True
    if _margin_lp(np.vstack([p1, r]), p2, span) > delta:
        return True
    return False


def separating_line_oracle(d1: PlacedDisc, d2: PlacedDisc, ring: RingPolygon,
                           n_angles: int = 720, n_offsets: int = 400,
                           clearance: float = 1e-6) -> bool:
    """Brute sampling over line angle and offset; True when some sampled line
    separates the discs with the given clearance while missing the ring."""
    p1, p2, r = d1.vertices, d2.vertices, ring.vertices
    for i in range(n_angles):
        theta = np.pi * i / n_angles
        w = np.array([np.cos(theta), np.sin(theta)])
        a = p1 @ w
        b = p2 @ w
        c = r @ w
        lo = min(a.min(), b.min(), c.min())
        hi = max(a.max(), b.max(), c.max())
        offs = np.linspace(lo, hi, n_offsets)
        a_lo, a_hi = a.min(), a.max()
        b_lo, b_hi = b.min(), b.max()
        c_lo, c_hi = c.min(), c.max()
        for off in offs:
            left1 = a_hi <= off - clearance
            right1 = a_lo >= off + clearance
            left2 = b_hi <= off - clearance
            right2 = b_lo >= off + clearance
            leftr = c_hi <= off - clearance
            rightr = c_lo >= off + clearance
            if (left1 and right2) and (leftr or rightr):
                return True
            if (right1 and left2) and (leftr or rightr):
                return True
    return False


def consecutive_pairs(placed: list[PlacedDisc]):
    m = len(placed)
    return [(i, (i + 1) % m) for i in range(m)]


def certify_nonseparable(placed: list[PlacedDisc], ring: RingPolygon) -> dict:
    """Run the separating-line check on every consecutive pair.

    Pass means no consecutive pair admits a separating line missing the ring;
    the report lists every pair's verdict.
    """
    pairs = []
    ok = True
    for i, j in consecutive_pairs(placed):
        feasible = separating_line_feasible(placed[i], placed[j], ring)
        ok = ok and not feasible
        pairs.append({"i": i, "j": j, "separable_avoiding_ring": bool(feasible)})
    return {
        "pass": bool(ok),
        "pairs": pairs,
        "note": (
            "certifies the pairwise obstruction only: consecutive copies admit "
            "no separating line that misses the ring polygon"
        ),
    }


def plan_construction(disc: ConvexDisc, margin: float = 1e-3,
                      max_attempts: int = 24) -> ConstructionParams:
    """Choose a lopsided cap and all derived parameters for the arrangement.

    Candidate caps are ranked by how tightly the resulting copies would pin
    the ring; a candidate whose cap angle divides the full turn too evenly
    (beta below 1e-3) is skipped in favor of the next one, and each survivor
    is test-built and certified, so the returned parameters are known good.

    Raises ValueError("disc too circular") when no sufficiently lopsided cap
    exists and ValueError("construction search exhausted ...") if every
    candidate fails.
    """
    generic = _generic_caps(disc, margin)
    if not generic:
        raise ValueError("disc too circular")

    candidates: list[Cap] = []
    seen: set[tuple[int, int]] = set()

    def push(cap: Cap):
        key = (int(round(cap.normal1 * 1e7)), int(round(cap.normal2 * 1e7)))
        if key not in seen:
            seen.add(key)
            candidates.append(cap)

    # caps aimed at beta values whose isosceles cap grazes shallowly, so the
    # scaled copy pins its edges as firmly as the congruent copies do; the
    # pairing is consistent only when beta stays below the cap angle
    for gamma_sc, beta_star in _survey_betas(disc):
        for n in range(2, MAX_COPIES + 1):
            alpha_star = (TWO_PI - beta_star) / n
            if alpha_star <= beta_star:
                break
            if not (0.2 <= alpha_star <= 2.9):
                continue
            for cap in _edge_hugging_caps(disc, alpha_star):
                if relative_side_difference(cap) > margin:
                    push(cap)
    for cap in generic:
        push(cap)

    beta_cache: dict = {}
    scored: list[tuple[float, int, ConstructionParams]] = []
    for rank, cap in enumerate(candidates[: 12 * max_attempts]):
        for score, params in _params_from_cap(disc, cap, beta_cache):
            scored.append((score, rank, params))
    scored.sort(key=lambda t: (-t[0], t[1]))
    attempts = 0
    last_error: Exception | None = None
    for _, _, params in scored:
        if attempts >= max_attempts:
            break
        attempts += 1
        try:
            ring = build_ring_polygon(params)
            placed = place_copies(params, ring)
        except (ValueError, AssertionError) as exc:
            last_error = exc
            continue
        report = certify_nonseparable(placed, ring)
        if report["pass"]:
            return params
    raise ValueError(f"construction search exhausted (last error: {last_error})")


def build_nonseparable_packing(disc: ConvexDisc, margin: float = 1e-3):
    """Full pipeline: plan, build the ring, place the copies, certify."""
    params = plan_construction(disc, margin)
    ring = build_ring_polygon(params)
    placed = place_copies(params, ring)
    report = certify_nonseparable(placed, ring)
    return params, ring, placed, report
