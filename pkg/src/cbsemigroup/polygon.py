"""Affine convex polygonal semigroups.

The cone is split into five pieces.  For a ray whose contact with the
polygon is a single vertex ``P``, consecutive dilates ``hF`` and
``(h+1)F`` meet at points ``V_h = h*P + s*d_far`` lying on a line ``nu``
parallel to the ray; the strip between the ray and ``nu`` beyond ``V_j``
is ``B`` and is periodic under ``n = t*P``, and the part below is
``Upsilon_j``.  For a segment contact ``nu`` is the ray itself.  Beyond
both lines lies ``Upsilon = Q + cone`` with ``Q`` their intersection, on
which the dilation interval has length at least one except inside an
explicit triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalConsistencyError
from .exact import exact_ceil, exact_floor
from .geometry import (
    ConvexPolygon,
    PointContact,
    add,
    convex_hull_region,
    cross,
    enumerate_lattice,
    line_intersection,
    norm2,
    scale,
    slope_cmp,
    sub,
)
from .semigroup import (
    GeneratorSet,
    SemigroupHandle,
    handle_for,
    polygon_width,
    ray_semigroup,
    sieve_generators,
)

O = (Fraction(0), Fraction(0))


@dataclass(frozen=True)
class RaySkeleton:
    """Skeleton data attached to one extremal ray.

    ``vertex`` is the contact vertex, or for a segment contact its endpoint
    nearer to the origin.  Point-contact fields (``V`` and below) are
    ``None`` for segment contacts.
    """

    which: int
    contact: str
    primitive: tuple
    vertex: tuple
    j: int
    nu: tuple  # (point, direction)
    upsilon: tuple  # hull vertices of Upsilon_j
    sector: tuple  # inner boundary direction of the sector governed by the contact
    far: tuple | None = None
    near: tuple | None = None
    s: Fraction | None = None
    V: tuple | None = None
    T: tuple | None = None
    period: int | None = None
    n: tuple | None = None
    strip_period: tuple | None = None

    def V_at(self, h: int):
        """Meeting point of ``h*[P, far]`` and ``(h+1)*[P, near]``."""
        return add(scale(h, self.vertex), scale(self.s, sub(self.far, self.vertex)))


@dataclass(frozen=True)
class Skeleton:
    rays: tuple
    Q: tuple
    case: int
    j: int
    T: tuple
    middle: tuple | None  # (delta1, delta2): directions bounding the middle sector
    middle_triangle: tuple  # contains every point of Upsilon with width < 1

    def ray(self, which: int) -> RaySkeleton:
        return self.rays[which - 1]

    def in_upsilon(self, p) -> bool:
        d = sub(p, self.Q)
        return cross(self.rays[1].primitive, d) >= 0 and cross(d, self.rays[0].primitive) >= 0

    def in_strip(self, which: int, p) -> bool:
        r = self.ray(which)
        if r.contact != "point":
            return False
        start = scale(r.j, r.vertex)
        base = sub(r.V, start)
        return _side(r, p) and cross(base, sub(p, start)) * cross(base, r.vertex) >= 0

    def in_upsilon_j(self, which: int, p) -> bool:
        return convex_hull_region(self.ray(which).upsilon).contains(p)

    def piece(self, p) -> str | None:
        """Name of a skeleton piece containing ``p`` (for coverage checks)."""
        for which in (1, 2):
            if self.ray(which).contact == "point" and self.in_strip(which, p):
                return f"B{which}"
        for which in (1, 2):
            if self.in_upsilon_j(which, p):
                return f"U{which}"
        if self.in_upsilon(p):
            return "U"
        return None


def _side(r: RaySkeleton, p) -> bool:
    """``p`` lies between the ray and its line ``nu`` (inclusive)."""
    prim = r.primitive
    c_ray = cross(p, prim) if r.which == 1 else cross(prim, p)
    c_nu = cross(sub(p, r.nu[0]), prim) if r.which == 1 else cross(prim, sub(p, r.nu[0]))
    return c_ray >= 0 and c_nu <= 0


def _vertex_index(poly: ConvexPolygon, v) -> int:
    return poly.vertices.index(v)


def _ray_skeleton(poly: ConvexPolygon, handle: SemigroupHandle, which: int) -> dict:
    cone = handle.cone
    prim = cone.ray(which).primitive
    contact = cone.contact(which)
    verts = poly.vertices
    m = len(verts)
    if not isinstance(contact, PointContact):
        lo, hi = Fraction(contact.lo), Fraction(contact.hi)
        j = 1 if lo == 0 else max(1, exact_ceil(lo / (hi - lo)))
        return dict(
            which=which, contact="segment", primitive=prim, vertex=contact.lo_point, j=j,
            nu=(O, prim), upsilon=(O,), sector=prim,
        )

    P = contact.point
    i = _vertex_index(poly, P)
    prev, nxt = verts[i - 1], verts[(i + 1) % m]
    far, near = (prev, nxt) if which == 1 else (nxt, prev)
    d_far, d_near = sub(far, P), sub(near, P)
    # s*d_far - u*d_near = P
    det = cross(d_far, (-d_near[0], -d_near[1]))
    s = cross(P, (-d_near[0], -d_near[1])) / det
    u = cross(d_far, P) / det
    if s <= 0 or u <= 0:
        raise InternalConsistencyError("consecutive dilates do not meet along the contact vertex")
    j = max(1, exact_ceil(s), exact_ceil(u) - 1)
    base = scale(s, d_far)
    V = add(scale(j, P), base)
    for h in (j, j + 1, j + 2):
        vh = add(scale(h, P), base)
        if vh != add(scale(h + 1, P), scale(u, d_near)):
            raise InternalConsistencyError(f"dilates {h} and {h + 1} do not meet at the predicted point")
    vj1 = add(scale(j + 1, P), base)
    vj2 = add(scale(j + 2, P), base)
    if cross(sub(vj1, V), sub(vj2, V)) != 0:
        raise InternalConsistencyError("meeting points of consecutive dilates are not collinear")
    other = cone.ray(3 - which).primitive
    X = line_intersection(base, P, O, other)
    lam = Fraction(contact.param)
    t = lam.denominator
    n = scale(lam.numerator, prim)
    inner = prev if slope_cmp(prev, nxt) * (1 if which == 1 else -1) > 0 else nxt
    strip = (scale(j, P), V, add(V, n), add(scale(j, P), n))
    return dict(
        which=which, contact="point", primitive=prim, vertex=P, j=j, nu=(base, P),
        upsilon=(O, scale(j, P), V, X), sector=inner, far=far, near=near, s=s, V=V,
        T=(O, P, base), period=t, n=n, strip_period=strip,
    )


def _middle(poly: ConvexPolygon, r1: RaySkeleton, r2: RaySkeleton):
    d1, d2 = r1.sector, r2.sector
    if slope_cmp(d1, d2) < 0:
        return None, (O,)
    pts = [O]
    for d in (d1, d2):
        w = polygon_width(poly, d)
        if w is not None:
            pts.append(scale(1 / w, d))
    return (d1, d2), tuple(pts)


def polygon_skeleton(poly: ConvexPolygon) -> Skeleton:
    handle = handle_for(poly)
    r1 = RaySkeleton(**_ray_skeleton(poly, handle, 1))
    r2 = RaySkeleton(**_ray_skeleton(poly, handle, 2))
    if r1.contact == "segment" and r2.contact == "segment":
        Q = O
    else:
        Q = line_intersection(r1.nu[0], r1.nu[1], r2.nu[0], r2.nu[1])
    case = {("segment", "segment"): 1, ("point", "point"): 2, ("point", "segment"): 3, ("segment", "point"): 4}[
        (r1.contact, r2.contact)
    ]
    j = max(r1.j, r2.j)
    ends = []
    for r in (r1, r2):
        ends.append(r.V_at(j) if r.contact == "point" else scale(j, r.vertex))
    T = (O, ends[0], ends[1]) if case == 1 else (Q, ends[0], ends[1])
    middle, tri = _middle(poly, r1, r2)
    return Skeleton((r1, r2), Q, case, j, T, middle, tri)


# --------------------------------------------------------------------------
# finite pieces


def _lattice(points) -> list:
    return enumerate_lattice(convex_hull_region(points))


def _bbox_points(points) -> list:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, x1 = max(0, exact_ceil(min(xs))), exact_floor(max(xs))
    y0, y1 = max(0, exact_ceil(min(ys))), exact_floor(max(ys))
    return [(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)]


def upsilon_j_points(skel: Skeleton, which: int) -> list:
    return _lattice(skel.ray(which).upsilon)


def strip_first_period(skel: Skeleton, which: int) -> list:
    r = skel.ray(which)
    if r.contact != "point":
        return []
    return _lattice(r.strip_period)


def upsilon_low_points(skel: Skeleton, cone) -> list:
    """Lattice points of ``Upsilon`` in the bounding box of the middle triangle."""
    return [p for p in _bbox_points(skel.middle_triangle) if skel.in_upsilon(p) and cone.contains(p)]


def translate_gaps(handle: SemigroupHandle, skel: Skeleton, which: int, h: int) -> list:
    """Non-members in the open triangle ``T_j + (h + j)*P``."""
    r = skel.ray(which)
    shift = scale(h + r.j, r.vertex)
    tri = [add(v, shift) for v in r.T]
    region = convex_hull_region(tri)
    pts = enumerate_lattice(region)
    return sorted(p for p in pts if _strictly_inside(tri, p) and not handle.member(p))


def _strictly_inside(tri, p) -> bool:
    a, b, c = tri
    s = [cross(sub(b, a), sub(p, a)), cross(sub(c, b), sub(p, b)), cross(sub(a, c), sub(p, c))]
    return all(v > 0 for v in s) or all(v < 0 for v in s)


# --------------------------------------------------------------------------
# generators


def compute_polygon_generators(handle: SemigroupHandle) -> GeneratorSet:
    poly = handle.body
    skel = polygon_skeleton(poly)
    cone = handle.cone
    r1, r2 = ray_semigroup(handle, 1), ray_semigroup(handle, 2)
    e1, e2 = r1.least, r2.least
    cands = []
    for which in (1, 2):
        cands += upsilon_j_points(skel, which)
        cands += strip_first_period(skel, which)
    # g in Upsilon with g - e_j in Upsilon and of width >= 1 decomposes
    Q = skel.Q
    par = [Q, add(Q, e1), add(Q, e2), add(add(Q, e1), e2)]
    regions = [par, [add(p, e1) for p in skel.middle_triangle], [add(p, e2) for p in skel.middle_triangle]]
    for reg in regions:
        cands += [p for p in _bbox_points(reg) if cone.contains(p)]
    for ray in (r1, r2):
        p = ray.primitive
        cands += [(s * p[0], s * p[1]) for s in range(1, max(ray.generators) + 1)]
    return GeneratorSet(tuple(sieve_generators(handle, cands)), e1, e2)


def polygon_min_generators(poly: ConvexPolygon) -> GeneratorSet:
    return handle_for(poly).generators


# --------------------------------------------------------------------------
# decisions


@dataclass(frozen=True)
class GapComparison:
    """Comparison of the interior of the cone with the interior of P-bar.

    ``strip_gaps`` are interior non-members of one period of each strip
    (never in P-bar); ``upsilon_j_gaps`` and ``upsilon_gaps`` pair each
    interior non-member with its P-bar membership.  ``triangle_gaps`` does
    the same for the comparison triangle ``T`` of the contact case.
    """

    case: int
    equal: bool
    j: int
    T: tuple
    strip_gaps: tuple
    upsilon_j_gaps: tuple
    upsilon_gaps: tuple
    triangle_gaps: tuple


def _by_distance(points):
    return sorted(set(points), key=lambda p: (norm2(p), p))


def polygon_gap_comparison(poly: ConvexPolygon) -> GapComparison:
    handle = handle_for(poly)
    skel = polygon_skeleton(poly)
    cone = handle.cone
    inside = cone.in_interior
    strip = _by_distance(
        p for w in (1, 2) for p in strip_first_period(skel, w) if inside(p) and not handle.member(p)
    )
    uj = _by_distance(
        p for w in (1, 2) for p in upsilon_j_points(skel, w) if inside(p) and not handle.member(p)
    )
    up = _by_distance(p for p in upsilon_low_points(skel, cone) if inside(p) and not handle.member(p))
    tri = _by_distance(p for p in _lattice(skel.T) if inside(p) and not handle.member(p))
    uj_w = tuple((p, handle.member_sbar(p)) for p in uj)
    up_w = tuple((p, handle.member_sbar(p)) for p in up)
    tri_w = tuple((p, handle.member_sbar(p)) for p in tri)
    equal = not strip and all(ok for _, ok in uj_w + up_w)
    return GapComparison(skel.case, equal, skel.j, skel.T, tuple(strip), uj_w, up_w, tri_w)


@dataclass(frozen=True)
class PolygonBuchsbaumCertificate:
    branch: str  # "InteriorEqual" | "InteriorDiffers"
    verdict: bool
    comparison: GapComparison
    ray_reports: tuple = ()
    n_prime: tuple = ()
    upsilon_prime: tuple = ()
    upsilon_witnesses: tuple = ()  # (gap of Upsilon, in P-bar)


def polygon_is_buchsbaum(poly: ConvexPolygon) -> PolygonBuchsbaumCertificate:
    handle = handle_for(poly)
    comp = polygon_gap_comparison(poly)
    rays = (ray_semigroup(handle, 1, in_sbar=True), ray_semigroup(handle, 2, in_sbar=True))
    n_prime = tuple(r.least for r in rays)
    if comp.equal:
        verdict = all(r.single_generator for r in rays)
        return PolygonBuchsbaumCertificate("InteriorEqual", verdict, comp, rays, n_prime)
    skel = polygon_skeleton(poly)
    (a1, b1), (a2, b2) = n_prime
    sbar = handle.member_sbar
    low = sorted({p for w in (1, 2) for p in upsilon_j_points(skel, w)} - {(0, 0)})
    prime = tuple(
        p for p in _by_distance(low)
        if not sbar(p) and sbar((p[0] + a1, p[1] + b1)) and sbar((p[0] + a2, p[1] + b2))
    )
    ups = _by_distance(p for p in upsilon_low_points(skel, handle.cone) if not handle.member(p))
    wit = tuple((p, sbar(p)) for p in ups)
    verdict = not prime and all(ok for _, ok in wit)
    return PolygonBuchsbaumCertificate("InteriorDiffers", verdict, comp, rays, n_prime, prime, wit)


def polygon_is_cohen_macaulay(poly: ConvexPolygon):
    """``(verdict, witness)`` where a witness is a gap ``a`` with ``a + n1``, ``a + n2`` members.

    Strip gaps and gaps on point-contact rays are discharged by
    periodicity: their translate by the ray element is again a gap.
    """
    handle = handle_for(poly)
    skel = polygon_skeleton(poly)
    gens = handle.generators
    n1, n2 = gens.ray1, gens.ray2
    member = handle.member

    def violates(a):
        return member((a[0] + n1[0], a[1] + n1[1])) and member((a[0] + n2[0], a[1] + n2[1]))

    groups = [
        [p for p in upsilon_low_points(skel, handle.cone) if not member(p)],
        [p for w in (1, 2) for p in upsilon_j_points(skel, w) if p != (0, 0) and not member(p)],
    ]
    for which in (1, 2):
        ray = ray_semigroup(handle, which)
        if ray.period is None:
            groups.append(list(ray.gaps()))
    for group in groups:
        for a in _by_distance(group):
            if violates(a):
                return False, a
    return True, None
