"""Exact planar geometry over the rationals.

Points are pairs of :class:`~fractions.Fraction` (or :class:`Surd` where a
ray meets a circle); lattice points are pairs of Python ints.  Bodies are
either a :class:`ConvexPolygon` or a :class:`RationalCircle` (the closed
disk).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    DomainError,
    NoIntersection,
    NotAConvexBody,
    NotSimplicial,
    OutOfQuadrant,
    Unbounded,
)
from .exact import Surd, as_fraction, primitive_vector

Point = tuple  # (x, y) of Fraction or Surd
LatticePoint = tuple  # (int, int)


def frac_point(p) -> tuple[Fraction, Fraction]:
    return (as_fraction(p[0]), as_fraction(p[1]))


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def add(u, v):
    return (u[0] + v[0], u[1] + v[1])


def sub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def scale(k, u):
    return (k * u[0], k * u[1])


def norm2(u):
    return u[0] * u[0] + u[1] * u[1]


def slope_cmp(u, v) -> int:
    """Compare directions in the closed quadrant by slope (vertical = +inf)."""
    c = cross(v, u)
    return (c > 0) - (c < 0)


# --------------------------------------------------------------------------
# bodies


@dataclass(frozen=True)
class ConvexPolygon:
    """A convex polygon with counterclockwise vertices and its H-representation.

    ``half_planes`` holds pairs ``((ax, ay), b)`` with primitive integer
    normals, one per edge in vertex order (edge ``i`` joins vertex ``i`` to
    vertex ``i+1``), describing ``{x : ax*x + ay*y <= b}``.
    """

    vertices: tuple
    half_planes: tuple = field(repr=False)

    def reflect(self) -> "ConvexPolygon":
        return normalize_polygon([(y, x) for x, y in self.vertices])

    def contains(self, p) -> bool:
        return all(a[0] * p[0] + a[1] * p[1] <= b for a, b in self.half_planes)

    def spec_string(self) -> str:
        return ";".join(f"{x},{y}" for x, y in self.vertices)


@dataclass(frozen=True)
class RationalCircle:
    """The closed disk with rational center and radius."""

    center: tuple
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", frac_point(self.center))
        object.__setattr__(self, "radius", as_fraction(self.radius))
        if self.radius <= 0:
            raise DomainError("radius must be positive")

    def reflect(self) -> "RationalCircle":
        return RationalCircle((self.center[1], self.center[0]), self.radius)

    def contains(self, p) -> bool:
        return norm2(sub(p, self.center)) <= self.radius**2

    @property
    def power_of_origin(self) -> Fraction:
        """``|c|^2 - r^2``: positive iff the origin lies outside the disk."""
        return norm2(self.center) - self.radius**2

    def spec_string(self) -> str:
        return f"{self.center[0]},{self.center[1]}|{self.radius}"


Body = Union[ConvexPolygon, RationalCircle]


def _convex_hull(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(sub(lower[-1], lower[-2]), sub(p, lower[-2])) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(sub(upper[-1], upper[-2]), sub(p, upper[-2])) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _edge_half_plane(u, v):
    """Primitive integer outward normal and offset for the ccw edge ``u -> v``."""
    dx, dy = v[0] - u[0], v[1] - u[1]
    nx, ny = dy, -dx
    den = math.lcm(nx.denominator, ny.denominator)
    ix, iy = int(nx * den), int(ny * den)
    g = math.gcd(ix, iy)
    ix, iy = ix // g, iy // g
    return (ix, iy), ix * u[0] + iy * u[1]


def normalize_polygon(points: Sequence) -> ConvexPolygon:
    """Convex hull in ccw order with its exact H-representation."""
    pts = [frac_point(p) for p in points]
    if len(pts) < 3:
        raise NotAConvexBody("a polygon needs at least three points")
    for p in pts:
        if p[0] < 0 or p[1] < 0:
            raise OutOfQuadrant(f"vertex {p[0]},{p[1]} lies outside the closed positive quadrant")
    hull = _convex_hull(pts)
    if len(hull) < 3:
        raise NotAConvexBody("points are collinear")
    n = len(hull)
    hp = tuple(_edge_half_plane(hull[i], hull[(i + 1) % n]) for i in range(n))
    return ConvexPolygon(tuple(hull), hp)


# --------------------------------------------------------------------------
# rays and cones


@dataclass(frozen=True)
class Ray:
    """A ray from the origin.

    ``primitive`` is the coprime integer direction when the ray is rational
    and ``None`` otherwise; ``direction`` is always a nonzero point on it.
    """

    direction: tuple
    primitive: tuple | None = None

    @property
    def is_rational(self) -> bool:
        return self.primitive is not None


@dataclass(frozen=True)
class PointContact:
    """The ray meets the body in one point ``param * ray.direction``."""

    param: object
    point: tuple

    kind = "point"


@dataclass(frozen=True)
class SegmentContact:
    """The ray meets the body in ``[lo, hi] * ray.direction``."""

    lo: object
    hi: object
    lo_point: tuple
    hi_point: tuple

    kind = "segment"


Contact = Union[PointContact, SegmentContact]


@dataclass(frozen=True)
class Cone:
    """Extremal rays of the positive integer cone and their contact sets.

    ``tau1`` has the greater slope.
    """

    tau1: Ray
    tau2: Ray
    contact1: Contact
    contact2: Contact

    def ray(self, which: int) -> Ray:
        return self.tau1 if which == 1 else self.tau2

    def contact(self, which: int) -> Contact:
        return self.contact1 if which == 1 else self.contact2

    def contains(self, p) -> bool:
        """Closed-cone membership for a point of the closed quadrant."""
        return cross(self.tau2.direction, p) >= 0 and cross(p, self.tau1.direction) >= 0

    def on_ray(self, p) -> int:
        """1 or 2 when ``p != O`` lies on that extremal ray, else 0."""
        if p[0] == 0 and p[1] == 0:
            return 0
        if cross(p, self.tau1.direction) == 0 and dot(p, self.tau1.direction) > 0:
            return 1
        if cross(self.tau2.direction, p) == 0 and dot(p, self.tau2.direction) > 0:
            return 2
        return 0

    def in_interior(self, p) -> bool:
        return cross(self.tau2.direction, p) > 0 and cross(p, self.tau1.direction) > 0

    def reflect(self) -> "Cone":
        def rr(ray):
            prim = None if ray.primitive is None else (ray.primitive[1], ray.primitive[0])
            return Ray((ray.direction[1], ray.direction[0]), prim)

        def rc(c):
            if isinstance(c, PointContact):
                return PointContact(c.param, (c.point[1], c.point[0]))
            return SegmentContact(c.lo, c.hi, (c.lo_point[1], c.lo_point[0]), (c.hi_point[1], c.hi_point[0]))

        return Cone(rr(self.tau2), rr(self.tau1), rc(self.contact2), rc(self.contact1))


def body_ray_intersection(body: Body, direction) -> Contact | None:
    """Intersection of a body with the ray through ``direction``.

    Returns ``None`` when empty.  Parameters are measured in units of the
    primitive integer vector of the direction.
    """
    p = primitive_vector(direction)
    if isinstance(body, ConvexPolygon):
        lo, hi = Fraction(0), None
        for a, b in body.half_planes:
            s = a[0] * p[0] + a[1] * p[1]
            if s > 0:
                bound = Fraction(b) / s
                hi = bound if hi is None or bound < hi else hi
            elif s < 0:
                bound = Fraction(b) / s
                lo = bound if bound > lo else lo
            elif b < 0:
                return None
        if hi is None:
            raise DomainError("polygon is unbounded along the ray")
        if lo > hi:
            return None
    else:
        c = body.center
        pp = norm2(p)
        pc = dot(p, c)
        alpha = body.power_of_origin
        disc = pc * pc - pp * alpha
        if disc < 0:
            return None
        lo = Surd(pc / pp, -Fraction(1) / pp, disc)
        hi = Surd(pc / pp, Fraction(1) / pp, disc)
        if hi < 0:
            return None
        if lo < 0:
            lo = Surd(0)
        if lo.is_rational:
            lo = lo.a
        if hi.is_rational:
            hi = hi.a
    if lo == hi:
        return PointContact(lo, scale(lo, p))
    return SegmentContact(lo, hi, scale(lo, p), scale(hi, p))


def _tangent_points(circle: RationalCircle):
    """Upper and lower tangent points from the origin (``alpha > 0`` only)."""
    c, r = circle.center, circle.radius
    alpha = circle.power_of_origin
    cc = norm2(c)
    lam = alpha / cc
    mu = Surd(0, r / cc, alpha)
    upper = (lam * c[0] - mu * c[1], lam * c[1] + mu * c[0])
    lower = (lam * c[0] + mu * c[1], lam * c[1] - mu * c[0])
    return upper, lower


def _tangent_ray(t) -> tuple[Ray, PointContact]:
    if t[0].is_rational and t[1].is_rational:
        q = (t[0].a, t[1].a)
        prim = primitive_vector(q)
        param = q[0] / prim[0] if prim[0] else q[1] / prim[1]
        return Ray(q, prim), PointContact(param, q)
    return Ray(t, None), PointContact(Fraction(1), t)


def cone_of(body: Body) -> Cone:
    """Extremal rays and contact sets of the cone spanned by the body."""
    if isinstance(body, ConvexPolygon):
        nz = [v for v in body.vertices if v != (0, 0)]
        top = nz[0]
        bottom = nz[0]
        for v in nz[1:]:
            if slope_cmp(v, top) > 0:
                top = v
            if slope_cmp(v, bottom) < 0:
                bottom = v
        d1, d2 = primitive_vector(top), primitive_vector(bottom)
        if d1 == d2:
            raise NotAConvexBody("polygon spans a single ray")
        r1, r2 = Ray(d1, d1), Ray(d2, d2)
        return Cone(r1, r2, body_ray_intersection(body, d1), body_ray_intersection(body, d2))

    c, r = body.center, body.radius
    gap2 = max(Fraction(0), -c[0]) ** 2 + max(Fraction(0), -c[1]) ** 2
    if gap2 >= r * r:
        raise NotSimplicial("the disk meets the closed positive quadrant in fewer than two points")
    alpha = body.power_of_origin
    upper = lower = None
    if alpha > 0:
        upper, lower = _tangent_points(body)
    if upper is not None and upper[0] >= 0:
        tau1, contact1 = _tangent_ray(upper)
    else:
        tau1 = Ray((Fraction(0), Fraction(1)), (0, 1))
        contact1 = body_ray_intersection(body, (0, 1))
    if lower is not None and lower[1] >= 0:
        tau2, contact2 = _tangent_ray(lower)
    else:
        tau2 = Ray((Fraction(1), Fraction(0)), (1, 0))
        contact2 = body_ray_intersection(body, (1, 0))
    if contact1 is None or contact2 is None:
        raise NotSimplicial("an extremal ray misses the disk")
    return Cone(tau1, tau2, contact1, contact2)


# --------------------------------------------------------------------------
# lines and segments


def line_intersection(p1, d1, p2, d2):
    """Intersection of lines ``p1 + s*d1`` and ``p2 + u*d2``."""
    den = cross(d1, d2)
    if den == 0:
        raise NoIntersection("lines are parallel")
    s = cross(sub(p2, p1), d2) / Fraction(den)
    return add(p1, scale(s, d1))


def scaled_segment(i, seg):
    a, b = seg
    return scale(i, a), scale(i, b)


def segment_intersection(seg1, seg2):
    """The intersection of two non-parallel closed segments, or ``None``."""
    (a, b), (c, d) = seg1, seg2
    d1, d2 = sub(b, a), sub(d, c)
    den = cross(d1, d2)
    if den == 0:
        raise NoIntersection("segments are parallel")
    s = Fraction(cross(sub(c, a), d2)) / den
    u = Fraction(cross(sub(c, a), d1)) / den
    if 0 <= s <= 1 and 0 <= u <= 1:
        return add(a, scale(s, d1))
    return None


# --------------------------------------------------------------------------
# lattice regions


@dataclass(frozen=True)
class HalfPlane:
    """``normal . x <= offset`` (``<`` when ``strict``)."""

    normal: tuple
    offset: Fraction
    strict: bool = False

    def holds(self, p) -> bool:
        v = self.normal[0] * p[0] + self.normal[1] * p[1]
        return v < self.offset if self.strict else v <= self.offset


@dataclass(frozen=True)
class LatticeRegion:
    """A convex region cut out by rational half-planes."""

    half_planes: tuple

    def contains(self, p) -> bool:
        return all(h.holds(p) for h in self.half_planes)

    def intersect(self, other: "LatticeRegion") -> "LatticeRegion":
        return LatticeRegion(self.half_planes + other.half_planes)


def region_from_polygon(vertices, open_edges=()) -> LatticeRegion:
    """Region bounded by a ccw convex polygon; ``open_edges`` are indices."""
    n = len(vertices)
    hps = []
    for i in range(n):
        u, v = frac_point(vertices[i]), frac_point(vertices[(i + 1) % n])
        normal, off = _edge_half_plane(u, v)
        hps.append(HalfPlane(normal, Fraction(off), i in open_edges))
    return LatticeRegion(tuple(hps))


def convex_hull_region(points) -> LatticeRegion:
    """Closed convex hull of rational points as a lattice region.

    Degenerate hulls (a segment or a point) are supported.
    """
    pts = [frac_point(p) for p in points]
    hull = _convex_hull(pts)
    if len(hull) >= 3:
        return region_from_polygon(hull)
    if len(hull) == 1:
        (x, y), = hull
        hps = [HalfPlane((1, 0), x), HalfPlane((-1, 0), -x), HalfPlane((0, 1), y), HalfPlane((0, -1), -y)]
        return LatticeRegion(tuple(hps))
    a, b = hull
    normal, off = _edge_half_plane(a, b)
    d = sub(b, a)
    hps = [
        HalfPlane(normal, Fraction(off)),
        HalfPlane((-normal[0], -normal[1]), -Fraction(off)),
        HalfPlane((d[0], d[1]), dot(d, b)),
        HalfPlane((-d[0], -d[1]), -dot(d, a)),
    ]
    return LatticeRegion(tuple(hps))


def box_region(xmin, xmax, ymin, ymax) -> LatticeRegion:
    return LatticeRegion(
        (
            HalfPlane((Fraction(-1), Fraction(0)), -Fraction(xmin)),
            HalfPlane((Fraction(1), Fraction(0)), Fraction(xmax)),
            HalfPlane((Fraction(0), Fraction(-1)), -Fraction(ymin)),
            HalfPlane((Fraction(0), Fraction(1)), Fraction(ymax)),
        )
    )


def _bounding_box(region: LatticeRegion):
    hps = region.half_planes
    for h in hps:
        for d in ((-h.normal[1], h.normal[0]), (h.normal[1], -h.normal[0])):
            if d == (0, 0):
                continue
            if all(dot(g.normal, d) <= 0 for g in hps):
                raise Unbounded("region has a recession direction")
    if not hps:
        raise Unbounded("region has no constraints")
    verts = []
    for i in range(len(hps)):
        for k in range(i + 1, len(hps)):
            a, b = hps[i], hps[k]
            det = cross(a.normal, b.normal)
            if det == 0:
                continue
            x = Fraction(a.offset * b.normal[1] - b.offset * a.normal[1]) / det
            y = Fraction(a.normal[0] * b.offset - b.normal[0] * a.offset) / det
            if all(dot(g.normal, (x, y)) <= g.offset for g in hps):
                verts.append((x, y))
    if not verts:
        return None
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    return min(xs), max(xs), min(ys), max(ys)


def enumerate_lattice(region: LatticeRegion) -> list[LatticePoint]:
    """All integer points of a bounded region in lexicographic order."""
    box = _bounding_box(region)
    if box is None:
        return []
    xmin, xmax, ymin, ymax = box
    out = []
    for x in range(math.ceil(xmin), math.floor(xmax) + 1):
        lo, hi = math.ceil(ymin), math.floor(ymax)
        ok = True
        for h in region.half_planes:
            ax, ay = h.normal
            rest = h.offset - ax * x
            if ay == 0:
                if (rest <= 0) if h.strict else (rest < 0):
                    ok = False
                    break
                continue
            bound = Fraction(rest) / ay
            if ay > 0:
                top = math.ceil(bound) - 1 if h.strict else math.floor(bound)
                hi = min(hi, top)
            else:
                bot = math.floor(bound) + 1 if h.strict else math.ceil(bound)
                lo = max(lo, bot)
        if not ok:
            continue
        out.extend((x, y) for y in range(lo, hi + 1))
    return out


def lattice_in_polygon(vertices) -> list[LatticePoint]:
    return enumerate_lattice(convex_hull_region(vertices))
