"""Seeded constructors for polygons whose semigroups are Buchsbaum by construction.

Triangles with rational vertices always qualify.  Aligned quadrilaterals
have an integral vertex on each extremal ray and the two remaining
vertices on a common line through the origin.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import GenerationFailed, NotAConvexBody
from .geometry import ConvexPolygon, cross, normalize_polygon, scale, sub

MAX_TRIES = 200


def _rational(rng: random.Random, lo: int, hi: int, max_den: int) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def _twice_area(a, b, c):
    return abs(cross(sub(b, a), sub(c, a)))


def make_triangle_family(seed, max_den: int = 4, coord_range=(1, 6), min_area=Fraction(1, 2)) -> ConvexPolygon:
    """A random triangle in the open quadrant, rejecting thin samples."""
    rng = random.Random(seed)
    lo, hi = coord_range
    for _ in range(MAX_TRIES):
        pts = [(_rational(rng, lo, hi, max_den), _rational(rng, lo, hi, max_den)) for _ in range(3)]
        if _twice_area(*pts) < 2 * min_area:
            continue
        try:
            poly = normalize_polygon(pts)
        except NotAConvexBody:
            continue
        if len(poly.vertices) == 3:
            return poly
    raise GenerationFailed(f"no valid triangle after {MAX_TRIES} samples (seed {seed})")


_PRIMITIVES = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2), (1, 4), (4, 1), (3, 4), (4, 3), (2, 5), (5, 2)]


def aligned_quad(d1, a, d2, b, dm, mu, nu) -> ConvexPolygon:
    """Quadrilateral ``{a*d1, mu*dm, nu*dm, b*d2}`` after hypothesis checks.

    ``d1``, ``dm``, ``d2`` are primitive directions of strictly decreasing
    slope and ``mu < nu`` place the middle vertices on either side of the
    chord joining the two ray vertices.
    """
    if not (cross(dm, d1) > 0 and cross(d2, dm) > 0):
        raise GenerationFailed("directions are not in decreasing slope order")
    p1, p4 = scale(a, d1), scale(b, d2)
    # parameter where the ray through dm crosses the chord p1 p4
    e = sub(p4, p1)
    cut = Fraction(cross(p1, e), cross(dm, e))
    mu, nu = Fraction(mu), Fraction(nu)
    if not (0 < mu < cut < nu):
        raise GenerationFailed("middle vertices do not straddle the chord")
    pts = [tuple(map(Fraction, p1)), scale(mu, dm), scale(nu, dm), tuple(map(Fraction, p4))]
    poly = normalize_polygon(pts)
    if len(poly.vertices) != 4:
        raise GenerationFailed("sample is not a convex quadrilateral")
    return poly


def make_aligned_quad_family(seed, max_den: int = 5) -> ConvexPolygon:
    rng = random.Random(seed)
    for _ in range(MAX_TRIES):
        d1, dm, d2 = sorted(rng.sample(_PRIMITIVES, 3), key=lambda d: Fraction(d[1], d[0]), reverse=True)
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        p1, p4 = scale(a, d1), scale(b, d2)
        e = sub(p4, p1)
        cut = Fraction(cross(p1, e), cross(dm, e))
        den = rng.randint(1, max_den)
        # mu in (0, cut), nu in (cut, 2*cut)
        mu = Fraction(rng.randint(1, max(1, int(cut * den * 2) - 1)), 2 * den)
        nu = cut + Fraction(rng.randint(1, 2 * den), 2 * den) * cut / 2
        if not (0 < mu < cut):
            continue
        try:
            return aligned_quad(d1, a, d2, b, dm, mu, nu)
        except (GenerationFailed, NotAConvexBody):
            continue
    raise GenerationFailed(f"no valid aligned quadrilateral after {MAX_TRIES} samples (seed {seed})")
