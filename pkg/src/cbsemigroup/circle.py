"""Affine circle semigroups.

Interior points are handled in coordinates ``u = l1(X)``, ``v = l2(X)``
given by the primitive integer forms vanishing on the two extremal rays.
The discriminant of the dilation quadratic is a binary quadratic form in
``(u, v)`` that is bounded below by a positive multiple of ``u*v`` on the
cone, which yields a hyperbolic region outside of which every interior
lattice point is a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NotAffine, UnsupportedGeometry
from .exact import exact_ceil, exact_floor, rational_sqrt_bounds
from .geometry import PointContact, RationalCircle, cross, dot, norm2, scale
from .semigroup import (
    GeneratorSet,
    RaySemigroup,
    SemigroupHandle,
    handle_for,
    ray_semigroup,
    sieve_generators,
)


@dataclass(frozen=True)
class Affineness:
    affine: bool
    witnesses: tuple = ()
    reason: str = ""

    def __bool__(self):
        return self.affine


@dataclass(frozen=True)
class GuaranteeBound:
    """``l1(a) >= 1``, ``l2(a) >= 1`` and ``l1(a)*l2(a) >= bound`` imply membership."""

    l1: tuple
    l2: tuple
    bound: Fraction

    def forms(self, p):
        return (self.l1[0] * p[0] + self.l1[1] * p[1], self.l2[0] * p[0] + self.l2[1] * p[1])


@dataclass(frozen=True)
class CircleAnalysis:
    handle: SemigroupHandle
    guarantee: GuaranteeBound
    interior_gaps: tuple


@dataclass(frozen=True)
class CircleBuchsbaumCertificate:
    verdict: bool
    gap_witnesses: tuple  # (gap, in S-bar)
    ray_reports: tuple  # RaySemigroup over S-bar, per ray
    primitive_in_sbar: tuple  # per ray: primitive vector lies in S-bar
    criteria_agree: bool


def _check_supported(circle: RationalCircle):
    if circle.power_of_origin <= 0:
        raise UnsupportedGeometry("the origin lies in the closed disk")


def _least_denominator_rational(lo, hi) -> Fraction:
    q = 1
    while True:
        n = exact_ceil(lo * q)
        if n <= exact_floor(hi * q):
            return Fraction(n, q)
        q += 1


def circle_affineness(circle: RationalCircle) -> Affineness:
    """Both extremal rays must be rational and carry a rational point of the disk."""
    _check_supported(circle)
    cone = handle_for(circle).cone
    witnesses = []
    for which in (1, 2):
        ray, contact = cone.ray(which), cone.contact(which)
        if not ray.is_rational:
            return Affineness(False, (), f"tangent point on tau{which} is irrational")
        if isinstance(contact, PointContact):
            witnesses.append(contact.point)
        else:
            lam = _least_denominator_rational(contact.lo, contact.hi)
            witnesses.append(scale(lam, ray.primitive))
    return Affineness(True, tuple(witnesses))


def _require_affine(circle):
    verdict = circle_affineness(circle)
    if not verdict:
        raise NotAffine(verdict.reason)
    return handle_for(circle)


def _bilinear(circle, x, y):
    alpha = circle.power_of_origin
    c = circle.center
    return dot(x, c) * dot(y, c) - alpha * dot(x, y)


def circle_guarantee_bound(circle: RationalCircle) -> GuaranteeBound:
    handle = _require_affine(circle)
    p1 = handle.cone.tau1.primitive
    p2 = handle.cone.tau2.primitive
    l1 = (p1[1], -p1[0])  # l1(X) = cross(X, p1)
    l2 = (-p2[1], p2[0])  # l2(X) = cross(p2, X)
    e1 = scale(Fraction(1, cross(p2, p1)), p2)
    e2 = scale(Fraction(1, cross(p2, p1)), p1)
    a = _bilinear(circle, e1, e1)
    c = _bilinear(circle, e2, e2)
    h = _bilinear(circle, e1, e2)
    alpha = circle.power_of_origin
    # Delta >= (2h + 2 sqrt(ac)) uv on the cone, and the k-interval has
    # length 2 sqrt(Delta) / alpha, so uv >= alpha^2 / (4 mu) suffices.
    scale_bits = 1 << 20
    while True:
        root = rational_sqrt_bounds(a * c, scale_bits)[0] if a * c > 0 else Fraction(0)
        mu = 2 * h + 2 * root
        if mu > 0:
            break
        scale_bits <<= 8
    return GuaranteeBound(l1, l2, alpha * alpha / (4 * mu))


def _lattice_uv_box(g: GuaranteeBound, umax, vmax):
    """Integer points with ``1 <= u <= umax`` and ``1 <= v <= vmax`` plus their forms."""
    a, b = g.l1
    c, d = g.l2
    det = a * d - b * c
    corners = []
    for u in (1, umax):
        for v in (1, vmax):
            corners.append((Fraction(d * u - b * v, det), Fraction(-c * u + a * v, det)))
    xmax = exact_floor(max(p[0] for p in corners))
    ymax = exact_floor(max(p[1] for p in corners))
    xs, ys = np.meshgrid(np.arange(xmax + 1, dtype=object), np.arange(ymax + 1, dtype=object), indexing="ij")
    us = a * xs + b * ys
    vs = c * xs + d * ys
    keep = (us >= 1) & (vs >= 1) & (us <= umax) & (vs <= vmax)
    return xs[keep], ys[keep], us[keep], vs[keep], xmax, ymax


def _interior_gaps(handle, g: GuaranteeBound, bound) -> tuple:
    top = exact_floor(bound)
    if top < 1:
        return ()
    xs, ys, us, vs, xmax, ymax = _lattice_uv_box(g, top, top)
    grid = handle.member_grid(xmax, ymax)
    gaps = []
    for x, y, u, v in zip(xs.tolist(), ys.tolist(), us.tolist(), vs.tolist()):
        if u * v < bound and not grid[x, y]:
            gaps.append((x, y))
    return tuple(sorted(gaps, key=lambda p: (norm2(p), p)))


def circle_interior_gaps(circle: RationalCircle, bound_scale=1) -> tuple:
    """Interior lattice points of the cone outside the semigroup.

    Sorted by squared distance to the origin, then lexicographically.
    ``bound_scale`` enlarges the scanned region for stability checks.
    """
    handle = _require_affine(circle)
    g = circle_guarantee_bound(circle)
    return _interior_gaps(handle, g, g.bound * bound_scale)


def compute_circle_generators(handle: SemigroupHandle) -> GeneratorSet:
    circle = handle.body
    _require_affine(circle)
    g = circle_guarantee_bound(circle)
    r1 = ray_semigroup(handle, 1)
    r2 = ray_semigroup(handle, 2)
    n1, n2 = r1.least, r2.least
    # a generator g with l2(g) > l2(n1) + B would have g - n1 in the guaranteed region
    umax = exact_floor(g.forms(n2)[0] + g.bound)
    vmax = exact_floor(g.forms(n1)[1] + g.bound)
    xs, ys, _, _, _, _ = _lattice_uv_box(g, umax, vmax)
    cands = list(zip(xs.tolist(), ys.tolist()))
    cands += _ray_candidates(r1) + _ray_candidates(r2)
    elements = sieve_generators(handle, cands)
    return GeneratorSet(tuple(elements), n1, n2)


def _ray_candidates(ray: RaySemigroup) -> list:
    p = ray.primitive
    return [(s * p[0], s * p[1]) for s in range(1, max(ray.generators) + 1) if ray.contains(s)]


def circle_min_generators(circle: RationalCircle) -> GeneratorSet:
    handle = _require_affine(circle)
    return handle.generators


def circle_analysis(circle: RationalCircle) -> CircleAnalysis:
    handle = _require_affine(circle)
    g = circle_guarantee_bound(circle)
    return CircleAnalysis(handle, g, _interior_gaps(handle, g, g.bound))


def circle_is_buchsbaum(circle: RationalCircle) -> CircleBuchsbaumCertificate:
    """Interior of the cone agrees with that of S-bar and both S-bar rays are monogenic."""
    handle = _require_affine(circle)
    gaps = circle_interior_gaps(circle)
    witnesses = tuple((a, handle.member_sbar(a)) for a in gaps)
    rays = (ray_semigroup(handle, 1, in_sbar=True), ray_semigroup(handle, 2, in_sbar=True))
    verdict = all(ok for _, ok in witnesses) and all(r.single_generator for r in rays)
    prim = tuple(
        isinstance(handle.cone.contact(r.which), PointContact) or handle.member_sbar(r.primitive) for r in rays
    )
    agree = all(p == r.single_generator for p, r in zip(prim, rays))
    return CircleBuchsbaumCertificate(verdict, witnesses, rays, prim, agree)


def circle_is_cohen_macaulay(circle: RationalCircle):
    """``(verdict, witness)``: a gap ``a`` with ``a + n1`` and ``a + n2`` both members.

    Interior gaps and gaps on segment-contact rays are checked directly; on
    a point-contact ray ``a + n_j`` stays on the ray and off the semigroup.
    """
    handle = _require_affine(circle)
    n1, n2 = handle.generators.ray1, handle.generators.ray2
    gaps = list(circle_interior_gaps(circle))
    for which in (1, 2):
        ray = ray_semigroup(handle, which)
        if ray.period is None:
            gaps.extend(ray.gaps())
    for a in sorted(gaps, key=lambda p: (norm2(p), p)):
        if handle.member((a[0] + n1[0], a[1] + n1[1])) and handle.member((a[0] + n2[0], a[1] + n2[1])):
            return False, a
    return True, None

