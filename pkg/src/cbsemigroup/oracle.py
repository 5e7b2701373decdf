"""Brute-force reference implementations.

Everything here works from the body definition alone: dilates ``i*F`` are
rasterized over integer boxes for ``i <= cap`` and the union is reduced by
pairwise sums.  Nothing is shared with the skeleton, the guarantee bound
or the compiled kernels.

A point ``P`` can lie in ``k*F`` only if ``|P| >= k * dist(O, F)``, so the
truncation is exact on the disk ``|P| <= cap * dist(O, F)``; that radius
is reported as ``complete_radius2`` (a rational lower bound of its square).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import rational_sqrt_bounds
from .geometry import Body, ConvexPolygon, cross, dot, norm2, sub


def _distance2_lower(body: Body) -> Fraction:
    """A rational lower bound for the squared distance from O to the body."""
    if isinstance(body, ConvexPolygon):
        if body.contains((0, 0)):
            return Fraction(0)
        best = None
        vs = body.vertices
        for i, a in enumerate(vs):
            b = vs[(i + 1) % len(vs)]
            d = sub(b, a)
            t = -dot(a, d) / norm2(d)
            t = min(max(t, Fraction(0)), Fraction(1))
            p = (a[0] + t * d[0], a[1] + t * d[1])
            q = norm2(p)
            best = q if best is None or q < best else best
        return best
    c, r = body.center, body.radius
    lo = rational_sqrt_bounds(norm2(c))[0] - r
    return lo * lo if lo > 0 else Fraction(0)


def certified_cap(body: Body, radius2) -> int:
    """Least cap whose truncation is exact on the disk of squared radius ``radius2``."""
    d2 = _distance2_lower(body)
    if d2 == 0:
        raise ValueError("the body touches the origin; no finite cap is certified")
    return max(1, math.isqrt(math.ceil(Fraction(radius2) / d2)) + 1)


@dataclass
class TruncatedSemigroup:
    body: Body
    dilation_cap: int
    grid: np.ndarray
    complete_radius2: Fraction

    @classmethod
    def build(cls, body: Body, cap: int) -> "TruncatedSemigroup":
        if isinstance(body, ConvexPolygon):
            xs = [v[0] for v in body.vertices]
            ys = [v[1] for v in body.vertices]
            xmax, ymax = math.floor(cap * max(xs)), math.floor(cap * max(ys))
        else:
            c, r = body.center, body.radius
            xmax, ymax = math.floor(cap * (c[0] + r)), math.floor(cap * (c[1] + r))
        grid = np.zeros((max(xmax, 0) + 1, max(ymax, 0) + 1), dtype=bool)
        grid[0, 0] = True
        for i in range(1, cap + 1):
            _rasterize(body, i, grid)
        return cls(body, cap, grid, cap * cap * _distance2_lower(body))

    @property
    def points(self) -> list:
        xs, ys = np.nonzero(self.grid)
        return sorted(zip(xs.tolist(), ys.tolist()))

    def contains(self, p) -> bool:
        x, y = p
        if x < 0 or y < 0 or x >= self.grid.shape[0] or y >= self.grid.shape[1]:
            return False
        return bool(self.grid[x, y])

    def exact_at(self, p) -> bool:
        return norm2(p) <= self.complete_radius2


def _rasterize(body: Body, i: int, grid: np.ndarray):
    if isinstance(body, ConvexPolygon):
        xs = [v[0] for v in body.vertices]
        ys = [v[1] for v in body.vertices]
        x0, x1 = math.ceil(i * min(xs)), math.floor(i * max(xs))
        y0, y1 = math.ceil(i * min(ys)), math.floor(i * max(ys))
    else:
        c, r = body.center, body.radius
        x0, x1 = max(0, math.ceil(i * (c[0] - r))), math.floor(i * (c[0] + r))
        y0, y1 = max(0, math.ceil(i * (c[1] - r))), math.floor(i * (c[1] + r))
    if x0 > x1 or y0 > y1:
        return
    X, Y = np.meshgrid(np.arange(x0, x1 + 1, dtype=np.int64), np.arange(y0, y1 + 1, dtype=np.int64), indexing="ij")
    if isinstance(body, ConvexPolygon):
        inside = np.ones(X.shape, dtype=bool)
        for a, b in body.half_planes:
            inside &= (a[0] * X + a[1] * Y) * b.denominator <= i * b.numerator
    else:
        D = math.lcm(c[0].denominator, c[1].denominator, r.denominator)
        cx, cy, R = int(c[0] * D), int(c[1] * D), int(r * D)
        inside = (D * X - i * cx) ** 2 + (D * Y - i * cy) ** 2 <= (i * R) ** 2
    grid[x0 : x1 + 1, y0 : y1 + 1] |= inside


def brute_member(body: Body, p, cap: int) -> bool:
    """Scan ``k = 0..cap`` for ``p in k*body`` straight from the definition."""
    if p[0] == 0 and p[1] == 0:
        return True
    for k in range(1, cap + 1):
        q = (Fraction(p[0], k), Fraction(p[1], k))
        if body.contains(q):
            return True
    return False


def _within(grid_shape, r2):
    X, Y = np.meshgrid(np.arange(grid_shape[0]), np.arange(grid_shape[1]), indexing="ij")
    return (X * X + Y * Y) <= r2


def brute_min_generators(body: Body, cap: int) -> set:
    """Members of the exact window that are not a sum of two nonzero members."""
    ts = TruncatedSemigroup.build(body, cap)
    r2 = math.floor(ts.complete_radius2)
    mask = ts.grid & _within(ts.grid.shape, r2)
    dec = np.zeros_like(mask)
    W, H = mask.shape
    xs, ys = np.nonzero(mask)
    for a, b in zip(xs.tolist(), ys.tolist()):
        if a == 0 and b == 0:
            continue
        shifted = mask[: W - a, : H - b].copy()
        shifted[0, 0] = False
        dec[a:, b:] |= shifted
    gens = mask & ~dec
    gens[0, 0] = False
    gx, gy = np.nonzero(gens)
    return set(zip(gx.tolist(), gy.tolist()))


@dataclass(frozen=True)
class OracleCM:
    cohen_macaulay: bool
    witness: tuple | None
    n1: tuple
    n2: tuple


def _rays(members):
    nz = [p for p in members if p != (0, 0)]
    top = bottom = nz[0]
    for p in nz:
        if cross(top, p) > 0:
            top = p
        if cross(p, bottom) > 0:
            bottom = p
    return top, bottom


def _least_on(members, d):
    on = [p for p in members if p != (0, 0) and cross(p, d) == 0]
    return min(on, key=norm2)


def _cm_scan(member, top, bottom, n1, n2, radius2):
    r = math.isqrt(radius2)
    for a in sorted(((x, y) for x in range(r + 1) for y in range(r + 1) if x * x + y * y <= radius2),
                    key=lambda p: (norm2(p), p)):
        if cross(bottom, a) < 0 or cross(a, top) < 0 or member(a):
            continue
        if member((a[0] + n1[0], a[1] + n1[1])) and member((a[0] + n2[0], a[1] + n2[1])):
            return OracleCM(False, a, n1, n2)
    return OracleCM(True, None, n1, n2)


def _require(ts: TruncatedSemigroup, radius):
    if Fraction(radius) ** 2 > ts.complete_radius2:
        raise ValueError(f"cap {ts.dilation_cap} is not certified for the required radius {radius}")


def brute_cm_check(body: Body, radius2: int, cap: int) -> OracleCM:
    """Scan gaps with ``d^2 <= radius2`` for ``a + n1`` and ``a + n2`` both members."""
    ts = TruncatedSemigroup.build(body, cap)
    members = [p for p in ts.points if ts.exact_at(p)]
    top, bottom = _rays(members)
    n1, n2 = _least_on(members, top), _least_on(members, bottom)
    reach = max(math.isqrt(norm2(n1)), math.isqrt(norm2(n2))) + 1
    _require(ts, math.isqrt(radius2) + 1 + reach)
    return _cm_scan(ts.contains, top, bottom, n1, n2, radius2)


def brute_sbar_cm(body: Body, radius2: int, cap: int) -> OracleCM:
    """The Cohen-Macaulay scan for ``S-bar = {a : a + g in S for every generator g}``."""
    ts = TruncatedSemigroup.build(body, cap)
    gens = sorted(brute_min_generators(body, cap))
    gmax = max(math.isqrt(norm2(g)) + 1 for g in gens)
    gx = np.array([g[0] for g in gens])
    gy = np.array([g[1] for g in gens])
    W, H = ts.grid.shape

    def sbar(p):
        x, y = p
        if x < 0 or y < 0:
            return False
        if x + gx.max() >= W or y + gy.max() >= H:
            return False
        return bool(ts.grid[x + gx, y + gy].all())

    members = [p for p in ts.points if ts.exact_at(p)]
    top, bottom = _rays(members)
    n1 = _least_sbar(sbar, top)
    n2 = _least_sbar(sbar, bottom)
    reach = max(math.isqrt(norm2(n1)), math.isqrt(norm2(n2))) + 1
    _require(ts, math.isqrt(radius2) + 1 + reach + gmax)
    return _cm_scan(sbar, top, bottom, n1, n2, radius2)


def _least_sbar(sbar, d):
    g = math.gcd(d[0], d[1])
    p = (d[0] // g, d[1] // g)
    s = 1
    while not sbar((s * p[0], s * p[1])):
        s += 1
    return (s * p[0], s * p[1])
