"""Convex body semigroups: dilation intervals, membership and ray semigroups.

A lattice point ``P`` belongs to the semigroup of a body ``F`` iff the set
``{k >= 0 : P in k*F}`` contains an integer, with ``k = 0`` admitted only
for the origin.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import InternalConsistencyError, NotAffine
from .exact import Surd, exact_ceil, integers_in_interval
from .geometry import (
    Body,
    ConvexPolygon,
    PointContact,
    RationalCircle,
    cone_of,
    dot,
    norm2,
)


@dataclass(frozen=True)
class DilationInterval:
    """The exact set ``{k >= 0 : P in k*F}``; ``hi is None`` means unbounded."""

    lo: object
    hi: object
    empty: bool = False

    def integers(self, floor_at: int = 0, limit: int | None = None) -> list[int]:
        if self.empty:
            return []
        hi = self.hi
        if hi is None:
            if limit is None:
                raise ValueError("unbounded interval needs a limit")
            hi = limit
        return integers_in_interval(self.lo, hi, floor_at)

    def contains_integer(self, floor_at: int = 1) -> bool:
        if self.empty:
            return False
        start = max(exact_ceil(self.lo), floor_at)
        return self.hi is None or start <= self.hi


_EMPTY = DilationInterval(Fraction(0), Fraction(0), True)


def polygon_gauges(poly: ConvexPolygon, p):
    """Lower and upper dilation bounds of ``p`` for a polygon.

    Returns ``(lo, hi)`` where ``hi`` is ``None`` when unbounded, or
    ``None`` when ``p`` lies outside the cone of the polygon.
    """
    lo, hi = Fraction(0), None
    for a, b in poly.half_planes:
        s = a[0] * p[0] + a[1] * p[1]
        if b > 0:
            q = Fraction(s) / b
            if q > lo:
                lo = q
        elif b < 0:
            q = Fraction(s) / b
            if hi is None or q < hi:
                hi = q
        elif s > 0:
            return None
    return lo, hi


def polygon_width(poly: ConvexPolygon, p):
    """Length of the dilation interval of a point of the cone (``None`` = infinite)."""
    g = polygon_gauges(poly, p)
    if g is None:
        return Fraction(-1)
    lo, hi = g
    return None if hi is None else hi - lo


def dilation_interval(body: Body, p) -> DilationInterval:
    """Exact interval of dilation factors ``k`` with ``p`` in ``k*body``."""
    if p[0] == 0 and p[1] == 0:
        return DilationInterval(Fraction(0), Fraction(0))
    if isinstance(body, ConvexPolygon):
        g = polygon_gauges(body, p)
        if g is None:
            return _EMPTY
        lo, hi = g
        if hi is not None and lo > hi:
            return _EMPTY
        return DilationInterval(lo, hi)

    # |p - k c|^2 <= k^2 r^2  <=>  alpha k^2 - 2 beta k + gamma <= 0
    alpha = body.power_of_origin
    beta = dot(p, body.center)
    gamma = Fraction(norm2(p))
    if alpha == 0:
        if beta <= 0:
            return _EMPTY
        return DilationInterval(gamma / (2 * beta), None)
    disc = beta * beta - alpha * gamma
    if disc < 0:
        return _EMPTY
    r_minus = Surd(beta / alpha, -1 / alpha, disc)
    r_plus = Surd(beta / alpha, 1 / alpha, disc)
    if alpha < 0:
        lo = max(r_minus, r_plus)
        return DilationInterval(_simplify(lo) if lo > 0 else Fraction(0), None)
    if r_plus < 0:
        return _EMPTY
    lo = r_minus if r_minus > 0 else Surd(0)
    return DilationInterval(_simplify(lo), _simplify(r_plus))


def _simplify(s: Surd):
    return s.a if s.is_rational else s


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSet:
    """Minimal generators plus the least element on each extremal ray."""

    elements: tuple
    ray1: tuple
    ray2: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return tuple(p) in self.elements


class SemigroupHandle:
    """The semigroup ``union_k (k*F) ∩ N^2`` of a circle or polygon.

    Minimal generators are computed on first access and cached; concurrent
    first callers block on a lock and all observe the same result.
    """

    def __init__(self, body: Body):
        self.body = body
        self.kind = "circle" if isinstance(body, RationalCircle) else "polygon"
        self.cone = cone_of(body)
        if self.kind == "polygon":
            self.kernel = kernels.PolygonKernel.from_half_planes(body.half_planes)
        elif body.power_of_origin > 0:
            self.kernel = kernels.CircleKernel.from_circle(body.center, body.radius)
        else:
            self.kernel = None
        self._lock = threading.Lock()
        self._generators = None
        self._sbar_cache = {}

    def __repr__(self):
        return f"SemigroupHandle({self.body!r})"

    def member(self, p) -> bool:
        x, y = p
        if x < 0 or y < 0:
            return False
        if self.kernel is not None:
            return self.kernel.member(x, y)
        return dilation_interval(self.body, p).contains_integer(1) or (x == 0 and y == 0)

    def member_grid(self, xmax: int, ymax: int, backend: str | None = None) -> np.ndarray:
        """Boolean membership table for ``[0, xmax] x [0, ymax]``."""
        if self.kernel is not None:
            return self.kernel.grid(xmax, ymax, backend)
        out = np.zeros((xmax + 1, ymax + 1), dtype=np.uint8)
        for x in range(xmax + 1):
            for y in range(ymax + 1):
                out[x, y] = self.member((x, y))
        return out

    @property
    def generators(self) -> GeneratorSet:
        if self._generators is None:
            with self._lock:
                if self._generators is None:
                    if self.kind == "circle":
                        from .circle import compute_circle_generators as compute
                    else:
                        from .polygon import compute_polygon_generators as compute
                    self._generators = compute(self)
        return self._generators

    def member_sbar(self, p) -> bool:
        p = tuple(p)
        hit = self._sbar_cache.get(p)
        if hit is None:
            x, y = p
            hit = x >= 0 and y >= 0 and all(
                self.member((x + n[0], y + n[1])) for n in self.generators.elements
            )
            self._sbar_cache[p] = hit
        return hit


@lru_cache(maxsize=256)
def handle_for(body: Body) -> SemigroupHandle:
    """Shared handle per body so repeated analyses reuse cached generators."""
    return SemigroupHandle(body)


def member(handle: SemigroupHandle, p) -> bool:
    return handle.member(p)


def member_sbar(handle: SemigroupHandle, p) -> bool:
    """``p + n`` lies in the semigroup for every minimal generator ``n``."""
    return handle.member_sbar(p)


# --------------------------------------------------------------------------
# rays


@dataclass(frozen=True)
class RaySemigroup:
    """Lattice points ``s*p`` (``s >= 1``) of one extremal ray in ``S`` or ``S-bar``.

    ``members_prefix[s-1]`` records membership of ``s*p``.  When
    ``tail_complete_from`` is set every ``s`` at or beyond it is a member;
    otherwise ``period`` is set and members are exactly its multiples.
    """

    which: int
    primitive: tuple
    members_prefix: tuple
    tail_complete_from: int | None
    period: int | None
    generators: tuple
    in_sbar: bool

    def contains(self, s: int) -> bool:
        if s <= 0:
            return s == 0
        if self.period is not None:
            return s % self.period == 0
        if s >= self.tail_complete_from:
            return True
        return self.members_prefix[s - 1]

    @property
    def single_generator(self) -> bool:
        return len(self.generators) == 1

    @property
    def generator_points(self) -> tuple:
        p = self.primitive
        return tuple((s * p[0], s * p[1]) for s in self.generators)

    @property
    def least(self) -> tuple:
        s = self.generators[0]
        return (s * self.primitive[0], s * self.primitive[1])

    def gaps(self) -> tuple:
        """Non-member multiples below the tail (segment contacts only)."""
        if self.period is not None:
            raise ValueError("a point-contact ray has infinitely many gaps")
        p = self.primitive
        return tuple((s * p[0], s * p[1]) for s in range(1, self.tail_complete_from) if not self.members_prefix[s - 1])


def numerical_generators(contains, tail: int) -> tuple:
    """Minimal generators of a set of positive integers closed under addition.

    ``contains(s)`` must be true for every ``s >= tail``.
    """
    first = next(s for s in range(1, tail + 1) if contains(s))
    members = [s for s in range(1, tail + first + 1) if contains(s)]
    mset = set(members)
    gens = []
    for s in members:
        if not any((s - g) in mset for g in gens if s - g > 0):
            gens.append(s)
    return tuple(gens)


def ray_tail_threshold(lo, hi) -> tuple[int, int]:
    """``(k0, s0)`` for a contact segment ``[lo, hi]`` along a primitive ray.

    From dilation ``k0`` on, consecutive dilates of the segment overlap, so
    every multiple ``s >= s0`` of the primitive vector is covered.
    """
    if lo == 0:
        return 1, 1
    k0 = max(1, exact_ceil(lo / (hi - lo)))
    s0 = max(1, exact_ceil(k0 * lo))
    return k0, s0


def ray_semigroup(handle: SemigroupHandle, which: int, in_sbar: bool = False) -> RaySemigroup:
    """Membership structure of ``S ∩ tau_j`` (or ``S-bar ∩ tau_j``)."""
    cone = handle.cone
    ray = cone.ray(which)
    contact = cone.contact(which)
    if not ray.is_rational:
        raise NotAffine(f"extremal ray tau{which} is irrational")
    p = ray.primitive
    pred = (lambda s: handle.member_sbar((s * p[0], s * p[1]))) if in_sbar else None

    if isinstance(contact, PointContact):
        lam = contact.param
        if isinstance(lam, Surd):
            if not lam.is_rational:
                raise NotAffine(f"contact point on tau{which} is irrational")
            lam = lam.a
        period = Fraction(lam).numerator
        prefix = tuple(s % period == 0 for s in range(1, 2 * period + 1))
        if in_sbar:
            observed = tuple(pred(s) for s in range(1, 2 * period + 1))
            if observed != prefix:
                raise InternalConsistencyError(
                    f"S-bar on point-contact ray tau{which} differs from S: {observed}"
                )
        return RaySemigroup(which, p, prefix, None, period, (period,), in_sbar)

    lo, hi = contact.lo, contact.hi
    _, s0 = ray_tail_threshold(lo, hi)

    def in_s(s):
        if lo == 0:
            return True
        return bool(integers_in_interval(s / hi, s / lo, 1))

    test = pred if in_sbar else in_s
    prefix = tuple(test(s) for s in range(1, s0))
    gens = numerical_generators(lambda s: s >= s0 or prefix[s - 1], s0)
    return RaySemigroup(which, p, prefix, s0, None, gens, in_sbar)


# --------------------------------------------------------------------------


def sieve_generators(handle: SemigroupHandle, candidates, backend: str | None = None) -> list:
    """Minimal generators among candidate lattice points.

    The candidate set must contain every minimal generator of the
    semigroup; non-members and decomposable points are discarded.
    """
    cands = sorted(set(tuple(c) for c in candidates if c != (0, 0)), key=lambda c: (c[0] + c[1], c[0]))
    if not cands:
        return []
    xmax = max(c[0] for c in cands)
    ymax = max(c[1] for c in cands)
    grid = handle.member_grid(xmax, ymax, backend)
    flags = kernels.sieve_indecomposable(grid, cands, backend)
    return sorted(c for c, f in zip(cands, flags) if f)
