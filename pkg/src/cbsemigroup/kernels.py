"""Backend selection for the membership kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise, or
when ``CBSG_PURE_PYTHON`` is set, the pure-Python ``_fallback`` module is.
Inputs whose magnitudes could overflow 64-bit arithmetic are always routed
to the Python implementation, which uses arbitrary-precision integers.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from . import _fallback

if os.environ.get("CBSG_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_LIMIT = 1 << 60


@dataclass(frozen=True)
class PolygonKernel:
    cons: tuple  # rows (ax, ay, num, den)
    array: np.ndarray

    @classmethod
    def from_half_planes(cls, half_planes):
        rows = tuple((a[0], a[1], b.numerator, b.denominator) for a, b in half_planes)
        return cls(rows, np.array(rows, dtype=object))

    def _safe(self, xmax: int, ymax: int) -> bool:
        m = max(xmax, ymax, 1)
        for ax, ay, num, den in self.cons:
            if den * (abs(ax) + abs(ay)) * m >= _LIMIT or abs(num) >= _LIMIT:
                return False
        return True

    def member(self, x: int, y: int) -> bool:
        return _fallback.polygon_member(self.cons, x, y)

    def grid(self, xmax: int, ymax: int, backend: str | None = None) -> np.ndarray:
        impl = _pick(backend, self._safe(xmax, ymax))
        cons = np.array(self.cons, dtype=np.int64) if impl is _compiled else self.cons
        return impl.polygon_grid(cons, xmax, ymax)


@dataclass(frozen=True)
class CircleKernel:
    A: int
    Bx: int
    By: int
    D: int

    @classmethod
    def from_circle(cls, center, radius):
        D = math.lcm(center[0].denominator, center[1].denominator, radius.denominator)
        bx, by, r = int(center[0] * D), int(center[1] * D), int(radius * D)
        return cls(bx * bx + by * by - r * r, bx, by, D)

    def _safe(self, xmax: int, ymax: int) -> bool:
        m = max(xmax, ymax, 1)
        bp = (abs(self.Bx) + abs(self.By)) * m * self.D
        kmax = bp // self.A + 2
        g = 2 * m * m * self.D * self.D
        return max(self.A * kmax * kmax, 2 * bp * kmax, g) < _LIMIT

    def member(self, x: int, y: int) -> bool:
        return _fallback.circle_member(self.A, self.Bx, self.By, self.D, x, y)

    def grid(self, xmax: int, ymax: int, backend: str | None = None) -> np.ndarray:
        impl = _pick(backend, self._safe(xmax, ymax))
        return impl.circle_grid(self.A, self.Bx, self.By, self.D, xmax, ymax)


def _pick(backend, safe):
    if backend == "python" or _compiled is None or not safe:
        return _fallback
    return _compiled


def sieve_indecomposable(grid: np.ndarray, cands, backend: str | None = None) -> np.ndarray:
    """Generator flags for candidates sorted by coordinate sum."""
    cands = list(cands)
    impl = _pick(backend, True)
    if not cands:
        return np.zeros(0, dtype=np.uint8)
    return impl.sieve_indecomposable(np.ascontiguousarray(grid, dtype=np.uint8), np.array(cands, dtype=np.int64))
