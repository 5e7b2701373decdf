"""Pure-Python membership and sieve kernels.

Mirrors ``_kernels.pyx`` function for function.  Polygon constraints are
rows ``(ax, ay, num, den)`` meaning ``den*(ax*x + ay*y) <= k*num``; a disk
is given by integers ``A = |C|^2 - R^2``, ``Bx``, ``By``, ``D`` with center
``(Bx/D, By/D)`` and radius ``R/D``.  Both encode "``(x, y)`` lies in
``k*F`` for some integer ``k >= 1``" (the origin is always a member).
"""

import numpy as np


def polygon_member(cons, x, y):
    if x == 0 and y == 0:
        return True
    lo = 1
    hi = None
    for ax, ay, num, den in cons:
        s = den * (ax * x + ay * y)
        if num > 0:
            q = -((-s) // num)
            if q > lo:
                lo = q
        elif num < 0:
            q = s // num
            if hi is None or q < hi:
                hi = q
        elif s > 0:
            return False
    return hi is None or lo <= hi


def circle_member(A, Bx, By, D, x, y):
    if x == 0 and y == 0:
        return True
    bp = (Bx * x + By * y) * D
    g = (x * x + y * y) * D * D
    kf = bp // A
    if kf < 1:
        return A - 2 * bp + g <= 0
    if A * kf * kf - 2 * bp * kf + g <= 0:
        return True
    k = kf + 1
    return A * k * k - 2 * bp * k + g <= 0


def polygon_grid(cons, xmax, ymax):
    cons = [tuple(int(v) for v in row) for row in np.asarray(cons).tolist()]
    out = np.zeros((xmax + 1, ymax + 1), dtype=np.uint8)
    for x in range(xmax + 1):
        for y in range(ymax + 1):
            if polygon_member(cons, x, y):
                out[x, y] = 1
    return out


def circle_grid(A, Bx, By, D, xmax, ymax):
    out = np.zeros((xmax + 1, ymax + 1), dtype=np.uint8)
    for x in range(xmax + 1):
        for y in range(ymax + 1):
            if circle_member(A, Bx, By, D, x, y):
                out[x, y] = 1
    return out


def sieve_indecomposable(grid, cands):
    """Flag candidates not expressible as (earlier generator) + (nonzero member).

    ``cands`` must be sorted by ``x + y``; ``grid`` must cover every
    candidate.
    """
    cands = np.asarray(cands).tolist()
    flags = np.zeros(len(cands), dtype=np.uint8)
    gens = []
    for i, (x, y) in enumerate(cands):
        if not grid[x, y]:
            continue
        decomposable = False
        for gx, gy in gens:
            dx, dy = x - gx, y - gy
            if dx < 0 or dy < 0 or (dx == 0 and dy == 0):
                continue
            if grid[dx, dy]:
                decomposable = True
                break
        if not decomposable:
            flags[i] = 1
            gens.append((x, y))
    return flags
