# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled membership and sieve kernels (int64 arithmetic).

Callers in ``kernels.py`` check magnitudes before dispatching here, so no
product below can overflow.  Semantics match ``_fallback.py`` exactly.
"""

import numpy as np
cimport numpy as cnp

ctypedef long long i64

cnp.import_array()


cdef inline i64 floordiv(i64 a, i64 b) nogil:
    cdef i64 q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline i64 ceildiv(i64 a, i64 b) nogil:
    return -floordiv(-a, b)


cdef inline bint _poly(const i64[:, ::1] cons, i64 x, i64 y) nogil:
    cdef Py_ssize_t i
    cdef i64 lo = 1, hi = 0, s, q, num
    cdef bint bounded = False
    if x == 0 and y == 0:
        return True
    for i in range(cons.shape[0]):
        s = cons[i, 3] * (cons[i, 0] * x + cons[i, 1] * y)
        num = cons[i, 2]
        if num > 0:
            q = ceildiv(s, num)
            if q > lo:
                lo = q
        elif num < 0:
            q = floordiv(s, num)
            if not bounded or q < hi:
                hi = q
                bounded = True
        elif s > 0:
            return False
    return (not bounded) or lo <= hi


cdef inline bint _circ(i64 A, i64 Bx, i64 By, i64 D, i64 x, i64 y) nogil:
    cdef i64 bp, g, kf, k
    if x == 0 and y == 0:
        return True
    bp = (Bx * x + By * y) * D
    g = (x * x + y * y) * D * D
    kf = floordiv(bp, A)
    if kf < 1:
        return A - 2 * bp + g <= 0
    if A * kf * kf - 2 * bp * kf + g <= 0:
        return True
    k = kf + 1
    return A * k * k - 2 * bp * k + g <= 0


def polygon_member(cons, i64 x, i64 y):
    cdef const i64[:, ::1] c = np.ascontiguousarray(cons, dtype=np.int64)
    return bool(_poly(c, x, y))


def circle_member(i64 A, i64 Bx, i64 By, i64 D, i64 x, i64 y):
    return bool(_circ(A, Bx, By, D, x, y))


def polygon_grid(cons, i64 xmax, i64 ymax):
    cdef const i64[:, ::1] c = np.ascontiguousarray(cons, dtype=np.int64)
    out = np.zeros((xmax + 1, ymax + 1), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] o = out
    cdef i64 x, y
    with nogil:
        for x in range(xmax + 1):
            for y in range(ymax + 1):
                o[x, y] = _poly(c, x, y)
    return out


def circle_grid(i64 A, i64 Bx, i64 By, i64 D, i64 xmax, i64 ymax):
    out = np.zeros((xmax + 1, ymax + 1), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] o = out
    cdef i64 x, y
    with nogil:
        for x in range(xmax + 1):
            for y in range(ymax + 1):
                o[x, y] = _circ(A, Bx, By, D, x, y)
    return out


def sieve_indecomposable(grid, cands):
    cdef const cnp.uint8_t[:, ::1] g = np.ascontiguousarray(grid, dtype=np.uint8)
    cdef const i64[:, ::1] c = np.ascontiguousarray(np.asarray(cands, dtype=np.int64).reshape(-1, 2))
    cdef Py_ssize_t n = c.shape[0]
    flags = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] f = flags
    gens_arr = np.zeros((max(n, 1), 2), dtype=np.int64)
    cdef i64[:, ::1] gens = gens_arr
    cdef Py_ssize_t ng = 0, i, k
    cdef i64 x, y, dx, dy
    cdef bint dec
    with nogil:
        for i in range(n):
            x = c[i, 0]
            y = c[i, 1]
            if not g[x, y]:
                continue
            dec = False
            for k in range(ng):
                dx = x - gens[k, 0]
                dy = y - gens[k, 1]
                if dx < 0 or dy < 0 or (dx == 0 and dy == 0):
                    continue
                if g[dx, dy]:
                    dec = True
                    break
            if not dec:
                f[i] = 1
                gens[ng, 0] = x
                gens[ng, 1] = y
                ng += 1
    return flags
