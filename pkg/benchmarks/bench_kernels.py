"""Compare the compiled and pure-Python membership kernels.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.
"""

import argparse
import time
from fractions import Fraction as F

import numpy as np

from cbsemigroup import kernels
from cbsemigroup.geometry import RationalCircle, normalize_polygon
from cbsemigroup.semigroup import handle_for

BODIES = {
    "circle (7/5,4/5)|1/5": RationalCircle((F(7, 5), F(4, 5)), F(1, 5)),
    "pentagon": normalize_polygon(
        [(F(18, 5), F(9, 5)), (F(18, 5), F(3, 5)), (F(33, 10), F(21, 20)), (F(21, 5), F(3, 2)), (F(207, 50), F(99, 100))]
    ),
    "quadrilateral": normalize_polygon([(2, F(1, 4)), (3, F(3, 8)), (F(13, 5), F(5, 4)), (F(78, 25), F(3, 2))]),
}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--size", type=int, default=200)
    args = parser.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled extension unavailable; only the Python backend can be timed")
    n = args.size
    print(f"{'body':24} {'kernel':6} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, body in BODIES.items():
        h = handle_for(body)
        grid = h.member_grid(n, n)
        cands = sorted(((x, y) for x in range(n + 1) for y in range(n + 1) if (x, y) != (0, 0)), key=lambda p: (p[0] + p[1], p[0]))
        for label, run in (
            ("grid", lambda b: h.kernel.grid(n, n, b)),
            ("sieve", lambda b: kernels.sieve_indecomposable(grid, cands[: 20 * n], b)),
        ):
            tp, outp = best_of(lambda: run("python"), args.repeat)
            if kernels.BACKEND == "cython":
                tc, outc = best_of(lambda: run("cython"), args.repeat)
                assert np.array_equal(np.asarray(outp), np.asarray(outc)), f"backends disagree on {name} {label}"
                print(f"{name:24} {label:6} {tp * 1e3:10.2f} {tc * 1e3:10.2f} {tp / tc:7.1f}x")
            else:
                print(f"{name:24} {label:6} {tp * 1e3:10.2f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
