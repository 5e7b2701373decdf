"""Bodies shared by the oracle-equivalence and invariant suites.

Besides the four worked bodies, entries come from seeded random searches
(polygons and circles) and from the seeded family constructors.
"""

from cbsemigroup.families import make_aligned_quad_family, make_triangle_family
from conftest import CIRCLE, PENTAGON, SEGMENT_QUAD, ALIGNED_QUAD, circ, poly

WORKED = {"circle": CIRCLE, "pentagon": PENTAGON, "segment-quad": SEGMENT_QUAD, "aligned-quad": ALIGNED_QUAD}

SEEDED = {
    "circle-6,2|2": circ("6,2", "2"),
    "circle-13/5,57/10|3": circ("13/5,57/10", "3"),
    "circle-1,3|1": circ("1,3", "1"),
    "circle-3,3|3": circ("3,3", "3"),
    "circle-6/5,1|6/5": circ("6/5,1", "6/5"),
    "circle-2,1/6|3/2": circ("2,1/6", "3/2"),
    "circle-4/3,4/3|13/8": circ("4/3,4/3", "13/8"),
    "circle-3,2|2": circ("3,2", "2"),
    "poly9": poly("3/2,5/2;5/2,0;5,21/10;26/5,4;17/10,31/10"),
    "poly16": poly("4,5;23/5,16/5;26/5,8/5;6,11/4"),
    "poly17": poly("5/4,17/4;2,7/4;27/5,0;28/5,2/5"),
    "poly20": poly("1,3;2,3;22/5,19/5;9/2,4;3,5"),
    "poly-0": poly("7/4,15/4;29/5,2/5;6,6/5;4,4"),
    "poly-36": poly("3,2;9/2,0;11/2,1/2;23/5,12/5"),
    "triangle-0": make_triangle_family(0),
    "triangle-1": make_triangle_family(1),
    "quad-0": make_aligned_quad_family(0),
    "quad-1": make_aligned_quad_family(1),
}

CORPUS = {**WORKED, **SEEDED}
CIRCLES = {k: v for k, v in CORPUS.items() if type(v).__name__ == "RationalCircle"}
POLYGONS = {k: v for k, v in CORPUS.items() if k not in CIRCLES}
