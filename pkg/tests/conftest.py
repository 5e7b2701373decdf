import sys
from fractions import Fraction as F

from cbsemigroup.geometry import RationalCircle, normalize_polygon

CIRCLE = RationalCircle((F(7, 5), F(4, 5)), F(1, 5))
PENTAGON = normalize_polygon(
    [(F(18, 5), F(9, 5)), (F(18, 5), F(3, 5)), (F(33, 10), F(21, 20)), (F(21, 5), F(3, 2)), (F(207, 50), F(99, 100))]
)
SEGMENT_QUAD = normalize_polygon([(2, F(1, 4)), (3, F(3, 8)), (F(13, 5), F(5, 4)), (F(78, 25), F(3, 2))])
ALIGNED_QUAD = normalize_polygon([(F(18, 5), F(6, 5)), (F(24, 5), F(8, 5)), (4, 2), (4, 1)])

PENTAGON_SPEC = "18/5,9/5;18/5,3/5;33/10,21/20;21/5,3/2;207/50,99/100"
SEGMENT_QUAD_SPEC = "2,1/4;3,3/8;13/5,5/4;78/25,3/2"

CIRCLE_GENERATORS = {
    (4, 2), (5, 3), (6, 3), (6, 4), (7, 3), (7, 4), (7, 5), (8, 5), (9, 4), (9, 6), (10, 7), (11, 8), (15, 11),
    (19, 8), (19, 14), (23, 17), (27, 20), (31, 13), (31, 23), (32, 24), (35, 26), (43, 18), (55, 23), (67, 28),
    (79, 33), (91, 38), (96, 40),
}
PENTAGON_GENERATORS = {
    (4, 1), (7, 2), (7, 3), (8, 3), (10, 3), (11, 2), (11, 5), (14, 3), (18, 3), (18, 9), (20, 8), (23, 10),
}
PENTAGON_UPSILON_J_GAPS = {
    (3, 1), (5, 1), (5, 2), (6, 2), (9, 2), (9, 3), (9, 4), (10, 2), (10, 4), (12, 5), (13, 3), (13, 5), (13, 6),
    (16, 3), (17, 3), (17, 4),
}


def poly(text):
    return normalize_polygon([tuple(F(c) for c in v.split(",")) for v in text.split(";")])


def circ(center, radius):
    return RationalCircle(tuple(F(c) for c in center.split(",")), F(radius))


# non-Buchsbaum bodies found by seeded random search and confirmed by the oracles
NON_BUCHSBAUM_CIRCLE = circ("6,2", "2")
NON_BUCHSBAUM_CIRCLE_SEGMENT = circ("13/5,57/10", "3")
NON_BUCHSBAUM_POLYGON = poly("3/2,5/2;5/2,0;5,21/10;26/5,4;17/10,31/10")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
