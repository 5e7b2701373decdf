from fractions import Fraction as F

import pytest

from cbsemigroup.errors import DomainError, NoIntersection, NotAConvexBody, OutOfQuadrant
from cbsemigroup.exact import Surd
from cbsemigroup.geometry import (
    PointContact,
    RationalCircle,
    SegmentContact,
    body_ray_intersection,
    cone_of,
    convex_hull_region,
    enumerate_lattice,
    lattice_in_polygon,
    line_intersection,
    normalize_polygon,
    region_from_polygon,
    scaled_segment,
    segment_intersection,
)
from conftest import CIRCLE, PENTAGON, SEGMENT_QUAD


def test_normalize_example_polygon():
    assert len(PENTAGON.vertices) == 5
    assert set(PENTAGON.vertices) == {(F(18, 5), F(9, 5)), (F(18, 5), F(3, 5)), (F(33, 10), F(21, 20)),
                                  (F(21, 5), F(3, 2)), (F(207, 50), F(99, 100))}
    vs = PENTAGON.vertices
    n = len(vs)
    for i in range(n):
        a, b, c = vs[i], vs[(i + 1) % n], vs[(i + 2) % n]
        assert (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]) > 0


def test_normalize_drops_interior_points():
    tri = normalize_polygon([(0, 0), (1, 0), (0, 1), (F(1, 2), F(1, 4))])
    assert set(tri.vertices) == {(0, 0), (1, 0), (0, 1)}


def test_degenerate_polygons_rejected():
    with pytest.raises(NotAConvexBody):
        normalize_polygon([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(NotAConvexBody):
        normalize_polygon([(1, 1)])
    with pytest.raises(OutOfQuadrant):
        normalize_polygon([(-1, 0), (1, 1), (2, 0)])
    with pytest.raises(DomainError):
        RationalCircle((1, 1), 0)


def test_half_planes_contain_vertices_and_exclude_origin():
    for v in PENTAGON.vertices:
        assert PENTAGON.contains(v)
    assert not PENTAGON.contains((0, 0))
    assert PENTAGON.contains((F(19, 5), F(6, 5)))


def test_circle_cone_tangent_points():
    cone = cone_of(CIRCLE)
    assert isinstance(cone.contact1, PointContact) and cone.contact1.point == (F(32, 25), F(24, 25))
    assert cone.contact2.point == (F(96, 65), F(8, 13))
    assert cone.tau1.primitive == (4, 3) and cone.tau2.primitive == (12, 5)


def test_polygon_cone_vertex_contacts():
    cone = cone_of(PENTAGON)
    assert isinstance(cone.contact1, PointContact) and cone.contact1.point == (F(18, 5), F(9, 5))
    assert isinstance(cone.contact2, PointContact) and cone.contact2.point == (F(18, 5), F(3, 5))


def test_axis_crossing_circle_has_surd_segment():
    cone = cone_of(RationalCircle((2, F(1, 2)), 1))
    assert cone.tau2.primitive == (1, 0)
    c = cone.contact2
    assert isinstance(c, SegmentContact)
    assert c.lo == Surd(2, F(-1, 2), 3) and c.hi == Surd(2, F(1, 2), 3)
    assert not cone.tau1.is_rational


def test_body_ray_intersection():
    seg = body_ray_intersection(CIRCLE, (2, 1))
    assert isinstance(seg, SegmentContact)
    assert (seg.lo, seg.hi) == (F(16, 25), F(4, 5))
    assert body_ray_intersection(CIRCLE, (1, 5)) is None
    pt = body_ray_intersection(PENTAGON, (2, 1))
    assert isinstance(pt, PointContact) and pt.point == (F(18, 5), F(9, 5))


def test_reflection_of_cone():
    cone = cone_of(CIRCLE)
    assert cone_of(CIRCLE.reflect()) == cone.reflect()
    assert cone_of(PENTAGON.reflect()) == cone_of(PENTAGON).reflect()


def test_lattice_enumeration():
    assert len(lattice_in_polygon([(0, 0), (2, 0), (0, 2)])) == 6
    assert enumerate_lattice(region_from_polygon([(0, 0), (1, 0), (1, 1), (0, 1)], open_edges=(0, 1, 2, 3))) == []
    region = convex_hull_region([(0, 0), (13, F(25, 4)), (10, F(5, 4))])
    assert region.contains((4, 1)) and region.contains((7, 3))


def test_segment_helpers():
    assert scaled_segment(2, ((1, 0), (0, 1))) == ((2, 0), (0, 2))
    assert line_intersection((0, 0), (1, 1), (1, 0), (0, 1)) == (1, 1)
    with pytest.raises(NoIntersection):
        line_intersection((0, 0), (1, 1), (1, 0), (2, 2))
    assert segment_intersection(((0, 0), (2, 2)), ((0, 2), (2, 0))) == (1, 1)
    assert segment_intersection(((0, 0), (1, 1)), ((3, 0), (3, 1))) is None


def test_spec_strings_round_trip():
    from cbsemigroup.cli import parse_body_spec

    for body in (CIRCLE, PENTAGON, SEGMENT_QUAD):
        kind = "circle" if isinstance(body, RationalCircle) else "polygon"
        assert parse_body_spec(f"{kind}:{body.spec_string()}") == body
