import random

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from cbsemigroup.circle import (
    circle_guarantee_bound,
    circle_interior_gaps,
    circle_is_buchsbaum,
    circle_is_cohen_macaulay,
)
from cbsemigroup.errors import NotAConvexBody, OutOfQuadrant
from cbsemigroup.geometry import ConvexPolygon, normalize_polygon
from cbsemigroup.oracle import _distance2_lower, brute_member, certified_cap
from cbsemigroup.polygon import polygon_is_buchsbaum, polygon_is_cohen_macaulay, polygon_skeleton, translate_gaps
from cbsemigroup.semigroup import dilation_interval, handle_for
from corpus import CIRCLES, CORPUS, POLYGONS


def _swap(p):
    return (p[1], p[0])


@pytest.mark.parametrize("name", sorted(CIRCLES))
def test_guarantee_soundness(name):
    body = CIRCLES[name]
    g = circle_guarantee_bound(body)
    h = handle_for(body)
    rng = random.Random(name)
    # sample a box reaching several times past the hyperbola along both rays
    reach = int(4 * g.bound) + 40
    hits = 0
    while hits < 1000:
        p = (rng.randint(0, reach), rng.randint(0, reach))
        u, v = g.forms(p)
        if u >= 1 and v >= 1 and u * v >= g.bound:
            assert h.member(p), p
            hits += 1


@pytest.mark.parametrize("name", sorted(POLYGONS))
def test_skeleton_covers_cone(name):
    body = POLYGONS[name]
    skel = polygon_skeleton(body)
    cone = handle_for(body).cone
    rng = random.Random(name)
    seen = 0
    while seen < 500:
        p = (rng.randint(0, 100), rng.randint(0, 100))
        if p[0] ** 2 + p[1] ** 2 > 10**4 or not cone.contains(p):
            continue
        assert skel.piece(p) is not None, p
        seen += 1


def _point_rays(name):
    skel = polygon_skeleton(POLYGONS[name])
    return [(name, r.which) for r in skel.rays if r.contact == "point"]


@pytest.mark.parametrize("name,which", [c for n in sorted(POLYGONS) for c in _point_rays(n)])
def test_strip_periodicity(name, which):
    body = POLYGONS[name]
    h = handle_for(body)
    skel = polygon_skeleton(body)
    r = skel.ray(which)
    for base in range(r.period):
        gaps = translate_gaps(h, skel, which, base)
        for k in (1, 2):
            moved = sorted((x + k * r.n[0], y + k * r.n[1]) for x, y in gaps)
            assert moved == translate_gaps(h, skel, which, base + k * r.period)


def _verdicts(body):
    if isinstance(body, ConvexPolygon):
        return polygon_is_cohen_macaulay(body)[0], polygon_is_buchsbaum(body).verdict
    return circle_is_cohen_macaulay(body)[0], circle_is_buchsbaum(body).verdict


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_reflection_equivariance(name):
    body = CORPUS[name]
    mirror = body.reflect()
    h, hm = handle_for(body), handle_for(mirror)
    assert set(hm.generators.elements) == {_swap(g) for g in h.generators.elements}
    assert hm.generators.ray1 == _swap(h.generators.ray2)
    assert _verdicts(mirror) == _verdicts(body)
    for x in range(30):
        for y in range(30):
            assert hm.member((y, x)) == h.member((x, y))
            assert hm.member_sbar((y, x)) == h.member_sbar((x, y))
    if not isinstance(body, ConvexPolygon):
        assert sorted(map(_swap, circle_interior_gaps(body))) == sorted(circle_interior_gaps(mirror))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_semigroup_chain(name):
    body = CORPUS[name]
    h = handle_for(body)
    for x in range(51):
        for y in range(51):
            if x * x + y * y > 2500:
                continue
            p = (x, y)
            if h.member(p):
                assert h.member_sbar(p), p
            if h.member_sbar(p):
                assert h.cone.contains(p), p


coord = st.fractions(min_value=0, max_value=6, max_denominator=5)


@st.composite
def small_polygons(draw):
    pts = draw(st.lists(st.tuples(coord, coord), min_size=3, max_size=5))
    try:
        body = normalize_polygon(pts)
    except (NotAConvexBody, OutOfQuadrant):
        assume(False)
    # bodies near O need huge oracle caps
    assume(_distance2_lower(body) >= 1)
    return body


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(small_polygons())
def test_member_matches_brute_on_random_polygons(body):
    h = handle_for(body)
    cap = certified_cap(body, 800)
    for x in range(29):
        for y in range(29):
            if x * x + y * y <= 800:
                assert h.member((x, y)) == brute_member(body, (x, y), cap)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(small_polygons(), st.integers(1, 5))
def test_dilation_interval_scales_on_a_ray(body, m):
    cone = handle_for(body).cone
    p = cone.tau1.primitive
    q = (m * p[0] + 1, m * p[1])
    if not cone.contains(q):
        return
    a = dilation_interval(body, q)
    b = dilation_interval(body, (2 * q[0], 2 * q[1]))
    assert a.empty == b.empty
    if not a.empty:
        assert b.lo == 2 * a.lo
        assert (a.hi is None and b.hi is None) or b.hi == 2 * a.hi
