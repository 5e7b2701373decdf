import threading
from fractions import Fraction as F

from cbsemigroup.semigroup import (
    SemigroupHandle,
    dilation_interval,
    handle_for,
    member,
    member_sbar,
    numerical_generators,
    ray_semigroup,
    ray_tail_threshold,
)
from conftest import CIRCLE, PENTAGON, SEGMENT_QUAD


def test_dilation_interval_circle():
    iv = dilation_interval(CIRCLE, (4, 2))
    assert (iv.lo, iv.hi) == (F(5, 2), F(25, 8))
    assert iv.integers(1) == [3]
    for k in range(1, 11):
        inside = CIRCLE.contains((F(4, k), F(2, k)))
        assert inside == (k == 3)


def test_dilation_interval_origin_and_miss():
    for body in (CIRCLE, PENTAGON, SEGMENT_QUAD):
        iv = dilation_interval(body, (0, 0))
        assert not iv.empty and iv.lo <= 0 and 0 in iv.integers(0, limit=0)
    assert not dilation_interval(PENTAGON, (13, 4)).contains_integer()
    assert dilation_interval(CIRCLE, (1, 5)).empty


def test_membership_examples():
    hc, hp = handle_for(CIRCLE), handle_for(PENTAGON)
    assert not member(hc, (2, 1)) and not member(hc, (3, 2))
    assert member(hp, (31, 13))
    assert not member(hp, (13, 4))
    for h in (hc, hp):
        assert member(h, (0, 0))
        assert not member(h, (-1, 3))


def test_sbar_examples():
    hc, hp = handle_for(CIRCLE), handle_for(PENTAGON)
    assert member_sbar(hc, (2, 1)) and member_sbar(hc, (3, 2))
    assert member_sbar(hp, (13, 4))
    for p in [(4, 2), (31, 13), (32, 24)]:
        assert member_sbar(hc, p)


def test_sbar_rays_of_circle():
    h = handle_for(CIRCLE)
    r1 = ray_semigroup(h, 1, in_sbar=True)
    r2 = ray_semigroup(h, 2, in_sbar=True)
    assert r1.generator_points == ((32, 24),)
    assert r2.generator_points == ((96, 40),)
    assert r1.single_generator and r2.single_generator
    assert r1.period == 8 and r2.period == 8


def test_segment_ray_against_member_scan():
    h = handle_for(SEGMENT_QUAD)
    ray = ray_semigroup(h, 2)
    assert ray.period is None
    p = ray.primitive
    for s in range(1, ray.tail_complete_from + 20):
        assert ray.contains(s) == h.member((s * p[0], s * p[1]))
    assert set(ray.gaps()) == {(s * p[0], s * p[1]) for s in range(1, ray.tail_complete_from)
                               if not h.member((s * p[0], s * p[1]))}


def test_ray_tail_threshold():
    k0, s0 = ray_tail_threshold(F(2), F(3))
    assert k0 == 2
    # every multiple from s0 on fits some dilate [k*2, k*3]
    for s in range(s0, s0 + 50):
        assert any(2 * k <= s <= 3 * k for k in range(1, s + 1))


def test_numerical_generators():
    assert numerical_generators(lambda s: s in (3, 5) or s >= 6, 6) == (3, 5, 7)
    assert numerical_generators(lambda s: s % 3 == 0 or s >= 8, 8) == (3, 8, 10)
    assert numerical_generators(lambda s: s % 1 == 0, 1) == (1,)


def test_generators_computed_once_under_contention():
    h = SemigroupHandle(PENTAGON)
    seen = []
    threads = [threading.Thread(target=lambda: seen.append(h.generators)) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len({id(g) for g in seen}) == 1


def test_generators_are_members():
    for body in (CIRCLE, PENTAGON, SEGMENT_QUAD):
        h = handle_for(body)
        assert all(h.member(g) for g in h.generators)
