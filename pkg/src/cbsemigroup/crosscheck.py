"""Run the brute-force oracles against the main algorithms on one body."""

from __future__ import annotations

import math

from .circle import circle_is_buchsbaum, circle_is_cohen_macaulay
from .geometry import Body, ConvexPolygon, norm2
from .oracle import (
    TruncatedSemigroup,
    brute_cm_check,
    brute_min_generators,
    brute_sbar_cm,
    certified_cap,
)
from .polygon import polygon_is_buchsbaum, polygon_is_cohen_macaulay
from .semigroup import handle_for


def oracle_caps(body: Body, radius2: int) -> tuple[int, int]:
    """Caps certifying the generator window and the Cohen-Macaulay scans.

    The scans look at ``a + n + g`` with ``|a|^2 <= radius2``, ``n`` a ray
    element and ``g`` a generator, all bounded by the largest generator.
    """
    gens = handle_for(body).generators
    gmax = max(math.isqrt(norm2(g)) + 1 for g in gens.elements)
    return certified_cap(body, (gmax + 2) ** 2), certified_cap(body, (math.isqrt(radius2) + 3 * gmax + 6) ** 2)


def verdicts(body: Body) -> tuple[bool, bool]:
    if isinstance(body, ConvexPolygon):
        return polygon_is_cohen_macaulay(body)[0], polygon_is_buchsbaum(body).verdict
    return circle_is_cohen_macaulay(body)[0], circle_is_buchsbaum(body).verdict


def cross_validate(body: Body, radius2: int = 2500) -> dict:
    handle = handle_for(body)
    gen_cap, scan_cap = oracle_caps(body, radius2)
    ts = TruncatedSemigroup.build(body, scan_cap)
    r = math.isqrt(radius2)
    member_mismatch = [
        (x, y)
        for x in range(r + 1)
        for y in range(r + 1)
        if x * x + y * y <= radius2 and handle.member((x, y)) != ts.contains((x, y))
    ]
    brute_gens = brute_min_generators(body, gen_cap)
    cm, bb = verdicts(body)
    ocm = brute_cm_check(body, radius2, scan_cap)
    osb = brute_sbar_cm(body, radius2, scan_cap)
    report = {
        "caps": [gen_cap, scan_cap],
        "member_mismatches": member_mismatch,
        "generators_agree": brute_gens == set(handle.generators.elements),
        "cohen_macaulay": [cm, ocm.cohen_macaulay],
        "buchsbaum": [bb, osb.cohen_macaulay],
        "oracle_cm_witness": ocm.witness,
        "oracle_sbar_witness": osb.witness,
    }
    report["agree"] = (
        not member_mismatch and report["generators_agree"] and cm == ocm.cohen_macaulay and bb == osb.cohen_macaulay
    )
    return report
