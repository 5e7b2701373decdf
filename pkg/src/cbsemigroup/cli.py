"""``cbsg``: command-line access to membership, generators and ring-property decisions.

Every subcommand prints one JSON document.  The ``elapsed_ms`` field is the
only part that varies between identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .circle import (
    circle_affineness,
    circle_guarantee_bound,
    circle_interior_gaps,
    circle_is_buchsbaum,
    circle_is_cohen_macaulay,
)
from .errors import (
    DomainError,
    GenerationFailed,
    NotAConvexBody,
    NotAffine,
    NotSimplicial,
    OutOfQuadrant,
    ParseError,
    UnsupportedGeometry,
)
from .exact import exact_ceil, parse_rational
from .families import make_aligned_quad_family, make_triangle_family
from .geometry import Body, ConvexPolygon, RationalCircle, normalize_polygon
from .polygon import polygon_gap_comparison, polygon_is_buchsbaum, polygon_is_cohen_macaulay
from .semigroup import handle_for, ray_semigroup

EXIT_OK, EXIT_INPUT, EXIT_GEOMETRY, EXIT_ORACLE, EXIT_FAMILY = 0, 2, 3, 4, 5

INPUT_ERRORS = (ParseError, DomainError, NotAConvexBody, OutOfQuadrant)
GEOMETRY_ERRORS = (NotAffine, NotSimplicial, UnsupportedGeometry)


class OracleDisagreement(Exception):
    pass


# --------------------------------------------------------------------------
# parsing


def parse_point(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected 'x,y', got {text!r}")
    return tuple(parse_rational(t) for t in parts)


def parse_lattice_point(text: str) -> tuple:
    p = parse_point(text)
    if any(c.denominator != 1 for c in p):
        raise ParseError(f"lattice point needs integer coordinates: {text!r}")
    return tuple(int(c) for c in p)


def parse_polygon(text: str) -> ConvexPolygon:
    pts = [parse_point(t) for t in text.split(";") if t.strip()]
    return normalize_polygon(pts)


def parse_body_spec(line: str) -> Body:
    """``circle:a,b|r`` or ``polygon:x1,y1;x2,y2;...``."""
    kind, sep, rest = line.strip().partition(":")
    if not sep:
        raise ParseError(f"missing kind prefix in {line!r}")
    kind = kind.strip().lower()
    if kind == "circle":
        center, bar, radius = rest.partition("|")
        if not bar:
            raise ParseError(f"circle spec needs 'a,b|r': {rest!r}")
        return RationalCircle(parse_point(center), parse_rational(radius))
    if kind == "polygon":
        return parse_polygon(rest)
    raise ParseError(f"unknown body kind {kind!r}")


def body_spec(body: Body) -> str:
    return ("circle:" if isinstance(body, RationalCircle) else "polygon:") + body.spec_string()


def bodies_from_args(args) -> list[Body]:
    if args.spec_file:
        try:
            with open(args.spec_file, encoding="utf-8") as fh:
                lines = [ln for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        except OSError as exc:
            raise ParseError(f"cannot read {args.spec_file}: {exc.strerror}") from exc
        return [parse_body_spec(ln) for ln in lines]
    if args.circle is not None:
        if args.radius is None:
            raise ParseError("--circle needs --radius")
        return [RationalCircle(parse_point(args.circle), parse_rational(args.radius))]
    if args.polygon is not None:
        return [parse_polygon(args.polygon)]
    raise ParseError("give a body with --circle/--radius, --polygon or --spec-file")


# --------------------------------------------------------------------------
# serialization


def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in x]
    return str(x)


def _points(points):
    return [list(p) for p in points]


def _ray_report(ray):
    return {
        "primitive": list(ray.primitive),
        "generators": _points(ray.generator_points),
        "single_generator": ray.single_generator,
    }


# --------------------------------------------------------------------------
# commands


def _oracle_report(body):
    from .crosscheck import cross_validate

    rep = cross_validate(body)
    if not rep["agree"]:
        raise OracleDisagreement(rep)
    return rep


def cmd_gens(body, args):
    gens = handle_for(body).generators
    doc = {"generators": _points(gens.elements), "count": len(gens), "ray_elements": [list(gens.ray1), list(gens.ray2)]}
    if args.oracle_check:
        from .crosscheck import oracle_caps
        from .oracle import brute_min_generators

        cap = oracle_caps(body, 0)[0]
        brute = brute_min_generators(body, cap)
        doc["oracle"] = {"cap": cap, "agree": brute == set(gens.elements)}
        if not doc["oracle"]["agree"]:
            raise OracleDisagreement(doc)
    return doc


def cmd_member(body, args):
    if args.point is None:
        raise ParseError("member needs --point x,y")
    p = parse_lattice_point(args.point)
    handle = handle_for(body)
    doc = {"point": list(p), "member": handle.member(p)}
    if args.witnesses:
        from .semigroup import dilation_interval

        iv = dilation_interval(body, p)
        doc["dilation_interval"] = None if iv.empty else [str(iv.lo), None if iv.hi is None else str(iv.hi)]
        ks = iv.integers(floor_at=1, limit=exact_ceil(iv.lo) + 16) if not iv.empty else []
        doc["dilations"] = ks[:16]
    if args.oracle_check:
        from .oracle import brute_member, certified_cap

        cap = certified_cap(body, p[0] ** 2 + p[1] ** 2 + 1)
        doc["oracle"] = {"cap": cap, "member": brute_member(body, p, cap)}
        if doc["oracle"]["member"] != doc["member"]:
            raise OracleDisagreement(doc)
    return doc


def cmd_affine(body, args):
    if isinstance(body, ConvexPolygon):
        handle_for(body)
        return {"affine": True, "reason": "rational vertices give rational extremal rays"}
    verdict = circle_affineness(body)
    doc = {"affine": verdict.affine, "reason": verdict.reason}
    if args.witnesses:
        doc["witnesses"] = _points(verdict.witnesses)
        if verdict.affine:
            g = circle_guarantee_bound(body)
            doc["guarantee"] = {"l1": list(g.l1), "l2": list(g.l2), "bound": g.bound}
    return doc


def cmd_cm(body, args):
    if isinstance(body, ConvexPolygon):
        verdict, witness = polygon_is_cohen_macaulay(body)
    else:
        verdict, witness = circle_is_cohen_macaulay(body)
    doc = {"cohen_macaulay": verdict, "witness": None if witness is None else list(witness)}
    if args.witnesses:
        gens = handle_for(body).generators
        doc["ray_elements"] = [list(gens.ray1), list(gens.ray2)]
    if args.oracle_check:
        rep = _oracle_report(body)
        doc["oracle"] = {"cohen_macaulay": rep["cohen_macaulay"][1], "witness": rep["oracle_cm_witness"]}
    return doc


def cmd_buchsbaum(body, args):
    if isinstance(body, ConvexPolygon):
        cert = polygon_is_buchsbaum(body)
        doc = {"buchsbaum": cert.verdict, "branch": cert.branch}
        if args.witnesses:
            comp = cert.comparison
            doc["certificate"] = {
                "case": comp.case,
                "j": comp.j,
                "T": _points(comp.T),
                "interior_equal": comp.equal,
                "strip_gaps": _points(comp.strip_gaps),
                "upsilon_j_gaps": [[list(p), ok] for p, ok in comp.upsilon_j_gaps],
                "upsilon_gaps": [[list(p), ok] for p, ok in comp.upsilon_gaps],
                "sbar_rays": [_ray_report(r) for r in cert.ray_reports],
                "n_prime": _points(cert.n_prime),
                "upsilon_prime": _points(cert.upsilon_prime),
            }
    else:
        cert = circle_is_buchsbaum(body)
        doc = {"buchsbaum": cert.verdict}
        if args.witnesses:
            doc["certificate"] = {
                "interior_gaps": [[list(p), ok] for p, ok in cert.gap_witnesses],
                "sbar_rays": [_ray_report(r) for r in cert.ray_reports],
                "primitive_in_sbar": list(cert.primitive_in_sbar),
                "criteria_agree": cert.criteria_agree,
            }
    if args.oracle_check:
        rep = _oracle_report(body)
        doc["oracle"] = {"buchsbaum": rep["buchsbaum"][1], "witness": rep["oracle_sbar_witness"]}
    return doc


def cmd_gaps(body, args):
    handle = handle_for(body)
    if isinstance(body, ConvexPolygon):
        comp = polygon_gap_comparison(body)
        doc = {
            "gaps": [list(p) for p, _ in comp.upsilon_gaps],
            "interior_equal": comp.equal,
            "upsilon_j_gaps": [list(p) for p, _ in comp.upsilon_j_gaps],
            "strip_gaps": _points(comp.strip_gaps),
        }
        if args.witnesses:
            doc["in_sbar"] = {
                "gaps": [ok for _, ok in comp.upsilon_gaps],
                "upsilon_j_gaps": [ok for _, ok in comp.upsilon_j_gaps],
            }
    else:
        gaps = circle_interior_gaps(body)
        doc = {"gaps": _points(gaps)}
        if args.witnesses:
            g = circle_guarantee_bound(body)
            doc["guarantee"] = {"l1": list(g.l1), "l2": list(g.l2), "bound": g.bound}
            doc["in_sbar"] = [handle.member_sbar(p) for p in gaps]
    doc["rays"] = [_ray_report(ray_semigroup(handle, w)) for w in (1, 2)]
    return doc


def cmd_render(body, args):
    from .render import render_svg

    if not args.out:
        raise ParseError("render needs --out")
    w, h = (parse_lattice_point(args.window) if args.window else (60, 40))
    svg = render_svg(body, w, h, skeleton=args.skeleton)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        raise ParseError(f"cannot write {args.out}: {exc.strerror}") from exc
    return {"out": args.out, "window": [w, h], "skeleton": args.skeleton}


def cmd_oracle(body, args):
    from .crosscheck import cross_validate

    rep = cross_validate(body, args.radius2)
    if not rep["agree"]:
        raise OracleDisagreement(rep)
    return rep


COMMANDS = {
    "gens": cmd_gens,
    "member": cmd_member,
    "affine": cmd_affine,
    "cm": cmd_cm,
    "buchsbaum": cmd_buchsbaum,
    "gaps": cmd_gaps,
    "render": cmd_render,
    "oracle": cmd_oracle,
}


def cmd_family(args):
    make = make_triangle_family if args.kind == "triangle" else make_aligned_quad_family
    rows = []
    for i in range(args.count):
        poly = make(args.seed * 100003 + i)
        bb = polygon_is_buchsbaum(poly).verdict
        row = {"spec": body_spec(poly), "buchsbaum": bb}
        if args.kind == "triangle":
            row["cohen_macaulay"] = polygon_is_cohen_macaulay(poly)[0]
        rows.append(row)
    ok = all(r["buchsbaum"] and r.get("cohen_macaulay", True) for r in rows)
    if not ok:
        raise GenerationFailed("a family member violated its guaranteed verdict")
    return {"kind": args.kind, "count": args.count, "seed": args.seed, "bodies": rows, "all_true": ok}


# --------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cbsg", description="Convex body semigroups in N^2.")
    sub = parser.add_subparsers(dest="command", required=True)

    body = argparse.ArgumentParser(add_help=False)
    body.add_argument("--circle", metavar="A,B", help="circle center")
    body.add_argument("--radius", metavar="R", help="circle radius")
    body.add_argument("--polygon", metavar="X,Y;...", help="polygon vertices")
    body.add_argument("--spec-file", metavar="PATH", help="one body spec per line")
    body.add_argument("--witnesses", action="store_true", help="include certificates")
    body.add_argument("--oracle-check", action="store_true", help="cross-check with the brute-force oracle")

    for name in ("gens", "affine", "cm", "buchsbaum", "gaps"):
        sub.add_parser(name, parents=[body])
    sub.add_parser("member", parents=[body]).add_argument("--point", metavar="X,Y")
    rp = sub.add_parser("render", parents=[body])
    rp.add_argument("--out", metavar="PATH")
    rp.add_argument("--window", metavar="W,H")
    rp.add_argument("--skeleton", action="store_true")
    op = sub.add_parser("oracle", parents=[body])
    op.add_argument("--radius2", type=int, default=2500)

    fp = sub.add_parser("family")
    fp.add_argument("--kind", choices=("triangle", "aligned-quad"), required=True)
    fp.add_argument("--count", type=int, default=10)
    fp.add_argument("--seed", type=int, default=0)
    return parser


def _emit(doc, start):
    doc = dict(jsonable(doc))
    doc["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    print(json.dumps(doc, sort_keys=True))


def _fail(code, kind, exc):
    print(json.dumps({"error": kind, "reason": str(exc)}, sort_keys=True), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        if args.command == "family":
            if args.count < 0:
                raise ParseError("--count must be non-negative")
            _emit(cmd_family(args), start)
            return EXIT_OK
        results = []
        for body in bodies_from_args(args):
            doc = {"command": args.command, "input": body_spec(body)}
            doc.update(COMMANDS[args.command](body, args))
            results.append(doc)
    except INPUT_ERRORS as exc:
        return _fail(EXIT_INPUT, type(exc).__name__, exc)
    except GEOMETRY_ERRORS as exc:
        return _fail(EXIT_GEOMETRY, type(exc).__name__, exc)
    except OracleDisagreement as exc:
        print(json.dumps(jsonable({"error": "OracleDisagreement", "report": exc.args[0]}), sort_keys=True))
        return EXIT_ORACLE
    except GenerationFailed as exc:
        return _fail(EXIT_FAMILY, type(exc).__name__, exc)
    if len(results) == 1:
        _emit(results[0], start)
    else:
        _emit({"results": results}, start)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
