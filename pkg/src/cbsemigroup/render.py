"""SVG figures of a semigroup over a rectangular lattice window."""

from __future__ import annotations

from fractions import Fraction

from .geometry import Body, ConvexPolygon
from .semigroup import handle_for

UNIT = 10
MARGIN = 20


def _fmt(v) -> str:
    return f"{float(v):.3f}".rstrip("0").rstrip(".")


class _Canvas:
    def __init__(self, width: int, height: int):
        self.width, self.height = width, height
        self.parts: list[str] = []

    def xy(self, p):
        return MARGIN + float(p[0]) * UNIT, MARGIN + (self.height - float(p[1])) * UNIT

    def line(self, a, b, cls):
        (x1, y1), (x2, y2) = self.xy(a), self.xy(b)
        self.parts.append(f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')

    def polygon(self, pts, cls):
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(self.xy, pts))
        self.parts.append(f'<polygon class="{cls}" points="{coords}"/>')

    def circle(self, c, r, cls):
        x, y = self.xy(c)
        self.parts.append(f'<circle class="{cls}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}"/>')

    def svg(self) -> str:
        w = self.width * UNIT + 2 * MARGIN
        h = self.height * UNIT + 2 * MARGIN
        style = (
            ".body{fill:#bbb;fill-opacity:.35;stroke:#555;stroke-width:.6}"
            ".ray{stroke:#000;stroke-width:1}"
            ".nu{stroke:#06c;stroke-width:.8;stroke-dasharray:4 2}"
            ".tri{fill:#999;fill-opacity:.3;stroke:#666;stroke-width:.5}"
            ".strip{fill:#ddd;fill-opacity:.5;stroke:#aaa;stroke-width:.5}"
            ".member{fill:#222}.gap{fill:#fff;stroke:#c00;stroke-width:1.2}"
            ".raygap{fill:#fff;stroke:#888;stroke-width:.6}.q{fill:#06c}"
        )
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">'
            f"<style>{style}</style>"
        )
        return "\n".join([head, *self.parts, "</svg>"]) + "\n"


def _clip_ray(direction, width, height):
    dx, dy = Fraction(direction[0]), Fraction(direction[1])
    ts = []
    if dx > 0:
        ts.append(Fraction(width) / dx)
    if dy > 0:
        ts.append(Fraction(height) / dy)
    t = min(ts)
    return (dx * t, dy * t)


def render_svg(body: Body, width: int, height: int, skeleton: bool = False) -> str:
    """Dilates of the body, extremal rays and lattice points in ``[0,width] x [0,height]``.

    Interior gaps are drawn in the ``gap`` class; gaps on the extremal rays,
    infinite in number for tangent contacts, get the fainter ``raygap``.
    """
    canvas = _Canvas(width, height)
    if width <= 0 or height <= 0:
        return canvas.svg()
    handle = handle_for(body)
    cone = handle.cone

    k = 1
    while True:
        if isinstance(body, ConvexPolygon):
            pts = [(k * x, k * y) for x, y in body.vertices]
            if min(p[0] for p in pts) > width or min(p[1] for p in pts) > height:
                break
            canvas.polygon(pts, "body")
        else:
            c, r = body.center, body.radius
            if k * (c[0] - r) > width or k * (c[1] - r) > height:
                break
            canvas.circle((k * c[0], k * c[1]), float(k * r) * UNIT, "body")
        k += 1

    if skeleton and isinstance(body, ConvexPolygon):
        _skeleton_layer(canvas, body, width, height)

    for which in (1, 2):
        canvas.line((0, 0), _clip_ray(cone.ray(which).direction, width, height), "ray")

    grid = handle.member_grid(width, height)
    for x in range(width + 1):
        for y in range(height + 1):
            if grid[x, y]:
                canvas.circle((x, y), 1.6, "member")
            elif cone.in_interior((x, y)):
                canvas.circle((x, y), 2.0, "gap")
            elif cone.contains((x, y)):
                canvas.circle((x, y), 1.2, "raygap")
    return canvas.svg()


def _skeleton_layer(canvas, poly, width, height):
    from .polygon import polygon_skeleton

    skel = polygon_skeleton(poly)
    for r in skel.rays:
        if r.contact == "point":
            canvas.polygon(r.strip_period, "strip")
            canvas.polygon(r.upsilon, "tri")
            start = r.nu[0]
            end = (start[0] + r.nu[1][0] * 4 * r.j, start[1] + r.nu[1][1] * 4 * r.j)
            canvas.line(start, end, "nu")
    canvas.polygon(skel.T, "tri")
    canvas.circle(skel.Q, 3, "q")
