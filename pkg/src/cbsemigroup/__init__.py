"""Convex body semigroups in N^2 built from rational circles and polygons."""

from .circle import (
    circle_affineness,
    circle_guarantee_bound,
    circle_interior_gaps,
    circle_is_buchsbaum,
    circle_is_cohen_macaulay,
    circle_min_generators,
)
from .errors import (
    GenerationFailed,
    NotAConvexBody,
    NotAffine,
    NotSimplicial,
    OutOfQuadrant,
    ParseError,
    SemigroupError,
    UnsupportedGeometry,
)
from .exact import Surd, compare, integers_in_interval, parse_rational, primitive_vector
from .families import make_aligned_quad_family, make_triangle_family
from .geometry import ConvexPolygon, RationalCircle, cone_of, normalize_polygon
from .kernels import BACKEND
from .polygon import (
    polygon_gap_comparison,
    polygon_is_buchsbaum,
    polygon_is_cohen_macaulay,
    polygon_min_generators,
    polygon_skeleton,
)
from .semigroup import (
    SemigroupHandle,
    dilation_interval,
    handle_for,
    member,
    member_sbar,
    ray_semigroup,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "circle_affineness",
    "circle_guarantee_bound",
    "circle_interior_gaps",
    "circle_is_buchsbaum",
    "circle_is_cohen_macaulay",
    "circle_min_generators",
    "compare",
    "cone_of",
    "ConvexPolygon",
    "dilation_interval",
    "GenerationFailed",
    "handle_for",
    "integers_in_interval",
    "make_aligned_quad_family",
    "make_triangle_family",
    "member",
    "member_sbar",
    "normalize_polygon",
    "NotAConvexBody",
    "NotAffine",
    "NotSimplicial",
    "OutOfQuadrant",
    "parse_rational",
    "ParseError",
    "polygon_gap_comparison",
    "polygon_is_buchsbaum",
    "polygon_is_cohen_macaulay",
    "polygon_min_generators",
    "polygon_skeleton",
    "primitive_vector",
    "RationalCircle",
    "ray_semigroup",
    "SemigroupError",
    "SemigroupHandle",
    "Surd",
    "UnsupportedGeometry",
]
