"""Exception hierarchy shared by every module of the package."""


class SemigroupError(Exception):
    """Base class for all errors raised by cbsemigroup."""


class DomainError(SemigroupError, ValueError):
    """An argument lies outside the domain of an exact operation."""


class ParseError(SemigroupError, ValueError):
    """A textual body or number description could not be parsed."""


class NotAConvexBody(SemigroupError):
    """The input polygon degenerates to a segment or a point."""


class OutOfQuadrant(SemigroupError):
    """A polygon vertex has a negative coordinate."""


class NotSimplicial(SemigroupError):
    """The body meets the closed positive quadrant in fewer than two points."""


class NotAffine(SemigroupError):
    """The semigroup is not finitely generated (irrational extremal contact)."""


class UnsupportedGeometry(SemigroupError):
    """The configuration is valid but outside what the algorithms handle."""


class Unbounded(SemigroupError):
    """A lattice region to be enumerated is not bounded."""


class NoIntersection(SemigroupError):
    """Two lines that were expected to meet are parallel."""


class GenerationFailed(SemigroupError):
    """A seeded family generator exhausted its retries."""


class InternalConsistencyError(SemigroupError, AssertionError):
    """A runtime check of an imported geometric fact failed."""
