"""Exact number types: rationals and real quadratic irrationals.

Rationals are plain :class:`fractions.Fraction` values.  A :class:`Surd`
represents ``a + b*sqrt(d)`` with rational ``a``, ``b`` and ``d >= 0`` and is
used wherever a ray meets a circle.  Every comparison is decided by sign
analysis and squaring; no floating point is involved.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Union

from .errors import DomainError, ParseError

Number = Union[int, Fraction, "Surd"]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, _RationalABC):
        return Fraction(x)
    if isinstance(x, Surd) and x.is_rational:
        return x.a
    raise DomainError(f"not a rational value: {x!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer or an exact decimal such as ``"3.6"``."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    s = text.strip()
    if not s:
        raise ParseError("empty number")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse number {text!r}") from exc


def format_rational(q) -> str:
    return str(as_fraction(q))


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, m)`` with ``n == s*s*m`` after removing small square factors."""
    if n == 0:
        return 0, 0
    r = math.isqrt(n)
    if r * r == n:
        return r, 1
    s = 1
    for p in _SMALL_PRIMES:
        pp = p * p
        while n % pp == 0:
            n //= pp
            s *= p
    return s, n


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_single(a: Fraction, b: Fraction, d: Fraction) -> int:
    """Sign of ``a + b*sqrt(d)``."""
    sb = _sign(b) if d else 0
    sa = _sign(a)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    diff = a * a - b * b * d
    if diff > 0:
        return sa
    if diff < 0:
        return sb
    return 0


def _sign_double(x: Fraction, y: Fraction, p: Fraction, z: Fraction, q: Fraction) -> int:
    """Sign of ``x + y*sqrt(p) + z*sqrt(q)``."""
    if z == 0 or q == 0:
        return _sign_single(x, y, p)
    if y == 0 or p == 0:
        return _sign_single(x, z, q)
    if p == q:
        return _sign_single(x, y + z, p)
    su = _sign_single(x, y, p)
    sv = _sign(z)
    if su == 0:
        return sv
    if su == sv:
        return su
    # |x + y sqrt p| against |z sqrt q|, squared
    s = _sign_single(x * x + y * y * p - z * z * q, 2 * x * y, p)
    if s > 0:
        return su
    if s < 0:
        return sv
    return 0


class Surd:
    """The real number ``a + b*sqrt(d)``.

    ``d`` is kept as a non-square positive integer whenever ``b != 0``; a
    value whose radical vanishes or is a perfect square collapses to a
    rational (``b == 0`` and ``d == 0``).
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=0):
        a = as_fraction(a)
        b = as_fraction(b)
        d = as_fraction(d)
        if d < 0:
            raise DomainError(f"negative radicand {d}")
        if b != 0 and d != 0:
            # sqrt(p/q) = sqrt(p*q)/q
            n = d.numerator * d.denominator
            b = b / d.denominator
            s, m = _squarefree_split(n)
            b = b * s
            if m == 1:
                a, b, m = a + b, Fraction(0), 0
            d = Fraction(m)
        else:
            b, d = Fraction(0), Fraction(0)
        if b == 0:
            d = Fraction(0)
        self.a, self.b, self.d = a, b, d

    @classmethod
    def sqrt(cls, x) -> "Surd":
        return cls(0, 1, x)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        return _sign_single(self.a, self.b, self.d)

    def __repr__(self) -> str:
        if self.is_rational:
            return f"Surd({self.a})"
        return f"Surd({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        rad = f"sqrt({self.d})"
        b = f"{self.b}*{rad}" if self.b != 1 else rad
        if self.a == 0:
            return b if self.b != -1 else f"-{rad}"
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        tail = rad if mag == 1 else f"{mag}*{rad}"
        return f"{self.a} {sign} {tail}"

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(float(self.d))

    # arithmetic -----------------------------------------------------------

    def _common(self, other: "Surd") -> Fraction:
        if self.is_rational:
            return other.d
        if other.is_rational or other.d == self.d:
            return self.d
        raise DomainError(f"mixed radicals sqrt({self.d}) and sqrt({other.d})")

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._common(other)
        return Surd(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._common(other)
        return Surd(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def reciprocal(self) -> "Surd":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("reciprocal of zero")
        c = self.conjugate()
        return Surd(c.a / n, c.b / n, c.d)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.reciprocal()

    # ordering -------------------------------------------------------------

    def _cmp(self, other) -> int:
        other = _coerce(other)
        return _sign_double(self.a - other.a, self.b, self.d, -other.b, other.d)

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._cmp(o) == 0

    def __hash__(self):
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __floor__(self) -> int:
        if self.is_rational:
            return math.floor(self.a)
        m = self.b * self.b * self.d
        root = Fraction(math.isqrt(m.numerator * m.denominator), m.denominator)
        guess = math.floor(self.a + (root if self.b > 0 else -root))
        while Surd(guess + 1) <= self:
            guess += 1
        while Surd(guess) > self:
            guess -= 1
        return guess

    def __ceil__(self) -> int:
        return -math.floor(-self)


def _coerce(x):
    if isinstance(x, Surd):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, _RationalABC):
        return Surd(x)
    return NotImplemented


def to_surd(x) -> Surd:
    s = _coerce(x)
    if s is NotImplemented:
        raise DomainError(f"not an exact number: {x!r}")
    return s


def compare(u, v) -> int:
    """Exact three-way comparison: -1, 0 or 1 as ``u <, ==, > v``."""
    return to_surd(u)._cmp(to_surd(v))


def exact_floor(x) -> int:
    return math.floor(to_surd(x)) if isinstance(x, Surd) else math.floor(as_fraction(x))


def exact_ceil(x) -> int:
    return math.ceil(to_surd(x)) if isinstance(x, Surd) else math.ceil(as_fraction(x))


def integers_in_interval(lo, hi, floor_at: int | None = None) -> list[int]:
    """Integers ``k`` with ``max(lo, floor_at) <= k <= hi``.

    ``hi`` may be ``None`` for an unbounded interval, in which case a
    ``DomainError`` is raised since the answer would be infinite.
    """
    if hi is None:
        raise DomainError("unbounded interval has infinitely many integers")
    start = exact_ceil(lo)
    if floor_at is not None:
        start = max(start, floor_at)
    stop = exact_floor(hi)
    return list(range(start, stop + 1))


def primitive_vector(direction: Iterable) -> tuple[int, int]:
    """The coprime integer vector on the ray spanned by a rational direction."""
    x, y = (as_fraction(c) for c in direction)
    if x == 0 and y == 0:
        raise DomainError("zero direction has no primitive vector")
    if x < 0 or y < 0:
        raise DomainError("direction must lie in the closed positive quadrant")
    den = math.lcm(x.denominator, y.denominator)
    ix, iy = int(x * den), int(y * den)
    g = math.gcd(ix, iy)
    return ix // g, iy // g


def rational_sqrt_bounds(x, scale: int = 1 << 20) -> tuple[Fraction, Fraction]:
    """Rationals ``lo <= sqrt(x) <= hi`` with gap at most ``1/scale``."""
    x = as_fraction(x)
    if x < 0:
        raise DomainError("negative radicand")
    n = x.numerator * x.denominator * scale * scale
    r = math.isqrt(n)
    lo = Fraction(r, x.denominator * scale)
    hi = lo if r * r == n else Fraction(r + 1, x.denominator * scale)
    return lo, hi


def rational_square_root(x) -> Fraction | None:
    """The rational square root of ``x`` or ``None`` if it is irrational."""
    x = as_fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None
