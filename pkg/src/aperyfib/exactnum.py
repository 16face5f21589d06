"""Exact rationals and exact arithmetic in the quadratic field Q(sqrt 5).

Rationals are plain :class:`fractions.Fraction` values (aliased as
``BigRat``).  Elements of Q(sqrt 5) are :class:`QuadRat` triples
``(a, b, d)`` standing for ``(a + b*sqrt(5)) / d`` in canonical form.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

BigRat = Fraction

__all__ = [
    "BigRat",
    "QuadRat",
    "qr_normalize",
    "qr_add",
    "qr_sub",
    "qr_mul",
    "qr_inv",
    "qr_sign",
    "qr_abs",
    "qr_to_decimal",
    "rat_to_sci",
    "as_quadrat",
    "ZERO",
    "ONE",
    "SQRT5",
    "ALPHA",
    "BETA",
]


class QuadRat:
    """Immutable element ``(a + b*sqrt(5)) / d`` of Q(sqrt 5).

    The constructor canonicalizes: ``d > 0`` and ``gcd(a, b, d) == 1``, so
    two values are equal as numbers exactly when their triples are equal.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: int, b: int = 0, d: int = 1) -> None:
        a, b, d = int(a), int(b), int(d)
        if d == 0:
            raise ZeroDivisionError("QuadRat with zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadRat is immutable")

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @classmethod
    def from_rational(cls, x) -> QuadRat:
        x = Fraction(x)
        return cls(x.numerator, 0, x.denominator)

    def is_rational(self) -> bool:
        return self._b == 0

    def to_fraction(self) -> Fraction:
        if self._b:
            raise ValueError(f"{self} is irrational")
        return Fraction(self._a, self._d)

    def conjugate(self) -> QuadRat:
        return QuadRat(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm ``x * conj(x)`` as a rational."""
        return Fraction(self._a * self._a - 5 * self._b * self._b, self._d * self._d)

    def __iter__(self):
        return iter((self._a, self._b, self._d))

    def __repr__(self) -> str:
        return f"QuadRat({self._a}, {self._b}, {self._d})"

    def __str__(self) -> str:
        sign = "-" if self._b < 0 else "+"
        return f"({self._a}{sign}{abs(self._b)}*sqrt(5))/{self._d}"

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self._a, self._b, self._d) == (other._a, other._b, other._d)

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qr_sign(qr_sub(self, other)) < 0

    def __le__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qr_sign(qr_sub(self, other)) <= 0

    def __gt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qr_sign(qr_sub(self, other)) > 0

    def __ge__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qr_sign(qr_sub(self, other)) >= 0

    def __bool__(self) -> bool:
        return bool(self._a or self._b)

    def __neg__(self) -> QuadRat:
        return QuadRat(-self._a, -self._b, self._d)

    def __pos__(self) -> QuadRat:
        return self

    def __abs__(self) -> QuadRat:
        return qr_abs(self)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qr_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qr_sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qr_sub(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qr_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qr_mul(self, qr_inv(other))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qr_mul(other, qr_inv(self))

    def __pow__(self, k: int) -> QuadRat:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else qr_inv(self)
        k = abs(k)
        result = ONE
        while k:
            if k & 1:
                result = qr_mul(result, base)
            k >>= 1
            if k:
                base = qr_mul(base, base)
        return result


def _coerce(x):
    if isinstance(x, QuadRat):
        return x
    if isinstance(x, (int, Rational)):
        return QuadRat.from_rational(x)
    return NotImplemented


def as_quadrat(x) -> QuadRat:
    """Embed an int, Fraction or QuadRat into Q(sqrt 5)."""
    q = _coerce(x)
    if q is NotImplemented:
        raise TypeError(f"cannot embed {type(x).__name__} in Q(sqrt 5)")
    return q


def qr_normalize(a: int, b: int, d: int) -> QuadRat:
    return QuadRat(a, b, d)


def qr_add(x: QuadRat, y: QuadRat) -> QuadRat:
    if x._d == y._d:
        return QuadRat(x._a + y._a, x._b + y._b, x._d)
    return QuadRat(x._a * y._d + y._a * x._d, x._b * y._d + y._b * x._d, x._d * y._d)


def qr_sub(x: QuadRat, y: QuadRat) -> QuadRat:
    return qr_add(x, QuadRat(-y._a, -y._b, y._d))


def qr_mul(x: QuadRat, y: QuadRat) -> QuadRat:
    # (a + b r)(a' + b' r) = (aa' + 5bb') + (ab' + a'b) r,  r = sqrt(5)
    return QuadRat(
        x._a * y._a + 5 * x._b * y._b,
        x._a * y._b + y._a * x._b,
        x._d * y._d,
    )


def qr_inv(x: QuadRat) -> QuadRat:
    n = x._a * x._a - 5 * x._b * x._b
    if n == 0:
        # a^2 = 5 b^2 only for a = b = 0
        raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
    # d / (a + b r) = d (a - b r) / (a^2 - 5 b^2)
    return QuadRat(x._d * x._a, -x._d * x._b, n)


def qr_sign(x: QuadRat) -> int:
    """Exact sign of ``(a + b*sqrt(5)) / d`` using integer comparisons only."""
    a, b = x._a, x._b
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sa == 0:
        return sb
    if sb == 0 or sa == sb:
        return sa
    # opposite signs: the component with the larger square wins
    return sa if a * a > 5 * b * b else sb


def qr_abs(x: QuadRat) -> QuadRat:
    return -x if qr_sign(x) < 0 else x


def _floor_b_sqrt5(e: int) -> int:
    """floor(e * sqrt(5)) for an integer e."""
    r = isqrt(5 * e * e)
    if e >= 0:
        return r
    # e*sqrt(5) is irrational for e != 0, so the floor is strictly below -r
    return -r - 1


def qr_to_decimal(x, digits: int) -> str:
    """Render ``x`` rounded to ``digits`` places after the decimal point.

    Rounding is exact, half away from zero: the nearest integer to
    ``|x| * 10**digits`` comes from one integer square root, no floats.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    x = as_quadrat(x)
    negative = qr_sign(x) < 0
    if negative:
        x = -x
    scale = 10**digits
    # round(v) = floor((2 a T + d + 2 b T sqrt5) / (2 d))
    c = 2 * x._a * scale + x._d
    e = 2 * x._b * scale
    top = c + (_floor_b_sqrt5(e) if e else 0)
    n = top // (2 * x._d)
    whole, frac = divmod(n, scale)
    sign = "-" if negative and n else ""
    return f"{sign}{whole}.{frac:0{digits}d}"


ZERO = QuadRat(0, 0, 1)
ONE = QuadRat(1, 0, 1)
SQRT5 = QuadRat(0, 1, 1)
ALPHA = QuadRat(1, 1, 2)
BETA = QuadRat(1, -1, 2)


def rat_to_sci(x, sig: int = 6) -> str:
    """Scientific rendering of a rational, correctly rounded to ``sig`` significant digits."""
    x = Fraction(x)
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    num, den = x.numerator, x.denominator
    e = (num.bit_length() - den.bit_length()) * 30103 // 100000
    while Fraction(10) ** e > x:
        e -= 1
    while Fraction(10) ** (e + 1) <= x:
        e += 1
    scaled = x / Fraction(10) ** (e - sig + 1)
    mant = int(scaled + Fraction(1, 2))
    if mant >= 10**sig:
        mant //= 10
        e += 1
    digits = str(mant)
    body = digits[0] + ("." + digits[1:] if sig > 1 else "")
    return f"{sign}{body}e{e:+d}"
