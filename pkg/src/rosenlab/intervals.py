"""Exact interval arithmetic with rational endpoints.

Every certified real computation in this package reduces to arithmetic on
closed intervals [lo, hi] with Fraction endpoints.  Rationals are closed
under +, -, *, /, so nothing here ever rounds; the only outward rounding
in the whole pipeline happens at the mpmath boundary (trig constants and
logarithms), and there the rounding is directed.
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath import iv
from mpmath import libmp

_ZERO = Fraction(0)


def _mpf_to_fraction(t) -> Fraction:
    """Exact value of an mpmath raw-mpf tuple as a Fraction."""
    p, q = libmp.to_rational(t)
    return Fraction(int(p), int(q))


class RatInterval:
    """Closed interval with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("RatInterval is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def point(cls, x) -> "RatInterval":
        return cls(x, x)

    @classmethod
    def from_iv(cls, x) -> "RatInterval":
        """Enclosure of an mpmath.iv number (exact endpoint conversion)."""
        lo, hi = x._mpi_
        return cls(_mpf_to_fraction(lo), _mpf_to_fraction(hi))

    # -- queries ------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def overlaps(self, other: "RatInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def sign(self):
        """+1 / -1 if certified, None if the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None

    def __repr__(self):
        return f"RatInterval({self.lo!r}, {self.hi!r})"

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, RatInterval):
            return RatInterval(self.lo + other.lo, self.hi + other.hi)
        other = Fraction(other)
        return RatInterval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        if isinstance(other, RatInterval):
            return RatInterval(self.lo - other.hi, self.hi - other.lo)
        other = Fraction(other)
        return RatInterval(self.lo - other, self.hi - other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatInterval):
            ps = (self.lo * other.lo, self.lo * other.hi,
                  self.hi * other.lo, self.hi * other.hi)
            return RatInterval(min(ps), max(ps))
        other = Fraction(other)
        if other >= 0:
            return RatInterval(self.lo * other, self.hi * other)
        return RatInterval(self.hi * other, self.lo * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RatInterval):
            if other.contains_zero():
                raise ZeroDivisionError("interval denominator straddles zero")
            inv = RatInterval(1 / other.hi, 1 / other.lo)
            return self * inv
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError
        if other > 0:
            return RatInterval(self.lo / other, self.hi / other)
        return RatInterval(self.hi / other, self.lo / other)

    def __rtruediv__(self, other):
        if self.contains_zero():
            raise ZeroDivisionError("interval denominator straddles zero")
        return RatInterval(Fraction(other)) / self

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RatInterval(_ZERO, max(-self.lo, self.hi))

    def hull(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(min(self.lo, other.lo), max(self.hi, other.hi))


def intersect(a: RatInterval, b: RatInterval) -> RatInterval:
    return RatInterval(max(a.lo, b.lo), min(a.hi, b.hi))


# ---------------------------------------------------------------------------
# certified constants and elementary functions
# ---------------------------------------------------------------------------

def two_cos_interval(k: int, m: int, prec: int) -> RatInterval:
    """Certified enclosure of 2*cos(k*pi/m) with ~prec significant bits."""
    old = iv.prec
    try:
        iv.prec = prec + 10
        return RatInterval.from_iv(2 * iv.cos(iv.pi * k / m))
    finally:
        iv.prec = old


def _dir_mpf(x: Fraction, prec: int, rnd):
    return libmp.from_rational(x.numerator, x.denominator, prec, rnd)


def log_interval(x: RatInterval, prec: int = 64) -> RatInterval:
    """Certified enclosure of log over a positive rational interval."""
    if x.lo <= 0:
        raise ValueError("log requires a strictly positive interval")
    lo = libmp.mpf_log(_dir_mpf(x.lo, prec, libmp.round_floor),
                       prec, libmp.round_floor)
    hi = libmp.mpf_log(_dir_mpf(x.hi, prec, libmp.round_ceiling),
                       prec, libmp.round_ceiling)
    return RatInterval(_mpf_to_fraction(lo), _mpf_to_fraction(hi))


def iroot(v: int, n: int) -> int:
    """Floor of the n-th root of a nonnegative integer."""
    if v < 0:
        raise ValueError("iroot of negative integer")
    if v == 0:
        return 0
    if n == 1:
        return v
    if n == 2:
        return math.isqrt(v)
    # Newton iteration on integers, seeded from the bit length.
    x = 1 << (v.bit_length() // n + 1)
    while True:
        y = ((n - 1) * x + v // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    return x


def _root_lower(x: Fraction, n: int, prec: int) -> Fraction:
    """Rational lower bound on x**(1/n), within 2^-prec of it."""
    k = 1 << prec
    scaled = (x.numerator * k ** n) // x.denominator
    return Fraction(iroot(scaled, n), k)


def _root_upper(x: Fraction, n: int, prec: int) -> Fraction:
    k = 1 << prec
    scaled = -((-x.numerator * k ** n) // x.denominator)  # ceil
    return Fraction(iroot(scaled, n) + 1, k)


def nth_root_interval(x: RatInterval, n: int, prec: int = 64) -> RatInterval:
    """Certified enclosure of x**(1/n) for a nonnegative interval."""
    if x.lo < 0:
        raise ValueError("nth_root requires a nonnegative interval")
    return RatInterval(_root_lower(x.lo, n, prec), _root_upper(x.hi, n, prec))


def sqrt_interval(x: RatInterval, prec: int = 64) -> RatInterval:
    return nth_root_interval(x, 2, prec)


def decimal_str(x, max_digits: int = 12) -> str:
    """Decimal rendering showing only certified digits of an interval.

    Accepts a RatInterval, Fraction or int.  The number of digits printed
    is limited by the interval width, so every printed digit is meaningful.
    """
    if not isinstance(x, RatInterval):
        x = RatInterval.point(Fraction(x))
    if x.width == 0:
        digits = max_digits
    else:
        digits = max(0, min(max_digits, -_ceil_log10(x.width)))
    mid = x.mid
    scaled = mid * 10 ** digits
    n = scaled.numerator // scaled.denominator
    if 2 * (scaled.numerator % scaled.denominator) >= scaled.denominator:
        n += 1
    sign = "-" if n < 0 else ""
    s = str(abs(n)).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def _ceil_log10(x: Fraction) -> int:
    """Smallest k with x <= 10^k, for positive rational x."""
    if x <= 0:
        raise ValueError
    k = 0
    while x > 1:
        x /= 10
        k += 1
    while x <= Fraction(1, 10):
        x *= 10
        k -= 1
    return k
