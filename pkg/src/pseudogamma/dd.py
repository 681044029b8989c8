"""Double-double real arithmetic.

A :class:`DD` is an unevaluated sum ``hi + lo`` of two doubles with
``|lo| <= ulp(hi)/2``, giving roughly 32 significant decimal digits.
Only the operations the rest of the package needs are provided.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    """Like :func:`two_sum` but requires ``|a| >= |b|``."""
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> tuple[float, float]:
    if abs(a) > 6.69692879491417e299:  # avoid overflow in the splitter product
        hi, lo = _split(a * 3.7252902984619141e-09)
        return hi * 268435456.0, lo * 268435456.0
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    if not math.isfinite(p):
        return p, 0.0
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


Number = Union["DD", float, int]


class DD:
    __slots__ = ("hi", "lo")

    def __init__(self, hi: float, lo: float = 0.0):
        self.hi, self.lo = two_sum(float(hi), float(lo)) if lo else (float(hi), 0.0)

    # -- construction -------------------------------------------------
    @classmethod
    def from_fraction(cls, x: Fraction | int) -> DD:
        x = Fraction(x)
        hi = float(x)
        return cls(hi, float(x - Fraction(hi)))

    @classmethod
    def from_int(cls, n: int) -> DD:
        hi = float(n)
        return cls(hi, float(n - int(hi)))

    @classmethod
    def from_str(cls, text: str) -> DD:
        return cls.from_fraction(Fraction(text))

    @staticmethod
    def coerce(x: Number) -> DD:
        if isinstance(x, DD):
            return x
        if isinstance(x, int) and not isinstance(x, bool) and abs(x) > 2**53:
            return DD.from_int(x)
        return DD(float(x))

    # -- conversion -----------------------------------------------------
    def __float__(self) -> float:
        return self.hi + self.lo

    def to_fraction(self) -> Fraction:
        return Fraction(self.hi) + Fraction(self.lo)

    def __repr__(self) -> str:
        return f"DD({self.hi!r}, {self.lo!r})"

    def __str__(self) -> str:
        return self.to_decimal_string(32)

    def to_decimal_string(self, digits: int = 32) -> str:
        x = self.to_fraction()
        if x == 0:
            return "0"
        sign = "-" if x < 0 else ""
        x = abs(x)
        exp = math.floor(math.log10(float(x))) if float(x) > 0 else 0
        # correct the exponent estimate against the exact value
        while x >= Fraction(10) ** (exp + 1):
            exp += 1
        while x < Fraction(10) ** exp:
            exp -= 1
        scaled = x / Fraction(10) ** (exp - digits + 1)
        m = round(scaled)
        text = str(m)
        if len(text) > digits:
            exp += 1
            text = text[:digits]
        return f"{sign}{text[0]}.{text[1:]}e{exp:+d}"

    # -- arithmetic -----------------------------------------------------
    def __neg__(self) -> DD:
        out = DD.__new__(DD)
        out.hi, out.lo = -self.hi, -self.lo
        return out

    def __pos__(self) -> DD:
        return self

    def __abs__(self) -> DD:
        return -self if self.hi < 0 or (self.hi == 0 and self.lo < 0) else self

    def __add__(self, other: Number) -> DD:
        if not isinstance(other, DD):
            if isinstance(other, (int, float)):
                other = DD.coerce(other)
            else:
                return NotImplemented
        s, e = two_sum(self.hi, other.hi)
        t, f = two_sum(self.lo, other.lo)
        e += t
        s, e = quick_two_sum(s, e)
        e += f
        out = DD.__new__(DD)
        out.hi, out.lo = quick_two_sum(s, e)
        return out

    __radd__ = __add__

    def __sub__(self, other: Number) -> DD:
        if not isinstance(other, (DD, int, float)):
            return NotImplemented
        return self + (-DD.coerce(other))

    def __rsub__(self, other: Number) -> DD:
        return DD.coerce(other) - self

    def __mul__(self, other: Number) -> DD:
        if not isinstance(other, DD):
            if isinstance(other, (int, float)):
                other = DD.coerce(other)
            else:
                return NotImplemented
        p, e = two_prod(self.hi, other.hi)
        e += self.hi * other.lo + self.lo * other.hi
        out = DD.__new__(DD)
        out.hi, out.lo = quick_two_sum(p, e)
        return out

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> DD:
        if not isinstance(other, (DD, int, float)):
            return NotImplemented
        other = DD.coerce(other)
        if other.hi == 0.0:
            raise ZeroDivisionError("DD division by zero")
        q1 = self.hi / other.hi
        r = self - other * q1
        q2 = r.hi / other.hi
        r = r - other * q2
        q3 = r.hi / other.hi
        q1, q2 = quick_two_sum(q1, q2)
        return DD(q1, q2) + q3

    def __rtruediv__(self, other: Number) -> DD:
        return DD.coerce(other) / self

    def ldexp(self, e: int) -> DD:
        out = DD.__new__(DD)
        out.hi, out.lo = math.ldexp(self.hi, e), math.ldexp(self.lo, e)
        return out

    def square(self) -> DD:
        return self * self

    # -- comparison -----------------------------------------------------
    def _cmp(self, other: Number) -> int:
        d = self - DD.coerce(other)
        v = d.hi if d.hi != 0.0 else d.lo
        return (v > 0) - (v < 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (DD, int, float)):
            return NotImplemented
        return self._cmp(other) == 0

    def __hash__(self) -> int:
        return hash((self.hi, self.lo))

    def __lt__(self, other: Number) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: Number) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: Number) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: Number) -> bool:
        return self._cmp(other) >= 0


# -- constants ----------------------------------------------------------
# Hex digits of pi and ln 2 split into two doubles.
PI = DD(3.141592653589793116e00, 1.224646799147353207e-16)
TWO_PI = PI.ldexp(1)
HALF_PI = PI.ldexp(-1)
LN2 = DD(6.931471805599452862e-01, 2.319046813846299558e-17)
EPS = 4.93038065763132e-32  # 2**-104


def sqrt(x: Number) -> DD:
    x = DD.coerce(x)
    if x.hi < 0:
        raise ValueError("sqrt of negative DD")
    if x.hi == 0:
        return DD(0.0)
    y = math.sqrt(x.hi)
    # one Newton step in DD doubles the 53-bit seed
    yd = DD(y)
    return yd + (x - yd * yd) / (2.0 * y)


def exp(x: Number) -> DD:
    x = DD.coerce(x)
    if x.hi > 709.78:
        raise OverflowError("DD exp overflow")
    if x.hi < -745.2:
        return DD(0.0)
    if x.hi == 0.0 and x.lo == 0.0:
        return DD(1.0)
    k = round(x.hi / LN2.hi)
    r = (x - LN2 * k).ldexp(-10)
    # Taylor series of expm1(r), |r| < 4e-4
    term = r
    acc = r
    for n in range(2, 14):
        term = term * r / n
        acc = acc + term
        if abs(term.hi) < 1e-34 * max(abs(acc.hi), 1e-300):
            break
    # (1 + m)^2 - 1 = m*(2 + m), applied ten times
    for _ in range(10):
        acc = acc * (acc + 2.0)
    return (acc + 1.0).ldexp(k)


def expm1(x: Number) -> DD:
    x = DD.coerce(x)
    if abs(x.hi) > 0.25:
        return exp(x) - 1.0
    term = x
    acc = x
    for n in range(2, 40):
        term = term * x / n
        acc = acc + term
        if abs(term.hi) < 1e-34 * abs(acc.hi):
            break
    return acc


def log(x: Number) -> DD:
    x = DD.coerce(x)
    if x.hi <= 0:
        raise ValueError("log of nonpositive DD")
    y = DD(math.log(x.hi))
    # Newton on exp(y) = x; each step doubles the number of correct bits
    for _ in range(2):
        y = y + x * exp(-y) - 1.0
    return y


def log1p(x: Number) -> DD:
    """ln(1 + x), accurate to DD precision even for tiny ``x``."""
    x = DD.coerce(x)
    if x.hi <= -1.0:
        raise ValueError("log1p argument <= -1")
    if abs(x.hi) > 0.125:
        return log(x + 1.0)
    # 2 atanh(t) with t = x / (2 + x)
    t = x / (x + 2.0)
    t2 = t * t
    term = t
    acc = t
    for n in range(3, 200, 2):
        term = term * t2
        piece = term / n
        acc = acc + piece
        if abs(piece.hi) < 1e-34 * abs(acc.hi):
            break
    return acc.ldexp(1)


def _reduce_half_pi(x: DD) -> tuple[DD, int]:
    j = round(float(x) / HALF_PI.hi)
    return x - HALF_PI * j, j % 4


def _sin_taylor(r: DD) -> DD:
    r2 = r * r
    term = r
    acc = r
    for n in range(3, 60, 2):
        term = -(term * r2) / (n * (n - 1))
        acc = acc + term
        if abs(term.hi) < 1e-34 * max(abs(acc.hi), 1e-300):
            break
    return acc


def _cos_taylor(r: DD) -> DD:
    r2 = r * r
    term = DD(1.0)
    acc = DD(1.0)
    for n in range(2, 60, 2):
        term = -(term * r2) / (n * (n - 1))
        acc = acc + term
        if abs(term.hi) < 1e-34:
            break
    return acc


def sin_cos(x: Number) -> tuple[DD, DD]:
    x = DD.coerce(x)
    r, quadrant = _reduce_half_pi(x)
    s, c = _sin_taylor(r), _cos_taylor(r)
    if quadrant == 0:
        return s, c
    if quadrant == 1:
        return c, -s
    if quadrant == 2:
        return -s, -c
    return -c, s


def atan2(y: Number, x: Number) -> DD:
    y = DD.coerce(y)
    x = DD.coerce(x)
    if y.hi == 0.0 and x.hi == 0.0:
        return DD(0.0)
    theta = DD(math.atan2(y.hi, x.hi))
    s, c = sin_cos(theta)
    # Newton step on y*cos(t) - x*sin(t) = 0
    return theta + (y * c - x * s) / (x * c + y * s)


def pow_real(x: Number, r: Number) -> DD:
    """x**r for positive ``x``."""
    return exp(log(x) * DD.coerce(r))
