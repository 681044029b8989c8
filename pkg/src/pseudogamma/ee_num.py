"""Extended-range complex numbers in log-polar form.

A :class:`LogComplex` stores ``(ln|z|, arg z)``. Products, quotients and real
powers reduce to sums and scalings of the two fields, so values such as a
product of 2**26 factors or a power with exponent ~1e12 never leave the
representable range. Exact zero is not representable.

``ln|z|`` is carried as a double-double (``log_mod`` plus the low word
``lo``); the argument is an ordinary double normalized to (-pi, pi].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from . import dd
from .dd import DD, quick_two_sum, two_prod, two_sum
from .errors import CancellationToZero, SingularAtMinusOne, ZeroNotRepresentable

PI = math.pi
TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi

# Below this modulus log1p uses the power series in log-polar form.
_SERIES_RADIUS = 0.1
_LN_SERIES_RADIUS = math.log(_SERIES_RADIUS)


@dataclass(frozen=True)
class PrecisionProfile:
    mode: str = "standard"
    sig_digits: int = 15

    def __post_init__(self):
        if self.mode not in ("standard", "extended"):
            raise ValueError(f"unknown precision mode {self.mode!r}")
        if self.mode == "standard" and self.sig_digits != 15:
            raise ValueError("standard profile delivers 15 significant digits")
        if self.mode == "extended" and not 30 <= self.sig_digits <= 31:
            raise ValueError("extended profile delivers 30-31 significant digits")

    @property
    def extended(self) -> bool:
        return self.mode == "extended"

    @property
    def rel_tol(self) -> float:
        return 10.0 ** (1 - self.sig_digits)

    @property
    def cancellation_floor(self) -> float:
        return 10.0 ** -(self.sig_digits + 5)

    @classmethod
    def named(cls, name: str) -> PrecisionProfile:
        if name == "standard":
            return STANDARD
        if name == "extended":
            return EXTENDED
        raise ValueError(f"unknown precision profile {name!r}")


STANDARD = PrecisionProfile("standard", 15)
EXTENDED = PrecisionProfile("extended", 30)


def normalize_arg(x: float) -> float:
    """Map an angle into (-pi, pi]; -pi goes to +pi."""
    if -PI < x <= PI:
        return x
    if not math.isfinite(x):
        raise ValueError(f"non-finite argument {x!r}")
    y = math.remainder(x, TWO_PI)
    if y <= -PI:
        y += TWO_PI
    elif y > PI:
        y -= TWO_PI
    return y


def unit_cos_sin(theta: float) -> tuple[float, float]:
    """cos and sin, exact on the axes so that arg == pi really is a negative real."""
    if theta == 0.0:
        return 1.0, 0.0
    if theta == PI:
        return -1.0, 0.0
    if theta == HALF_PI:
        return 0.0, 1.0
    if theta == -HALF_PI:
        return 0.0, -1.0
    return math.cos(theta), math.sin(theta)


def _unit_cos_sin_dd(theta: float) -> tuple[DD, DD]:
    if theta in (0.0, PI, HALF_PI, -HALF_PI):
        c, s = unit_cos_sin(theta)
        return DD(c), DD(s)
    s, c = dd.sin_cos(theta)
    return c, s


RealLike = Union[float, int, DD]


@dataclass(frozen=True)
class LogComplex:
    log_mod: float
    arg: float
    lo: float = 0.0

    # -- construction ---------------------------------------------------
    @classmethod
    def one(cls) -> LogComplex:
        return cls(0.0, 0.0)

    @classmethod
    def from_log(cls, w: complex, lo: float = 0.0) -> LogComplex:
        """The value e**w."""
        return _make(w.real, lo, w.imag)

    @classmethod
    def from_log_dd(cls, re: DD, im: float) -> LogComplex:
        return _make(re.hi, re.lo, im)

    @classmethod
    def from_complex(cls, z: complex, profile: PrecisionProfile = STANDARD) -> LogComplex:
        return from_cartesian(z.real, z.imag, profile)

    # -- views ----------------------------------------------------------
    @property
    def log_mod_dd(self) -> DD:
        return DD(self.log_mod, self.lo)

    @property
    def log(self) -> complex:
        """Principal logarithm ln|z| + i arg z."""
        return complex(self.log_mod + self.lo, self.arg)

    def to_complex(self) -> complex:
        if self.log_mod > 709.78:
            raise OverflowError(f"|z| = e^{self.log_mod:.6g} exceeds the double range")
        r = math.exp(self.log_mod + self.lo)
        c, s = unit_cos_sin(self.arg)
        return complex(r * c, r * s)

    def in_float_range(self) -> bool:
        return -708.0 < self.log_mod < 709.0

    def conjugate(self) -> LogComplex:
        return _make(self.log_mod, self.lo, -self.arg)

    def __neg__(self) -> LogComplex:
        return _make(self.log_mod, self.lo, self.arg + PI)

    def __mul__(self, other: LogComplex) -> LogComplex:
        if not isinstance(other, LogComplex):
            return NotImplemented
        return mul(self, other)

    def __truediv__(self, other: LogComplex) -> LogComplex:
        if not isinstance(other, LogComplex):
            return NotImplemented
        return div(self, other)

    def __pow__(self, r: float) -> LogComplex:
        return pow_real(self, r)

    def __repr__(self) -> str:
        lo = f", lo={self.lo!r}" if self.lo else ""
        return f"LogComplex(log_mod={self.log_mod!r}, arg={self.arg!r}{lo})"


def _make(hi: float, lo: float, arg: float) -> LogComplex:
    if lo:
        hi, lo = two_sum(hi, lo)
    return LogComplex(hi, normalize_arg(arg), lo)


def _as_dd(x: RealLike) -> DD:
    return x if isinstance(x, DD) else DD(float(x))


def from_cartesian(re: RealLike, im: RealLike, profile: PrecisionProfile = STANDARD) -> LogComplex:
    """(re, im) -> (ln sqrt(re^2 + im^2), atan2(im, re))."""
    if profile.extended or isinstance(re, DD) or isinstance(im, DD):
        return _from_cartesian_dd(_as_dd(re), _as_dd(im))
    re, im = float(re), float(im)
    a, b = abs(re), abs(im)
    if a == 0.0 and b == 0.0:
        raise ZeroNotRepresentable("zero has no logarithm")
    m, n = (a, b) if a >= b else (b, a)
    ratio = n / m
    log_mod = math.log(m) + 0.5 * math.log1p(ratio * ratio)
    return LogComplex(log_mod, normalize_arg(math.atan2(im, re)))


def _from_cartesian_dd(re: DD, im: DD) -> LogComplex:
    a, b = abs(re), abs(im)
    if a.hi == 0.0 and b.hi == 0.0:
        raise ZeroNotRepresentable("zero has no logarithm")
    m, n = (a, b) if a >= b else (b, a)
    ratio = n / m
    log_mod = dd.log(m) + dd.log1p(ratio * ratio).ldexp(-1)
    arg = float(dd.atan2(im, re)) if im.hi != 0.0 else (PI if re.hi < 0 else 0.0)
    return LogComplex(log_mod.hi, normalize_arg(arg), log_mod.lo)


def mul(a: LogComplex, b: LogComplex) -> LogComplex:
    s, e = two_sum(a.log_mod, b.log_mod)
    e += a.lo + b.lo
    hi, lo = quick_two_sum(s, e) if abs(s) >= abs(e) else two_sum(s, e)
    return LogComplex(hi, normalize_arg(a.arg + b.arg), lo)


def inv(a: LogComplex) -> LogComplex:
    return LogComplex(-a.log_mod, normalize_arg(-a.arg), -a.lo)


def div(a: LogComplex, b: LogComplex) -> LogComplex:
    return mul(a, inv(b))


def pow_real(a: LogComplex, r: float) -> LogComplex:
    """Principal-branch power: ln|a|*r, arg(a)*r."""
    r = float(r)
    if not math.isfinite(r):
        raise ValueError("exponent must be finite")
    p, e = two_prod(a.log_mod, r)
    e += a.lo * r
    hi, lo = quick_two_sum(p, e) if abs(p) >= abs(e) else two_sum(p, e)
    return LogComplex(hi, normalize_arg(a.arg * r), lo)


def _series_factor(x: LogComplex, profile: PrecisionProfile):
    """sum_j (-x)^j/(j+1) for |x| < 0.1, as cartesian parts."""
    if x.log_mod < -700.0:
        return (DD(1.0), DD(0.0)) if profile.extended else (1.0, 0.0)
    if not profile.extended:
        z = x.to_complex()
        acc = 0j
        for j in range(18, -1, -1):
            acc = 1.0 / (j + 1) - z * acc
        return acc.real, acc.imag
    rho = dd.exp(x.log_mod_dd)
    c, s = _unit_cos_sin_dd(x.arg)
    zr, zi = rho * c, rho * s
    ar, ai = DD(0.0), DD(0.0)
    # Horner: acc = 1/(j+1) - z*acc
    for j in range(34, -1, -1):
        pr = zr * ar - zi * ai
        pi_ = zr * ai + zi * ar
        ar = DD.from_fraction(1) / (j + 1) - pr
        ai = -pi_
    return ar, ai


def _log1p_cartesian(x: LogComplex, profile: PrecisionProfile):
    """Re and Im of Log(1 + x) for |x| >= 0.1, checking for cancellation."""
    floor = profile.cancellation_floor
    if not profile.extended:
        c, s = unit_cos_sin(x.arg)
        if x.log_mod > 700.0:
            # 1 is negligible next to x
            return x.log_mod + math.log1p(math.exp(-x.log_mod) * c), normalize_arg(x.arg)
        rho = math.exp(x.log_mod + x.lo)
        xr, xi = rho * c, rho * s
        one_r = 1.0 + xr
        mod2 = one_r * one_r + xi * xi
        if mod2 < floor * floor:
            return None
        t = 2.0 * xr + xr * xr + xi * xi
        re = 0.5 * math.log1p(t) if t > -0.5 else 0.5 * math.log(mod2)
        return re, math.atan2(xi, one_r)
    c, s = _unit_cos_sin_dd(x.arg)
    if x.log_mod > 700.0:
        return x.log_mod_dd + dd.log1p(dd.exp(-x.log_mod_dd) * c), normalize_arg(x.arg)
    rho = dd.exp(x.log_mod_dd)
    xr, xi = rho * c, rho * s
    one_r = xr + 1.0
    mod2 = one_r * one_r + xi * xi
    if mod2.hi < floor * floor:
        return None
    t = xr.ldexp(1) + xr * xr + xi * xi
    re = dd.log1p(t).ldexp(-1) if t.hi > -0.5 else dd.log(mod2).ldexp(-1)
    im = float(dd.atan2(xi, one_r)) if xi.hi != 0.0 else (PI if one_r.hi < 0 else 0.0)
    return re, im


def log1p_c(x: LogComplex, profile: PrecisionProfile = STANDARD) -> LogComplex:
    """The value ln(1 + x), in log-polar form.

    Accurate for arbitrarily small ``|x|`` (the result then has
    ``log_mod ~ ln|x|``). Raises :class:`SingularAtMinusOne` when ``1 + x``
    vanishes to working precision.
    """
    if x.log_mod + x.lo < _LN_SERIES_RADIUS:
        fr, fi = _series_factor(x, profile)
        return mul(x, from_cartesian(fr, fi, profile))
    parts = _log1p_cartesian(x, profile)
    if parts is None:
        raise SingularAtMinusOne("ln(1 + x) is singular at x = -1")
    re, im = parts
    try:
        return from_cartesian(re, im, profile)
    except ZeroNotRepresentable:
        raise SingularAtMinusOne("ln(1 + x) evaluated to exactly zero") from None


def _log1p_parts(r: LogComplex, profile: PrecisionProfile):
    """Re (float or DD) and Im of Log(1 + r); None on cancellation."""
    if r.log_mod + r.lo < _LN_SERIES_RADIUS:
        val = log1p_c(r, profile)
        if val.log_mod < -745.0:
            zero = DD(0.0) if profile.extended else 0.0
            return zero, 0.0
        c, s = unit_cos_sin(val.arg)
        if profile.extended:
            rho = dd.exp(val.log_mod_dd)
            cd, sd = _unit_cos_sin_dd(val.arg)
            return rho * cd, float(rho * sd)
        rho = math.exp(val.log_mod + val.lo)
        return rho * c, rho * s
    return _log1p_cartesian(r, profile)


def add(a: LogComplex, b: LogComplex, profile: PrecisionProfile = STANDARD) -> LogComplex:
    """a + b computed as big * (1 + small/big)."""
    if (b.log_mod, b.lo) > (a.log_mod, a.lo):
        a, b = b, a
    parts = _log1p_parts(div(b, a), profile)
    if parts is None:
        raise CancellationToZero("a + b cancels below working precision")
    re, im = parts
    if isinstance(re, DD):
        log_mod = a.log_mod_dd + re
        return LogComplex(log_mod.hi, normalize_arg(a.arg + im), log_mod.lo)
    s, e = two_sum(a.log_mod, re)
    e += a.lo
    hi, lo = quick_two_sum(s, e) if abs(s) >= abs(e) else two_sum(s, e)
    if not profile.extended:
        hi, lo = hi + lo, 0.0
    return LogComplex(hi, normalize_arg(a.arg + im), lo)


def sub(a: LogComplex, b: LogComplex, profile: PrecisionProfile = STANDARD) -> LogComplex:
    return add(a, -b, profile)


def expm1_abs(delta: complex) -> float:
    """|e**delta - 1|, accurate for small delta."""
    if abs(delta) > 1.0:
        if delta.real > 709.0:
            return math.inf
        return abs(cmath.exp(delta) - 1.0)
    x, y = delta.real, delta.imag
    half = math.sin(0.5 * y)
    return abs(complex(math.expm1(x) * math.cos(y) - 2.0 * half * half, math.exp(x) * math.sin(y)))


def relative_distance(a: LogComplex, b: LogComplex, eps: float = 1e-300) -> float:
    """|a - b| / (|b| + eps), evaluated without leaving log space."""
    delta = complex((a.log_mod - b.log_mod) + (a.lo - b.lo), normalize_arg(a.arg - b.arg))
    d = expm1_abs(delta)
    if eps <= 0.0:
        return d
    t = math.log(eps) - (b.log_mod + b.lo)  # ln(eps/|b|)
    return d * (math.exp(-t) if t > 700.0 else 1.0 / (1.0 + math.exp(t)))
