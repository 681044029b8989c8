"""Riemann zeta, Euler Gamma and Riemann xi, plus identity residuals.

* :func:`zeta_hasse` -- the globally convergent alternating binomial series,
  valid on all of C minus {1}.
* :func:`zeta_integral` -- the fractional-part integral, valid for Re s > 0;
  used as an independent second route.
* :func:`gamma_weierstrass` -- log Gamma from the Weierstrass product.
* :func:`xi` -- pi^(-s/2) (s/2)Gamma(s/2) (s-1)zeta(s).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Union

import numpy as np

from . import dd, kernels
from .dd import DD
from .ee_num import LogComplex, expm1_abs, from_cartesian, normalize_arg, relative_distance
from .errors import (
    FUNCTIONAL_EQUATION,
    GAMMA_PRODUCT,
    XI_DEFINITION,
    ZETA_INTEGRAL,
    DomainError,
    MaxTermsExceeded,
    NearExclusionPoint,
    PoleAtNonpositiveInteger,
    PoleAtOne,
    ZeroNotRepresentable,
)

LN_PI = math.log(math.pi)
EXCLUSION_RADIUS = 1e-8
_ZERO_FLOOR = 1e-16


@dataclass(frozen=True)
class SeriesTolerance:
    rel_tol: float = 1e-13
    max_terms: int = 1000

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise ValueError("rel_tol must lie in (0, 1)")
        if self.max_terms < 16:
            raise ValueError("max_terms must be at least 16")


DEFAULT_TOL = SeriesTolerance()


@dataclass(frozen=True)
class EulerConstants:
    gamma0: float = 0.57721566490153286060651209008240243


EULER = EulerConstants()


# ---------------------------------------------------------------------------
# zeta: globally convergent series
# ---------------------------------------------------------------------------

def _check_zeta_point(s: complex) -> complex:
    s = complex(s)
    if s == 1:
        raise PoleAtOne("zeta(s) has a simple pole at s = 1")
    gap = abs(1.0 - cmath.exp((1.0 - s) * math.log(2.0)))
    if gap < EXCLUSION_RADIUS:
        raise NearExclusionPoint(
            f"|1 - 2^(1-s)| = {gap:.3g} < {EXCLUSION_RADIUS:g} at s = {s}; "
            "the series prefactor is singular there"
        )
    return s


def _powers_float(s: complex, count: int) -> tuple[np.ndarray, np.ndarray]:
    k1 = np.arange(1, count + 1, dtype=float)
    p = np.exp(-s * np.log(k1))
    return np.ascontiguousarray(p.real), np.ascontiguousarray(p.imag)


class _DDPowers:
    """(k+1)^(-s) in double-double, computed on demand."""

    def __init__(self, s: complex):
        self.sr = DD(s.real)
        self.si = DD(s.imag)
        self.values: list[tuple[DD, DD]] = []

    def get(self, k: int) -> tuple[DD, DD]:
        while len(self.values) <= k:
            lk = dd.log(len(self.values) + 1)
            mod = dd.exp(-(self.sr * lk))
            sin_, cos_ = dd.sin_cos(-(self.si * lk))
            self.values.append((mod * cos_, mod * sin_))
        return self.values[k]


def _hasse_inner_dd(powers: _DDPowers, n: int) -> tuple[DD, DD]:
    acc_r, acc_i = DD(0.0), DD(0.0)
    c = 1
    for k in range(n + 1):
        pr, pi_ = powers.get(k)
        coef = DD.from_int(c if k % 2 == 0 else -c)
        acc_r = acc_r + coef * pr
        acc_i = acc_i + coef * pi_
        c = c * (n - k) // (k + 1)
    scale = -(n + 1)
    return acc_r.ldexp(scale), acc_i.ldexp(scale)


def zeta_hasse(s: complex, tol: SeriesTolerance = DEFAULT_TOL, *, extended: bool | None = None) -> complex:
    """zeta(s) from the alternating binomial double series.

    Stops once three consecutive outer terms are below
    ``rel_tol * max(|partial sum|, f * largest term so far)`` with f = 1 for
    float inner sums and f = 1e-16 for double-double ones. The second scale
    keeps the rule finite at zeros of zeta, where the partial sums vanish.

    For Re s < 0 the inner alternating sums cancel catastrophically
    (magnitudes ~ n^(-Re s) against an O(1) result), so they are taken in
    double-double with exact integer binomials unless ``extended`` is given.
    """
    s = _check_zeta_point(s)
    if extended is None:
        extended = s.real < 0.0
    pref = 1.0 / (1.0 - cmath.exp((1.0 - s) * math.log(2.0)))

    if extended:
        powers = _DDPowers(s)
        inner = lambda n: _hasse_inner_dd(powers, n)  # noqa: E731
        floor = _ZERO_FLOOR
    else:
        cap = 64
        pr, pi_ = _powers_float(s, cap)

        def inner(n: int) -> tuple[DD, DD]:
            nonlocal pr, pi_, cap
            if n + 1 > cap:
                cap = max(2 * cap, n + 1)
                pr, pi_ = _powers_float(s, cap)
            v = kernels.hasse_inner(pr, pi_, n)
            return DD(v.real), DD(v.imag)

        # float inner sums carry noise ~ eps * largest term, so nothing
        # tighter than the largest term itself is reachable
        floor = 1.0

    # the outer terms can exceed the result by orders of magnitude for
    # Re s < 0, so they are accumulated in double-double
    total_r, total_i = DD(0.0), DD(0.0)
    biggest = 0.0
    quiet = 0
    for n in range(tol.max_terms):
        tr, ti = inner(n)
        total_r = total_r + tr
        total_i = total_i + ti
        mag = math.hypot(float(tr), float(ti))
        biggest = max(biggest, mag)
        if mag < tol.rel_tol * max(math.hypot(float(total_r), float(total_i)), floor * biggest):
            quiet += 1
            if quiet >= 3:
                return pref * complex(float(total_r), float(total_i))
        else:
            quiet = 0
    raise MaxTermsExceeded(f"zeta series did not converge in {tol.max_terms} outer terms at s = {s}")


# ---------------------------------------------------------------------------
# zeta: fractional-part integral
# ---------------------------------------------------------------------------

class IntegralResult(NamedTuple):
    value: complex
    error_estimate: float


_B3_MAX = math.sqrt(3.0) / 216.0  # max |B3(x)|/6 on [0, 1]


def _interval_integrals(s: complex, n_intervals: int) -> complex:
    """sum_{n=1}^{N} int_n^{n+1} (v - n) v^(-s-1) dv."""
    n0 = min(n_intervals + 1, max(8, int(math.ceil(2.0 * abs(s + 1.0))) + 2))
    total = 0j
    # exact antiderivative on the first few intervals:
    # int (v-n) v^(-s-1) = v^(1-s)/(1-s) + n v^(-s)/s
    for n in range(1, n0):
        a = cmath.exp((1.0 - s) * math.log(n))
        e1 = cmath.exp((1.0 - s) * math.log1p(1.0 / n)) - 1.0
        e2 = cmath.exp(-s * math.log1p(1.0 / n)) - 1.0
        total += a * (e1 / (1.0 - s) + e2 / s)
    if n0 > n_intervals:
        return total
    # remaining intervals: n^(-s-1) sum_j C(-s-1, j) / ((j+2) n^j)
    n = np.arange(n0, n_intervals + 1, dtype=float)
    inv_n = 1.0 / n
    inv_pow = np.ones_like(n)
    acc = np.zeros(n.shape, dtype=complex)
    coef = 1.0 + 0j
    for j in range(200):
        piece = (coef / (j + 2)) * inv_pow
        acc += piece
        if np.max(np.abs(piece)) < 1e-18 * np.min(np.abs(acc)):
            break
        coef *= (-s - 1.0 - j) / (j + 1)
        inv_pow = inv_pow * inv_n
    lead = np.exp(-(s + 1.0) * np.log(n))
    prod = lead * acc
    return total + complex(math.fsum(prod.real), math.fsum(prod.imag))


def zeta_integral(s: complex, n_intervals: int = 10_000, *, tail: str = "euler_maclaurin") -> IntegralResult:
    """zeta(s) = s/(s-1) - s * int_1^inf (v - floor v) v^(-s-1) dv, Re s > 0.

    The integral is taken exactly interval by interval up to
    ``n_intervals + 1``. The remainder is handled per ``tail``:

    ``"bound"``
        dropped; the error estimate is ``|s| / (Re s * N^Re s)``.
    ``"euler_maclaurin"``
        the first two Euler-Maclaurin terms ``-M^-s/2 + s M^(-s-1)/12``
        (M = N + 1) are added, and the estimate is the rigorous bound
        ``|s(s+1)(s+2)| max|B3|/6 / ((Re s + 2) M^(Re s + 2))`` on what is left.
    """
    s = complex(s)
    if s == 1:
        raise PoleAtOne("zeta(s) has a simple pole at s = 1")
    if s.real <= 0.0:
        raise DomainError(f"the integral form needs Re s > 0 (got {s})", formula=ZETA_INTEGRAL)
    if n_intervals < 10:
        raise DomainError("n_intervals must be at least 10", formula=ZETA_INTEGRAL)
    if tail not in ("bound", "euler_maclaurin"):
        raise ValueError(f"unknown tail mode {tail!r}")
    sigma = s.real
    body = s / (s - 1.0) - s * _interval_integrals(s, n_intervals)
    rounding = 64 * 2.2e-16 * (abs(s / (s - 1.0)) + 1.0)
    if tail == "bound":
        return IntegralResult(body, abs(s) / (sigma * n_intervals**sigma) + rounding)
    m = float(n_intervals + 1)
    m_s = cmath.exp(-s * math.log(m))
    corrected = body - 0.5 * m_s + s * m_s / (12.0 * m)
    err = abs(s * (s + 1.0) * (s + 2.0)) * _B3_MAX / ((sigma + 2.0) * m ** (sigma + 2.0))
    return IntegralResult(corrected, err + rounding)


def zeta_dirichlet(s: complex, n_terms: int = 100_000) -> complex:
    """Plain Dirichlet series partial sum; only meaningful for Re s > 1."""
    s = complex(s)
    if s.real <= 1.0:
        raise DomainError("the Dirichlet series converges only for Re s > 1")
    n = np.arange(1, n_terms + 1, dtype=float)
    v = np.exp(-s * np.log(n))
    return complex(math.fsum(v.real[::-1]), math.fsum(v.imag[::-1]))


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

_BERNOULLI = [1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510,
              43867 / 798, -174611 / 330, 854513 / 138, -236364091 / 2730]


def _pole_distance(s: complex) -> tuple[float, int]:
    m = min(0, round(s.real))
    return abs(s - m), m


def _tail_derivative(s: complex, x: float, m: int) -> complex:
    """m-th derivative of f(x) = s/x - log(x+s) + log(x)."""
    sign = -1.0 if m % 2 else 1.0
    fm = math.factorial(m)
    fm1 = math.factorial(m - 1)
    return s * sign * fm / x ** (m + 1) + sign * fm1 / (x + s) ** m - sign * fm1 / x**m


def log_gamma_weierstrass(s: complex, tol: SeriesTolerance = DEFAULT_TOL) -> tuple[complex, float, int]:
    """(log Gamma(s) on the sum-of-principal-logs branch, tail estimate, M).

    log Gamma(s) = -log s - g0 s + sum_{n=1}^{M} (s/n - log(1 + s/n)) + tail(M),
    where the tail sum over n > M is taken by Euler-Maclaurin; the returned
    estimate is the size of the last correction term used.
    """
    s = complex(s)
    dist, pole = _pole_distance(s)
    if dist < 1e-12 * max(1.0, abs(s)):
        raise PoleAtNonpositiveInteger(
            f"Gamma has a pole at s = {pole} (distance {dist:.3g})", distance=dist, pole=pole
        )
    big_m = max(32, 2 * math.ceil(abs(s)) + 16)
    if big_m > tol.max_terms:
        raise MaxTermsExceeded(f"Gamma product needs {big_m} factors, over max_terms={tol.max_terms}")
    n = np.arange(1, big_m + 1, dtype=float)
    ratio = s / n
    # the n-th term is O(s^2/n^2); log1p keeps it accurate
    head = ratio - _clog1p(ratio)
    body = complex(math.fsum(head.real[::-1]), math.fsum(head.imag[::-1]))

    x = float(big_m)
    integral = (x + s) * _clog1p_scalar(s / x) - s
    tail = integral - 0.5 * (s / x - _clog1p_scalar(s / x))
    estimate = abs(tail)
    for k, b in enumerate(_BERNOULLI, start=1):
        piece = b / math.factorial(2 * k) * _tail_derivative(s, x, 2 * k - 1)
        tail -= piece
        estimate = abs(piece)
        if estimate < 1e-3 * tol.rel_tol * max(1.0, abs(body)):
            break
    value = -cmath.log(s) - EULER.gamma0 * s + body + tail
    return value, estimate, big_m


def _clog1p(z: np.ndarray) -> np.ndarray:
    """Complex log1p, accurate for small |z|."""
    re = 0.5 * np.log1p(2.0 * z.real + z.real * z.real + z.imag * z.imag)
    im = np.arctan2(z.imag, 1.0 + z.real)
    return re + 1j * im


def _clog1p_scalar(z: complex) -> complex:
    return complex(0.5 * math.log1p(2.0 * z.real + z.real * z.real + z.imag * z.imag),
                   math.atan2(z.imag, 1.0 + z.real))


def gamma_weierstrass(s: complex, tol: SeriesTolerance = DEFAULT_TOL) -> LogComplex:
    """Gamma(s) in log-polar form."""
    value, _, _ = log_gamma_weierstrass(s, tol)
    return LogComplex.from_log(value)


# ---------------------------------------------------------------------------
# xi
# ---------------------------------------------------------------------------

def _log_xi_zeta_part(s: complex, tol: SeriesTolerance) -> complex:
    """log((s-1) zeta(s)); the pole-zero cancellation at s = 1 gives 1."""
    if s == 1:
        return 0j
    z = (s - 1.0) * zeta_hasse(s, tol)
    if z == 0:
        raise ZeroNotRepresentable(f"(s-1)zeta(s) vanishes at s = {s}", formula=XI_DEFINITION)
    return cmath.log(z)


def xi(s: complex, tol: SeriesTolerance = DEFAULT_TOL) -> LogComplex:
    """xi(s) = pi^(-s/2) (s/2)Gamma(s/2) (s-1)zeta(s), in log-polar form.

    (s/2)Gamma(s/2) is evaluated as Gamma(s/2 + 1), which is finite at s = 0
    (value 1); (s-1)zeta(s) is pinned to its limit 1 at s = 1.
    """
    s = complex(s)
    log_g, _, _ = log_gamma_weierstrass(s / 2.0 + 1.0, tol)
    total = -0.5 * s * LN_PI + log_g + _log_xi_zeta_part(s, tol)
    return LogComplex.from_log(total)


# ---------------------------------------------------------------------------
# identity residuals
# ---------------------------------------------------------------------------

def _completed_zeta_log(s: complex, tol: SeriesTolerance) -> complex:
    """log of pi^(-s/2) Gamma(s/2) zeta(s)."""
    z = zeta_hasse(s, tol)
    if z == 0:
        raise ZeroNotRepresentable(f"zeta vanishes at s = {s}", formula=FUNCTIONAL_EQUATION)
    log_g, _, _ = log_gamma_weierstrass(s / 2.0, tol)
    return -0.5 * s * LN_PI + log_g + cmath.log(z)


def functional_eq_residual(s: complex, tol: SeriesTolerance = DEFAULT_TOL) -> float:
    """|L - R| / (|L| + |R|) for the symmetric functional equation.

    L = pi^(-(1-s)/2) Gamma((1-s)/2) zeta(1-s), R = the same at s. Both sides
    are formed as logarithms and compared through e^(L-R).
    """
    s = complex(s)
    for point in (s, 1.0 - s):
        if point == 1:
            raise DomainError(f"zeta pole at {point}", formula=FUNCTIONAL_EQUATION)
        dist, pole = _pole_distance(point / 2.0)
        if dist < 1e-12:
            raise DomainError(f"Gamma pole at s/2 = {pole}", formula=FUNCTIONAL_EQUATION)
    left = _completed_zeta_log(1.0 - s, tol)
    right = _completed_zeta_log(s, tol)
    delta = complex(left.real - right.real, normalize_arg(left.imag - right.imag))
    # |e^d - 1| / (|e^d| + 1)
    num = expm1_abs(delta)
    if delta.real > 0:
        return num * math.exp(-delta.real) / (1.0 + math.exp(-delta.real))
    return num / (math.exp(delta.real) + 1.0)


Evaluator = Callable[[complex], Union[LogComplex, complex]]


def _as_logcomplex(v: LogComplex | complex) -> LogComplex:
    return v if isinstance(v, LogComplex) else from_cartesian(v.real, v.imag)


def double_symmetry_residual(f: Evaluator, s: complex, eps: float = 1e-300) -> tuple[float, float]:
    """(|f(conj s) - conj f(s)|, |f(1-s) - f(s)|), each over |f(s)| + eps."""
    s = complex(s)
    base = _as_logcomplex(f(s))
    mirrored = _as_logcomplex(f(s.conjugate()))
    reflected = _as_logcomplex(f(1.0 - s))
    first = relative_distance(mirrored, base.conjugate(), eps)
    second = relative_distance(reflected, base, eps)
    return first, second
