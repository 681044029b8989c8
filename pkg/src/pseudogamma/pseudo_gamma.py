"""The pseudo-Gamma function and the inequalities around it.

    nabla(s) = (w2/w1)^q * [ prod_{k=1}^{N} (z - e^(ik pi/2^K) w1) / (z - e^(ik pi/2^K) w2) ]^(q/N)

with z = s - 1/2, w1 = W1 - 1/2 = 3R + R^(1/4), w2 = W2 - 1/2 = 3R and
N = 2^(K+1). Because k = 1..N runs over every N-th root of unity w, the
bracket collapses through prod_w (z - w a) = z^N - a^N, giving

    log nabla(s) = (q/N) [ log(1 - (z/w1)^N) - log(1 - (z/w2)^N) ]    (|z| < w2)

which stays computable when N = 2^160. :func:`nabla_direct` multiplies the
factors out one by one (feasible up to N = 2^26) and is the reference the
collapsed form is tested against.

All bound checks return a :class:`BoundReport` whose quantities are
logarithms, so that "|x| <= b" is checked as "log|x| <= log b".
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import dd, kernels
from .dd import DD
from .ee_num import (
    EXTENDED,
    STANDARD,
    LogComplex,
    PrecisionProfile,
    from_cartesian,
    inv,
    log1p_c,
    normalize_arg,
    sub,
)
from .errors import (
    MAIN_BOUND,
    NABLA_DEFINITION,
    CancellationToZero,
    DenominatorPole,
    DomainError,
    FactorPole,
    HypothesisViolation,
    InvalidOverride,
    ProductTooLarge,
    RegimeViolation,
    SingularAtMinusOne,
    ZeroNotRepresentable,
)
from .grid import GridSpec
from .parallel import ordered_map

T0 = 2445999554999
PAPER_R = 2 * T0 - 1
GAMMA_GRAVE = "0.3674"
THEOREM_CONSTANT = "4.4088"
DIRECT_CAP_LOG2 = 26
POLE_TOL = 1e-12

FACTOR_FORMULA = "|R(u,1/2;k)| <= 1 + 3R^(1/4)/(18R^2 + 6R^(5/4) - 3(3R + R^(1/4))) < 1 + 1/(6R^(7/4))"
NONVANISHING_FORMULA = (
    "|1 - (u-1/2)e^(-ik pi/2^K)/(W1-1/2)| >= 1 - 3/(2(3R + R^(1/4))) > 0, "
    "|1 - (u-1/2)e^(-ik pi/2^K)/(W2-1/2)| >= 1 - 1/(2R) > 0"
)
CHAIN_FORMULA = "max log|nabla(u)| <= q log(1 + 1/(6R^(7/4))) <= log R/(12 * 0.3674 R) = log R/(4.4088 R)"
CIRCLE_FORMULA = (
    "[Omega R^((R-1/2)/2 + alpha)]^(a' (R~/R)^(1/2) - b') < |nabla(s)| "
    "< [Omega R^((R-1/2)/2 + alpha)]^(a'' (R~/R)^(1/2) + b''), |s - 1/2| = R~; "
    "|nabla(u)| < R^1.62"
)


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PseudoGammaParams:
    R: float
    T: float
    Omega: float
    alpha: float
    gamma_grave: float
    W1: float
    W2: float
    q: float
    K: int
    log2_N: int
    regime: str
    k_override: Optional[int] = None
    K_formula: int = 0
    notes: tuple[str, ...] = ()
    # working quantities: w1 = W1 - 1/2, w2 = W2 - 1/2, d = w1 - w2 = R^(1/4)
    w1: float = field(default=0.0, repr=False)
    w2: float = field(default=0.0, repr=False)
    d: float = field(default=0.0, repr=False)
    q_dd: DD = field(default=DD(0.0), repr=False, compare=False)
    r4_dd: DD = field(default=DD(0.0), repr=False, compare=False)

    @property
    def N(self) -> int:
        """2^(K+1) as an exact integer (only for small K; prefer log2_N)."""
        return 1 << self.log2_N

    @property
    def k_override_active(self) -> bool:
        return self.k_override is not None

    def summary(self) -> dict:
        out = {k: v for k, v in asdict(self).items() if k not in ("q_dd", "r4_dd", "w1", "w2", "d")}
        out["notes"] = list(self.notes)
        return out


def _k_from_formula(R: DD) -> tuple[int, DD]:
    val = (dd.log(R) * 15 + dd.log(12.0) * 2) / (dd.LN2 * 4)
    f = math.floor(val.hi)
    if val.hi == f and val.lo < 0:
        f -= 1
    return f, val


def params_from(
    R: float,
    Omega: float = 1.0,
    alpha: float = 0.25,
    regime: str = "toy",
    k_override: Optional[int] = None,
) -> PseudoGammaParams:
    if regime not in ("paper", "toy"):
        raise DomainError(f"regime must be 'paper' or 'toy', not {regime!r}")
    R = float(R)
    if not (math.isfinite(R) and R > 5.0):
        raise DomainError(f"R must exceed 5 (got {R!r})", formula=NABLA_DEFINITION)
    if not (Omega > 0.0 and math.isfinite(Omega)):
        raise DomainError("Omega must be positive", formula=NABLA_DEFINITION)
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise DomainError("alpha must be positive", formula=NABLA_DEFINITION)
    notes: list[str] = []
    if regime == "paper":
        if k_override is not None:
            raise InvalidOverride("K may only be overridden in the toy regime")
        if R < PAPER_R:
            raise RegimeViolation(f"paper regime needs R >= 2*T0 - 1 = {PAPER_R} (got {R:.17g})")
        notes.append(
            "T = (R+1)/2 is bookkeeping: it gives T >= T0 and R = 2T - 1, which meets "
            "R >= 2T - 1 but sits on the open end of 2T - 1 < R <= 2T + 1"
        )
    if k_override is not None:
        if int(k_override) != k_override or k_override < 0 or k_override > 40:
            raise InvalidOverride(f"k_override must be an integer in [0, 40] (got {k_override!r})")
        k_override = int(k_override)

    r_dd = DD(R)
    r4 = dd.sqrt(dd.sqrt(r_dd))
    gamma = DD.from_str(GAMMA_GRAVE)
    q_dd = ((r_dd - 0.5 + 2.0 * alpha) * dd.log(r_dd) + dd.log(Omega) * 2) / (gamma * r4 * 2)
    k_formula, k_real = _k_from_formula(r_dd)
    frac = float((k_real - k_formula))
    if min(frac, 1.0 - frac) < 1e-20:
        notes.append(f"K formula value {k_real} lies within 1e-20 of an integer")
    K = k_override if k_override is not None else k_formula
    if k_override is not None:
        notes.append(f"K overridden to {K} (formula gives {k_formula})")

    w2_dd = r_dd * 3
    w1_dd = w2_dd + r4
    q = float(q_dd)
    p = PseudoGammaParams(
        R=R,
        T=(R + 1.0) / 2.0,
        Omega=float(Omega),
        alpha=float(alpha),
        gamma_grave=float(gamma),
        W1=float(w1_dd + 0.5),
        W2=float(w2_dd + 0.5),
        q=q,
        K=K,
        log2_N=K + 1,
        regime=regime,
        k_override=k_override,
        K_formula=k_formula,
        notes=tuple(notes),
        w1=float(w1_dd),
        w2=float(w2_dd),
        d=float(r4),
        q_dd=q_dd,
        r4_dd=r4,
    )
    if not (p.W1 > p.W2 > 1.0 and q > 0.0):
        raise DomainError("derived parameters violate W1 > W2 > 1, q > 0", formula=NABLA_DEFINITION)
    return p


def paper_params() -> PseudoGammaParams:
    return params_from(PAPER_R, 1.0, 0.25, "paper")


def toy_params(R: float = 100.0, k_override: Optional[int] = 8, Omega: float = 1.0, alpha: float = 0.25) -> PseudoGammaParams:
    return params_from(R, Omega, alpha, "toy", k_override)


# ---------------------------------------------------------------------------
# roots of unity
# ---------------------------------------------------------------------------

def unit_root(k: int, K: int) -> tuple[float, float]:
    """(cos, sin) of k*pi/2^K for any integer k, exact at the quarter turns."""
    n = 1 << (K + 1)
    j = k % n
    if j == 0:
        return 1.0, 0.0
    if 2 * j == n:
        return -1.0, 0.0
    if 4 * j == n:
        return 0.0, 1.0
    if 4 * j == 3 * n:
        return 0.0, -1.0
    if 2 * j > n:
        j -= n
    t = math.pi * float(Fraction(j, 1 << K))
    return math.cos(t), math.sin(t)


def _check_k(k: int, p: PseudoGammaParams) -> int:
    if int(k) != k or not 1 <= k <= (1 << p.log2_N):
        raise DomainError(f"k must be an integer in [1, 2^(K+1)] (got {k!r})")
    return int(k)


def _check_u(u: float) -> float:
    u = float(u)
    if not 0.5 < u <= 2.0:
        raise DomainError(f"u must lie in (1/2, 2] (got {u!r})", formula=MAIN_BOUND)
    return u


# ---------------------------------------------------------------------------
# direct product
# ---------------------------------------------------------------------------

def _nearest_root_gap(z: complex, a: float, p: PseudoGammaParams) -> float:
    """min over k of |z - e^(ik pi/2^K) a|, searching around the angle of z."""
    theta = math.atan2(z.imag, z.real)
    k0 = round(math.ldexp(theta / math.pi, p.K))
    best = math.inf
    for k in (k0 - 1, k0, k0 + 1):
        c, s = unit_root(k, p.K)
        best = min(best, abs(z - complex(c * a, s * a)))
    return best


def nabla_direct(
    s: complex,
    p: PseudoGammaParams,
    profile: PrecisionProfile = STANDARD,
    *,
    max_log2: int = DIRECT_CAP_LOG2,
    backend: Optional[str] = None,
) -> LogComplex:
    """nabla(s) by multiplying out all 2^(K+1) factors.

    The bracket's logarithm is the sum of the principal logarithms of the
    individual factors, each written as log(1 + c_k) with
    c_k = -w_k (w1 - w2)/(z - w_k w2) so that factors close to 1 lose nothing.
    At s = 1/2 every factor equals w1/w2 exactly, so the product is
    (w1/w2)^N and the result is exactly 1 without enumerating anything.
    """
    z = complex(s) - 0.5
    if z == 0:
        return LogComplex.one()
    if p.log2_N > max_log2:
        raise ProductTooLarge(
            f"direct product needs 2^{p.log2_N} factors; the cap is 2^{max_log2} (use the closed form)"
        )
    if _nearest_root_gap(z, p.w2, p) <= POLE_TOL * p.w2:
        raise FactorPole(f"s = {s} is within {POLE_TOL:g} (relative) of a denominator root")
    if _nearest_root_gap(z, p.w1, p) <= POLE_TOL * p.w1:
        raise ZeroNotRepresentable(f"s = {s} is a zero of nabla", formula=NABLA_DEFINITION)
    kern = kernels if backend is None else kernels.backend(backend)
    total_re, total_im = kern.direct_log_sum(z.real, z.imag, p.d, p.w2, p.log2_N)
    scale = -p.log2_N
    im = p.q * math.ldexp(total_im, scale)
    if profile.extended:
        mean = DD(total_re).ldexp(scale) - dd.log1p(DD(p.d) / p.w2)
        re = p.q_dd * mean
        return LogComplex.from_log_dd(re, normalize_arg(im))
    re = p.q * (math.ldexp(total_re, scale) - math.log1p(p.d / p.w2))
    return LogComplex(re, normalize_arg(im))


# ---------------------------------------------------------------------------
# closed form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedFormDetail:
    """Intermediate quantities of one closed-form evaluation.

    ``log_value`` is L = log nabla(s) itself held in log-polar form, so
    ``log_value.log_mod`` is ln|L| even when |L| is far below the double
    range. ``log_power`` holds N ln|z/w1| and N ln|z/w2|.
    """

    log_value: LogComplex
    log_power: tuple[float, float]
    phase_reliable: bool
    below_significance: bool

    def notes(self) -> list[str]:
        out = []
        if self.below_significance:
            out.append(
                f"|log nabla| = exp({self.log_value.log_mod:.6g}) is below double resolution; "
                "log|nabla| is stored as 0 and kept exactly in log-of-log form"
            )
        if not self.phase_reliable:
            out.append("N*arg(z) cannot be reduced mod 2 pi reliably at this N; only the modulus is meaningful")
        return out


def _power_phase(z: complex, log2_n: int) -> tuple[float, bool]:
    """N * arg(z) reduced to (-pi, pi], and whether that reduction is trustworthy."""
    if z.imag == 0.0:
        return 0.0, True  # N is even, so (-1)^N = 1
    if log2_n > 48:
        return normalize_arg(math.ldexp(math.atan2(z.imag, z.real), log2_n) % (2 * math.pi)), False
    x = dd.atan2(z.imag, z.real).ldexp(log2_n)
    n = round(float(x / dd.TWO_PI))
    return normalize_arg(float(x - dd.TWO_PI * n)), True


def _log_power(z: complex, w: float, p: PseudoGammaParams, profile: PrecisionProfile) -> float:
    """N ln(|z|/w)."""
    if profile.extended:
        r = dd.log(DD(abs(z)) / w)
        return float(r.ldexp(p.log2_N))
    return math.ldexp(math.log(abs(z) / w), p.log2_N)


def _bracket_term(lp: float, phase: float, profile: PrecisionProfile):
    """log(a^N - z^N) - N log a for x = (z/a)^N = e^(lp + i phase).

    Returns a LogComplex holding the value when |z| < a (it may be
    astronomically small), otherwise a plain complex number.
    """
    x = LogComplex(lp, phase)
    if lp < 0.0:
        return log1p_c(-x, profile)
    # log(a^N - z^N) - N log a = N log(z/a) + log(1 - (a/z)^N) + i pi
    y = inv(x)
    tail = 0j
    if y.log_mod > -745.0:
        val = log1p_c(-y, profile)
        if val.log_mod > -745.0:
            tail = val.to_complex()
    return complex(lp, phase) + tail + complex(0.0, math.pi)


def _as_complex(v) -> complex:
    if isinstance(v, LogComplex):
        return v.to_complex() if v.log_mod > -745.0 else 0j
    return v


def nabla_closed_detail(
    s: complex, p: PseudoGammaParams, profile: PrecisionProfile = STANDARD
) -> tuple[LogComplex, ClosedFormDetail]:
    z = complex(s) - 0.5
    if z == 0:
        one = LogComplex.one()
        return one, ClosedFormDetail(LogComplex(-math.inf, 0.0), (-math.inf, -math.inf), True, False)
    lp1 = _log_power(z, p.w1, p, profile)
    lp2 = _log_power(z, p.w2, p, profile)
    phase, reliable = _power_phase(z, p.log2_N)
    if abs(lp2) < POLE_TOL and (abs(phase) < POLE_TOL or not reliable):
        raise DenominatorPole(f"z^N = w2^N at s = {s}")
    if abs(lp1) < POLE_TOL and (abs(phase) < POLE_TOL or not reliable):
        raise ZeroNotRepresentable(f"z^N = w1^N at s = {s}: nabla vanishes", formula=NABLA_DEFINITION)
    try:
        b1 = _bracket_term(lp1, phase, profile)
        b2 = _bracket_term(lp2, phase, profile)
    except SingularAtMinusOne as exc:
        raise DenominatorPole(f"bracket singular at s = {s}: {exc}") from None
    if isinstance(b1, LogComplex) and isinstance(b2, LogComplex):
        try:
            diff = sub(b1, b2, profile)
        except CancellationToZero:
            raise ZeroNotRepresentable("brackets cancel exactly", formula=NABLA_DEFINITION) from None
    else:
        delta = _as_complex(b1) - _as_complex(b2)
        if delta == 0:
            return LogComplex.one(), ClosedFormDetail(LogComplex(-math.inf, 0.0), (lp1, lp2), reliable, True)
        diff = from_cartesian(delta.real, delta.imag, profile)
    # L = (q/N) * diff, kept in log-polar form
    if profile.extended:
        lm = diff.log_mod_dd + dd.log(p.q_dd) - dd.LN2 * p.log2_N
        L = LogComplex.from_log_dd(lm, diff.arg)
    else:
        L = LogComplex(diff.log_mod + math.log(p.q) - p.log2_N * math.log(2.0), diff.arg)
    below = L.log_mod < -708.0
    if below:
        value = LogComplex(0.0, 0.0)
    else:
        if L.log_mod > 709.0:
            raise OverflowError(f"|log nabla| = e^{L.log_mod:.6g} exceeds the double range")
        if profile.extended:
            rho = dd.exp(L.log_mod_dd)
            sn, cs = dd.sin_cos(L.arg)
            value = LogComplex.from_log_dd(rho * cs, normalize_arg(float(rho * sn)))
        else:
            rho = math.exp(L.log_mod + L.lo)
            value = LogComplex(rho * math.cos(L.arg), normalize_arg(rho * math.sin(L.arg)))
    return value, ClosedFormDetail(L, (lp1, lp2), reliable, below)


def nabla_closed(s: complex, p: PseudoGammaParams, profile: PrecisionProfile = STANDARD) -> LogComplex:
    """nabla(s) through the roots-of-unity collapse; any N."""
    return nabla_closed_detail(s, p, profile)[0]


def nabla(s: complex, p: PseudoGammaParams, profile: PrecisionProfile = STANDARD, evaluator: str = "auto") -> LogComplex:
    """Dispatch: ``direct``, ``closed`` or ``auto`` (direct while N <= 2^20)."""
    if evaluator == "auto":
        evaluator = "direct" if p.log2_N <= 20 else "closed"
    if evaluator == "direct":
        return nabla_direct(s, p, profile)
    if evaluator == "closed":
        return nabla_closed(s, p, profile)
    raise ValueError(f"unknown evaluator {evaluator!r}")


# ---------------------------------------------------------------------------
# ratio factors
# ---------------------------------------------------------------------------

def _rotated(u: float, k: int, p: PseudoGammaParams) -> complex:
    """(u - 1/2) e^(-ik pi/2^K)."""
    c, s = unit_root(k, p.K)
    a = u - 0.5
    return complex(a * c, -(a * s))


def _correction(zeta: complex, p: PseudoGammaParams) -> complex:
    """(W1 - W2) zeta / ((W1 - 1/2)((W2 - 1/2) - zeta))."""
    return (p.d * zeta) / (p.w1 * (p.w2 - zeta))


def ratio_factor(u: float, k: int, p: PseudoGammaParams) -> complex:
    """R(u, 1/2; k) in the simplified form 1 + correction."""
    u = _check_u(u)
    k = _check_k(k, p)
    return 1.0 + _correction(_rotated(u, k, p), p)


def ratio_factor_raw(u: float, k: int, p: PseudoGammaParams) -> complex:
    """R(u, 1/2; k) as the quotient of the k-th factor at u by the k-th factor at 1/2."""
    u = _check_u(u)
    k = _check_k(k, p)
    c, s = unit_root(k, p.K)
    om = complex(c, s)
    a = u - 0.5
    at_u = (a - om * p.w1) / (a - om * p.w2)
    at_half = (-om * p.w1) / (-om * p.w2)
    return at_u / at_half


def log_ratio_product(u: float, p: PseudoGammaParams, *, max_log2: int = 22) -> complex:
    """(q/N) sum_k log R(u, 1/2; k), enumerating every k."""
    u = _check_u(u)
    if p.log2_N > max_log2:
        raise ProductTooLarge(f"ratio product needs 2^{p.log2_N} factors; the cap is 2^{max_log2}")
    n = p.N
    k = np.arange(1, n + 1, dtype=np.int64)
    j = np.where(2 * (k % n) > n, (k % n) - n, k % n)
    t = math.ldexp(math.pi, -p.K) * j
    c, s = np.cos(t), np.sin(t)
    a = u - 0.5
    zeta = a * c - 1j * (a * s)
    corr = (p.d * zeta) / (p.w1 * (p.w2 - zeta))
    logs = 0.5 * np.log1p(2.0 * corr.real + corr.real**2 + corr.imag**2) + 1j * np.arctan2(corr.imag, 1.0 + corr.real)
    total = complex(math.fsum(logs.real), math.fsum(logs.imag))
    return p.q * total / n


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class Stage:
    """One link ``lhs <= rhs`` of a bound chain, in log scale unless labelled."""

    label: str
    lhs: float
    rhs: float
    margin: float = math.nan
    # pass/fail side conditions are kept out of the chain's numeric margin
    # unless they fail
    quantitative: bool = True

    def __post_init__(self):
        if math.isnan(self.margin):
            self.margin = self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.margin >= 0.0


@dataclass
class BoundReport:
    name: str
    paper_eq: str
    lhs: float
    rhs: float
    margin: float
    holds: bool
    regime: str
    k_override_active: bool
    notes: list[str] = field(default_factory=list)
    stages: list[Stage] = field(default_factory=list)
    asserted: bool = True
    samples: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["stages"] = [dict(asdict(st), holds=st.holds) for st in self.stages]
        return out


def _chain(
    name: str,
    formula: str,
    stages: list[Stage],
    p: PseudoGammaParams,
    notes: list[str],
    *,
    asserted: bool = True,
    samples: Optional[list[dict]] = None,
) -> BoundReport:
    # a chain holds when every link does; its margin is the weakest link's
    margin = min(st.margin for st in stages if st.quantitative or not st.holds)
    return BoundReport(
        name=name,
        paper_eq=formula,
        lhs=stages[0].lhs,
        rhs=stages[-1].rhs,
        margin=margin,
        holds=margin >= 0.0,
        regime=p.regime,
        k_override_active=p.k_override_active,
        notes=list(p.notes) + notes,
        stages=stages,
        asserted=asserted,
        samples=samples or [],
    )


def _log_abs_one_plus(c: complex) -> float:
    """log|1 + c| = log1p(Re c) + log1p((Im c/(1 + Re c))^2)/2."""
    base = math.log1p(c.real)
    if c.imag == 0.0:
        return base
    t = c.imag / (1.0 + c.real)
    return base + 0.5 * math.log1p(t * t)


def _factor_bounds(p: PseudoGammaParams) -> tuple[float, float, float]:
    """(middle bound, literal middle bound, final bound) as linear excesses over 1.

    The middle bound is the correction evaluated at zeta = 3/2, the point
    where it is attained; computing it through the same arithmetic as the
    left side keeps the equality case exact.
    """
    mid = _correction(complex(1.5, 0.0), p).real
    r = DD(p.R)
    r4 = p.r4_dd
    literal = (r4 * 3) / (r * r * 18 + r * r4 * 6 - (r * 3 + r4) * 3)
    final = 1.0 / (r * r / r4 * 6)
    return mid, float(literal), float(final)


def factor_bound_check(u: float, k: int, p: PseudoGammaParams) -> BoundReport:
    u = _check_u(u)
    k = _check_k(k, p)
    c = _correction(_rotated(u, k, p), p)
    lhs = _log_abs_one_plus(c)
    mid, literal, final = _factor_bounds(p)
    notes = []
    rel = abs(mid - literal) / literal
    if rel > 0:
        notes.append(f"middle bound via attained point vs literal formula: relative difference {rel:.3g}")
    stages = [
        Stage("log|R(u,1/2;k)| <= log(1 + 3R^(1/4)/(18R^2 + 6R^(5/4) - 3(3R + R^(1/4))))", lhs, math.log1p(mid)),
        Stage("log(1 + 3R^(1/4)/(...)) < log(1 + 1/(6R^(7/4)))", math.log1p(mid), math.log1p(final)),
    ]
    if not stages[1].holds:
        notes.append("second link fails: 6R^(5/4) - 3(3R + R^(1/4)) <= 0 at this R")
    return _chain(f"factor_bound[u={u!r},k={k}]", FACTOR_FORMULA, stages, p, notes)


def nonvanishing_check(u: float, k: int, p: PseudoGammaParams) -> BoundReport:
    u = _check_u(u)
    k = _check_k(k, p)
    zeta = _rotated(u, k, p)
    edge = complex(1.5, 0.0)
    m1 = abs(1.0 - zeta / p.w1)
    m2 = abs(1.0 - zeta / p.w2)
    b1 = abs(1.0 - edge / p.w1)
    b2 = abs(1.0 - edge / p.w2)
    lit1 = 1.0 - 3.0 / (2.0 * (3.0 * p.R + p.d))
    lit2 = 1.0 - 1.0 / (2.0 * p.R)
    notes = [
        f"lower bounds via attained point vs literal formula: {abs(b1 - lit1):.3g}, {abs(b2 - lit2):.3g}",
        "positivity links are in linear scale",
    ]
    stages = [
        Stage("log(1 - 3/(2(3R + R^(1/4)))) <= log|1 - zeta/(W1 - 1/2)|", math.log(b1), math.log(m1)),
        Stage("0 < 1 - 3/(2(3R + R^(1/4)))", 0.0, b1, quantitative=False),
        Stage("log(1 - 1/(2R)) <= log|1 - zeta/(W2 - 1/2)|", math.log(b2), math.log(m2)),
        Stage("0 < 1 - 1/(2R)", 0.0, b2, quantitative=False),
    ]
    for st in (stages[1], stages[3]):
        if st.rhs == 0.0:
            st.margin = -math.ulp(0.0)  # the positivity links are strict
    return _chain(f"nonvanishing[u={u!r},k={k}]", NONVANISHING_FORMULA, stages, p, notes)


def chain_bounds_dd(p: PseudoGammaParams) -> tuple[DD, DD]:
    """(q log(1 + 1/(6R^(7/4))), log R/(4.4088 R)) in double-double."""
    r = DD(p.R)
    x = p.r4_dd / (r * r * 6)
    mid = p.q_dd * dd.log1p(x)
    final = dd.log(r) / (DD.from_str(THEOREM_CONSTANT) * r)
    return mid, final


def constant_identity_holds() -> bool:
    """0.3674 * 12 == 4.4088, exactly."""
    return Fraction(GAMMA_GRAVE) * 12 == Fraction(THEOREM_CONSTANT)


def _evaluate_points(points, p, profile, evaluator):
    def one(u):
        if evaluator == "closed" or (evaluator == "auto" and p.log2_N > 20):
            v, det = nabla_closed_detail(u, p, profile)
            return v, det
        return nabla_direct(u, p, profile), None

    return ordered_map(one, points)


def theorem1_check(
    p: PseudoGammaParams,
    grid: Optional[GridSpec] = None,
    profile: PrecisionProfile = EXTENDED,
    *,
    evaluator: str = "auto",
) -> BoundReport:
    """max_u log|nabla(u)| <= q log(1 + 1/(6R^(7/4))) <= log R/(4.4088 R)."""
    if p.Omega != 1.0 or p.alpha != 0.25:
        raise HypothesisViolation(f"the bound assumes Omega = 1 and alpha = 1/4 (got {p.Omega}, {p.alpha})")
    grid = grid or GridSpec.theorem_interval()
    us = grid.real_points()
    for u in us:
        _check_u(u)
    results = _evaluate_points(us, p, profile, evaluator)
    samples = []
    notes = []
    worst_arg = 0.0
    log_logs = []
    for u, (v, det) in zip(us, results):
        lm = v.log_mod + v.lo
        samples.append({"u": u, "log_mod": lm, "arg": v.arg})
        worst_arg = max(worst_arg, abs(v.arg))
        if det is not None and det.below_significance:
            log_logs.append(det.log_value.log_mod)
    lhs = max(s["log_mod"] for s in samples)
    mid, final = chain_bounds_dd(p)
    if log_logs:
        notes.append(
            f"{len(log_logs)} of {len(us)} values have 0 < log|nabla(u)| below double resolution; "
            f"ln(log|nabla(u)|) ranges over [{min(log_logs):.6g}, {max(log_logs):.6g}]"
        )
    notes.append(f"q log(1 + 1/(6R^(7/4))) = {mid.to_decimal_string(31)}")
    notes.append(f"log R/(4.4088 R) = {final.to_decimal_string(31)}")
    identity = constant_identity_holds()
    notes.append(f"0.3674 * 12 == 4.4088 exactly: {identity}")
    stages = [
        Stage("max log|nabla(u)| <= q log(1 + 1/(6R^(7/4)))", lhs, float(mid), float(mid - lhs)),
        Stage("q log(1 + 1/(6R^(7/4))) <= log R/(4.4088 R)", float(mid), float(final), float(final - mid)),
        Stage("max log|nabla(u)| <= log R/(4.4088 R)", lhs, float(final), float(final - lhs)),
        Stage("max |arg nabla(u)| <= 1e-9 (real and positive on the axis)", worst_arg, 1e-9, quantitative=False),
        Stage("|0.3674 * 12 - 4.4088| == 0", 0.0 if identity else 1.0, 0.0, quantitative=False),
    ]
    return _chain("theorem1", CHAIN_FORMULA, stages, p, notes, samples=samples)


# ---------------------------------------------------------------------------
# circle estimate (report only)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Prop2Constants:
    a_grave: float = 1.0005
    a_acute: float = 1.006
    b_grave: float = 6.9e-26
    b_acute: float = 6.8e-26
    gamma_bar: float = 1e-81

    @staticmethod
    def partners(R: float, gamma_grave: float = 0.3674) -> dict:
        """The R-dependent functions the constants are meant to bound."""
        lead = 2.0 / (math.sqrt(3.0) * math.pi)
        r34 = R**0.75
        return {
            "a_grave(R)": (lead + 0.75 / r34 - 1.54 / r34) / gamma_grave,
            "a_acute(R)": (lead + 0.75 / r34 + 0.053 / r34) / gamma_grave,
            "b_grave(R)": 0.159154943092 / (gamma_grave * R * R),
            "b_acute(R)": 0.159154943075 / (gamma_grave * R * R),
        }


def prop2_circle_report(
    p: PseudoGammaParams,
    c: Prop2Constants = Prop2Constants(),
    r_tilde: Optional[float] = None,
    n_angles: int = 64,
    profile: PrecisionProfile = STANDARD,
) -> BoundReport:
    """Compare sampled log|nabla| on |s - 1/2| = R~ with the quoted band.

    Never asserted: the band's lower edge is a large positive power of
    R^(R/2) while the collapsed form shows |nabla| = e^(tiny) on such
    circles. Every link is recorded; failures go to the notes.
    """
    r_tilde = p.R if r_tilde is None else float(r_tilde)
    if not c.gamma_bar < r_tilde <= p.R:
        raise DomainError(f"need {c.gamma_bar:g} < R~ <= R (got {r_tilde!r})", formula=CIRCLE_FORMULA)
    if n_angles < 8:
        raise DomainError("n_angles must be at least 8", formula=CIRCLE_FORMULA)
    circle = GridSpec.circle(r_tilde, n_angles).points()
    on_circle = ordered_map(lambda s: nabla_closed(s, p, profile), circle)
    circle_logs = [v.log_mod + v.lo for v in on_circle]
    lo_obs, hi_obs = min(circle_logs), max(circle_logs)

    r = DD(p.R)
    base = float(dd.log(p.Omega) + ((r - 0.5) * 0.5 + p.alpha) * dd.log(r))
    root = math.sqrt(r_tilde / p.R)
    low_exp = c.a_grave * root - c.b_grave
    high_exp = c.a_acute * root + c.b_acute
    lower, upper = low_exp * base, high_exp * base

    axis = GridSpec.theorem_interval().real_points()
    axis_logs = [v.log_mod + v.lo for v in ordered_map(lambda u: nabla_closed(u, p, profile), axis)]
    log_r = math.log(p.R)
    _, final = chain_bounds_dd(p)
    partners = c.partners(p.R, p.gamma_grave)

    stages = [
        Stage("lower band <= min log|nabla| on the circle", lower, lo_obs),
        Stage("max log|nabla| on the circle <= upper band", hi_obs, upper),
        Stage("log R/(4.4088 R) <= 1.62 log R", float(final), 1.62 * log_r),
        Stage("max log|nabla(u)|, u in (1/2, 2] < 1.62 log R", max(axis_logs), 1.62 * log_r),
        Stage("a' = 1.0005 < a'(R)", c.a_grave, partners["a_grave(R)"]),
        Stage("a''(R) < a'' = 1.006", partners["a_acute(R)"], c.a_acute),
        Stage("b'(R) < b' = 6.9e-26", partners["b_grave(R)"], c.b_grave),
        Stage("b''(R) < b'' = 6.8e-26", partners["b_acute(R)"], c.b_acute),
    ]
    notes = [
        "report only: this band is never asserted",
        f"R~ = {r_tilde!r}, {n_angles} angles; band exponents [{low_exp!r}, {high_exp!r}] on base log {base!r}",
        f"observed log|nabla| on the circle in [{lo_obs!r}, {hi_obs!r}]",
        f"bound comparison recorded: log R/(4.4088 R) = {float(final)!r} vs 1.62 log R = {1.62 * log_r!r}",
    ]
    for st in stages:
        if not st.holds:
            notes.append(f"discrepancy: {st.label} fails ({st.lhs!r} vs {st.rhs!r})")
    samples = [{"re_s": s.real, "im_s": s.imag, "log_mod": v} for s, v in zip(circle, circle_logs)]
    return _chain("prop2", CIRCLE_FORMULA, stages, p, notes, asserted=False, samples=samples)
