"""Verification campaigns driven by a :class:`RunConfig`.

Each suite returns a list of :class:`BoundReport`; residual checks are put
on the same footing by comparing ``log(residual)`` with ``log(tolerance)``.
"""

from __future__ import annotations

import cmath
import math
import random
from typing import Callable

from . import classical
from .config import RunConfig
from .errors import FUNCTIONAL_EQUATION, GAMMA_PRODUCT, ZETA_INTEGRAL, ZETA_SERIES
from .parallel import ordered_map
from .pseudo_gamma import (
    BoundReport,
    Prop2Constants,
    PseudoGammaParams,
    Stage,
    factor_bound_check,
    log_ratio_product,
    nabla,
    nonvanishing_check,
    prop2_circle_report,
    theorem1_check,
)

SYMMETRY_FORMULA = "D(conj s) = conj D(s), D(1 - s) = D(s)"
RATIO_FORMULA = "nabla(u)/nabla(1/2) = [prod_k R(u,1/2;k)]^(q/2^(K+1))"
EXHAUSTIVE_LIMIT_LOG2 = 12
TINY = 5e-324


def _log(x: float) -> float:
    return math.log(max(x, TINY))


def _report(name: str, formula: str, stages: list[Stage], regime: str, k_active: bool,
            notes: list[str] | None = None, samples: list[dict] | None = None) -> BoundReport:
    margin = min(st.margin for st in stages)
    return BoundReport(
        name=name,
        paper_eq=formula,
        lhs=stages[0].lhs,
        rhs=stages[-1].rhs,
        margin=margin,
        holds=margin >= 0.0,
        regime=regime,
        k_override_active=k_active,
        notes=notes or [],
        stages=stages,
        samples=samples or [],
    )


def _disc_points(rng: random.Random, count: int, radius: float = 2.0) -> list[complex]:
    """Uniform points in |s - 1/2| <= radius."""
    out = []
    for _ in range(count):
        r = radius * math.sqrt(rng.random())
        out.append(0.5 + r * cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))
    return out


def _symmetry_report(name: str, f: Callable, points: list[complex], tol: float,
                     regime: str, k_active: bool) -> BoundReport:
    res = ordered_map(lambda s: classical.double_symmetry_residual(f, s), points)
    conj = max(r[0] for r in res)
    refl = max(r[1] for r in res)
    stages = [
        Stage(f"log max |D(conj s) - conj D(s)|/|D(s)| <= log {tol:g}", _log(conj), math.log(tol)),
        Stage(f"log max |D(1 - s) - D(s)|/|D(s)| <= log {tol:g}", _log(refl), math.log(tol)),
    ]
    samples = [{"re_s": s.real, "im_s": s.imag, "conj": a, "reflect": b} for s, (a, b) in zip(points, res)]
    return _report(name, SYMMETRY_FORMULA, stages, regime, k_active,
                   [f"{len(points)} points; residuals in log scale"], samples)


# -- suites -----------------------------------------------------------------

def suite_theorem1(cfg: RunConfig, p: PseudoGammaParams) -> list[BoundReport]:
    return [theorem1_check(p, cfg.grid, cfg.profile, evaluator=cfg.evaluator)]


def suite_symmetry(cfg: RunConfig, p: PseudoGammaParams) -> list[BoundReport]:
    rng = random.Random(cfg.seed)
    profile = cfg.profile
    nabla_pts = _disc_points(rng, cfg.symmetry_points)
    xi_pts = [complex(rng.uniform(0.1, 0.9), rng.uniform(-10.0, 10.0)) for _ in range(cfg.xi_points)]
    tol = cfg.tolerance
    return [
        _symmetry_report("symmetry[nabla]", lambda s: nabla(s, p, profile, cfg.evaluator), nabla_pts,
                         cfg.symmetry_tol, p.regime, p.k_override_active),
        _symmetry_report("symmetry[xi]", lambda s: classical.xi(s, tol), xi_pts,
                         cfg.xi_tol, p.regime, p.k_override_active),
    ]


def _sampled_ks(p: PseudoGammaParams) -> list[int]:
    if p.log2_N <= EXHAUSTIVE_LIMIT_LOG2:
        return list(range(1, p.N + 1))
    half = 1 << p.K
    return sorted({1, 2, half // 2, half, 3 * half // 2, 2 * half})


def suite_factors(cfg: RunConfig, p: PseudoGammaParams) -> list[BoundReport]:
    ks = _sampled_ks(p)
    out: list[BoundReport] = []
    for u in cfg.factor_u:
        out.extend(ordered_map(lambda k: factor_bound_check(u, k, p), ks))
        out.extend(ordered_map(lambda k: nonvanishing_check(u, k, p), ks))
        if p.log2_N <= 20:
            lr = log_ratio_product(u, p)
            direct = nabla(u, p, cfg.profile, "direct")
            gap = abs(lr.real - (direct.log_mod + direct.lo))
            scale = max(1.0, abs(lr.real))
            out.append(_report(
                f"ratio_identity[u={u!r}]", RATIO_FORMULA,
                [Stage("log(|difference in log|nabla||/scale) <= log 1e-9", _log(gap / scale), math.log(1e-9))],
                p.regime, p.k_override_active,
                [f"(q/N) sum log|R| = {lr.real!r}, log|nabla(u)| = {direct.log_mod!r}"],
            ))
    return out


def _classical_point_checks(cfg: RunConfig, p: PseudoGammaParams) -> list[BoundReport]:
    tol = cfg.tolerance
    z2 = classical.zeta_hasse(2.0, tol)
    z0 = classical.zeta_hasse(0.0, tol)
    g5 = classical.gamma_weierstrass(5.0, tol).to_complex()
    reports = [
        _report("zeta(2) = pi^2/6", ZETA_SERIES,
                [Stage("log|zeta(2) - pi^2/6| <= log 1e-10", _log(abs(z2 - math.pi**2 / 6)), math.log(1e-10))],
                p.regime, p.k_override_active),
        _report("zeta(0) = -1/2", ZETA_SERIES,
                [Stage("log|zeta(0) + 1/2| <= log 1e-8", _log(abs(z0 + 0.5)), math.log(1e-8))],
                p.regime, p.k_override_active),
        _report("Gamma(5) = 4!", GAMMA_PRODUCT,
                [Stage("log(|Gamma(5) - 24|/24) <= log 1e-10", _log(abs(g5 - 24.0) / 24.0), math.log(1e-10))],
                p.regime, p.k_override_active),
    ]
    rng = random.Random(cfg.seed + 1)
    pts = [complex(rng.uniform(0.1, 3.0), rng.uniform(-20.0, 20.0)) for _ in range(50)]

    def ratio(s: complex) -> float:
        h = classical.zeta_hasse(s, tol)
        integral = classical.zeta_integral(s, 20_000)
        allowed = integral.error_estimate + 100.0 * tol.rel_tol * max(1.0, abs(h))
        return abs(h - integral.value) / allowed

    worst = max(ordered_map(ratio, pts))
    reports.append(_report(
        "zeta series vs integral", ZETA_INTEGRAL,
        [Stage("log max |series - integral|/(integral error + series tolerance) <= 0", _log(worst), 0.0)],
        p.regime, p.k_override_active, ["50 points, Re s in [0.1, 3], |Im s| <= 20"],
    ))
    return reports


def suite_funceq(cfg: RunConfig, p: PseudoGammaParams) -> list[BoundReport]:
    rng = random.Random(cfg.seed + 2)
    pts = [complex(rng.uniform(-3.0, 4.0), rng.uniform(0.5, 25.0)) for _ in range(cfg.funceq_points)]
    tol = cfg.tolerance
    res = ordered_map(lambda s: classical.functional_eq_residual(s, tol), pts)
    stage = Stage(f"log max functional-equation residual <= log {cfg.funceq_tol:g}", _log(max(res)),
                  math.log(cfg.funceq_tol))
    samples = [{"re_s": s.real, "im_s": s.imag, "residual": r} for s, r in zip(pts, res)]
    fe = _report("functional_equation", FUNCTIONAL_EQUATION, [stage], p.regime, p.k_override_active,
                 [f"{len(pts)} points, Re s in [-3, 4], Im s in [0.5, 25]"], samples)
    return [fe] + _classical_point_checks(cfg, p)


def suite_prop2(cfg: RunConfig, p: PseudoGammaParams) -> list[BoundReport]:
    return [prop2_circle_report(p, Prop2Constants(), cfg.r_tilde, cfg.n_angles, cfg.profile)]


SUITES = {
    "theorem1": suite_theorem1,
    "symmetry": suite_symmetry,
    "factors": suite_factors,
    "funceq": suite_funceq,
    "prop2": suite_prop2,
}
