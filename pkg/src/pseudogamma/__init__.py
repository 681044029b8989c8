"""Pseudo-Gamma function, zeta/Gamma/xi evaluators and bound verification."""

from .classical import (
    SeriesTolerance,
    double_symmetry_residual,
    functional_eq_residual,
    gamma_weierstrass,
    xi,
    zeta_hasse,
    zeta_integral,
)
from .ee_num import EXTENDED, STANDARD, LogComplex, PrecisionProfile
from .grid import GridSpec
from .kernels import BACKEND
from .pseudo_gamma import (
    BoundReport,
    Prop2Constants,
    PseudoGammaParams,
    factor_bound_check,
    nabla_closed,
    nabla_direct,
    nonvanishing_check,
    params_from,
    prop2_circle_report,
    ratio_factor,
    theorem1_check,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundReport",
    "EXTENDED",
    "GridSpec",
    "LogComplex",
    "PrecisionProfile",
    "Prop2Constants",
    "PseudoGammaParams",
    "STANDARD",
    "SeriesTolerance",
    "double_symmetry_residual",
    "factor_bound_check",
    "functional_eq_residual",
    "gamma_weierstrass",
    "nabla_closed",
    "nabla_direct",
    "nonvanishing_check",
    "params_from",
    "prop2_circle_report",
    "ratio_factor",
    "theorem1_check",
    "xi",
    "zeta_hasse",
    "zeta_integral",
]
