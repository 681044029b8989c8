"""Run configuration: TOML file + command-line overrides, schema-checked.

Example file::

    [params]
    regime = "toy"
    R = 100.0
    omega = 1.0
    alpha = 0.25
    k_override = 8

    [precision]
    profile = "standard"
    rel_tol = 1e-13
    max_terms = 1000

    [grid]
    kind = "interval"
    count = 64
    start = 0.5
    end = 2.0
    endpoint_policy = "open_left"

    [prop2]
    n_angles = 64

    [checks]
    seed = 12345
    symmetry_points = 50
    factor_u = [0.6, 1.0, 2.0]

    [output]
    out = "report.json"

Precedence is regime defaults < file < flags. The paper regime defaults to
R = 2*T0 - 1, Omega = 1, alpha = 1/4 and the extended profile; the toy
regime to R = 100, K = 8 and the standard profile.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Optional

import jsonschema

from .classical import SeriesTolerance
from .ee_num import PrecisionProfile
from .errors import ConfigError
from .grid import POLICIES, GridSpec
from .pseudo_gamma import PAPER_R, PseudoGammaParams, params_from

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

_NUM = {"type": "number"}
_POS = {"type": "number", "exclusiveMinimum": 0}

SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "params": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "regime": {"enum": ["paper", "toy"]},
                "R": {"type": "number", "exclusiveMinimum": 5},
                "omega": _POS,
                "alpha": _POS,
                "k_override": {"type": ["integer", "null"], "minimum": 0, "maximum": 40},
                "evaluator": {"enum": ["auto", "direct", "closed"]},
            },
        },
        "precision": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "profile": {"enum": ["standard", "extended"]},
                "rel_tol": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
                "max_terms": {"type": "integer", "minimum": 16},
            },
        },
        "grid": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "kind": {"enum": ["interval", "circle"]},
                "count": {"type": "integer", "minimum": 2},
                "start": _NUM,
                "end": _NUM,
                "radius": _POS,
                "center": {"type": "array", "items": _NUM, "minItems": 2, "maxItems": 2},
                "endpoint_policy": {"enum": list(POLICIES)},
                "axis": {"enum": ["real", "imag"]},
                "fixed": _NUM,
            },
        },
        "prop2": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "r_tilde": _POS,
                "n_angles": {"type": "integer", "minimum": 8},
            },
        },
        "checks": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "seed": {"type": "integer"},
                "symmetry_points": {"type": "integer", "minimum": 1},
                "xi_points": {"type": "integer", "minimum": 1},
                "funceq_points": {"type": "integer", "minimum": 1},
                "factor_u": {"type": "array", "items": _NUM, "minItems": 1},
                "symmetry_tol": _POS,
                "xi_tol": _POS,
                "funceq_tol": _POS,
            },
        },
        "output": {
            "type": "object",
            "additionalProperties": False,
            "properties": {"out": {"type": "string"}},
        },
    },
}

_VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)


@dataclass(frozen=True)
class RunConfig:
    regime: str = "paper"
    R: float = float(PAPER_R)
    Omega: float = 1.0
    alpha: float = 0.25
    k_override: Optional[int] = None
    precision: str = "extended"
    rel_tol: float = 1e-13
    max_terms: int = 1000
    evaluator: str = "auto"
    grid: GridSpec = field(default_factory=GridSpec.theorem_interval)
    r_tilde: Optional[float] = None
    n_angles: int = 64
    seed: int = 20240607
    symmetry_points: int = 50
    xi_points: int = 20
    funceq_points: int = 30
    factor_u: tuple[float, ...] = (0.6, 1.0, 2.0)
    symmetry_tol: float = 1e-9
    xi_tol: float = 1e-8
    funceq_tol: float = 1e-8
    out: Optional[str] = None

    def __post_init__(self):
        if self.regime == "paper" and self.k_override is not None:
            raise ConfigError("k_override is not allowed in the paper regime")
        if self.regime == "paper" and self.precision != "extended":
            raise ConfigError("the paper regime needs the extended precision profile")

    @property
    def profile(self) -> PrecisionProfile:
        return PrecisionProfile.named(self.precision)

    @property
    def tolerance(self) -> SeriesTolerance:
        return SeriesTolerance(self.rel_tol, self.max_terms)

    def params(self) -> PseudoGammaParams:
        return params_from(self.R, self.Omega, self.alpha, self.regime, self.k_override)

    def to_dict(self) -> dict:
        return {
            "regime": self.regime,
            "R": self.R,
            "Omega": self.Omega,
            "alpha": self.alpha,
            "k_override": self.k_override,
            "precision": self.precision,
            "rel_tol": self.rel_tol,
            "max_terms": self.max_terms,
            "evaluator": self.evaluator,
            "grid": self.grid.to_dict(),
            "r_tilde": self.r_tilde,
            "n_angles": self.n_angles,
            "seed": self.seed,
            "symmetry_points": self.symmetry_points,
            "xi_points": self.xi_points,
            "funceq_points": self.funceq_points,
            "factor_u": list(self.factor_u),
            "symmetry_tol": self.symmetry_tol,
            "xi_tol": self.xi_tol,
            "funceq_tol": self.funceq_tol,
        }


REGIME_DEFAULTS = {
    "paper": {"R": float(PAPER_R), "Omega": 1.0, "alpha": 0.25, "k_override": None, "precision": "extended"},
    "toy": {"R": 100.0, "Omega": 1.0, "alpha": 0.25, "k_override": 8, "precision": "standard"},
}


def load_toml(path: str | Path) -> dict:
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"config {path} is not valid TOML: {exc}") from None
    validate(data)
    return data


def validate(data: dict) -> None:
    errors = sorted(_VALIDATOR.iter_errors(data), key=lambda e: list(e.path))
    if errors:
        where = "/".join(str(p) for p in errors[0].path) or "<root>"
        raise ConfigError(f"config invalid at {where}: {errors[0].message}")


def _flatten(data: dict) -> dict:
    """Map the sectioned file layout onto RunConfig field names."""
    flat: dict[str, Any] = {}
    params = data.get("params", {})
    for src, dst in (("regime", "regime"), ("R", "R"), ("omega", "Omega"), ("alpha", "alpha"),
                     ("k_override", "k_override"), ("evaluator", "evaluator")):
        if src in params:
            flat[dst] = params[src]
    prec = data.get("precision", {})
    for src, dst in (("profile", "precision"), ("rel_tol", "rel_tol"), ("max_terms", "max_terms")):
        if src in prec:
            flat[dst] = prec[src]
    if "grid" in data:
        flat["grid"] = dict(data["grid"])
    flat.update(data.get("prop2", {}))
    flat.update(data.get("checks", {}))
    flat.update(data.get("output", {}))
    return flat


def _grid_from(base: GridSpec, overrides: dict) -> GridSpec:
    if not overrides:
        return base
    ov = dict(overrides)
    if "center" in ov:
        re, im = ov["center"]
        ov["center"] = complex(re, im)
    if ov.get("kind") == "circle" and base.kind != "circle":
        base = GridSpec.circle(ov.get("radius", 1.0), ov.get("count", base.count))
    for key in ("start", "end", "radius", "fixed", "nudge"):
        if key in ov:
            ov[key] = float(ov[key])
    return replace(base, **ov)


def build_config(file_data: Optional[dict] = None, overrides: Optional[dict] = None) -> RunConfig:
    """Regime defaults, then the file, then explicit overrides (None = unset)."""
    file_flat = _flatten(file_data or {})
    cli = {k: v for k, v in (overrides or {}).items() if v is not None}
    regime = cli.get("regime", file_flat.get("regime", "paper"))
    merged: dict[str, Any] = dict(REGIME_DEFAULTS[regime])
    merged["regime"] = regime
    grid_over: dict[str, Any] = {}
    for source in (file_flat, cli):
        for key, value in source.items():
            if key == "grid":
                grid_over.update(value)
            else:
                merged[key] = value
    # an explicit R / omega / alpha in the paper regime keeps its own meaning;
    # an explicit k_override in the paper regime is rejected below
    if regime == "paper" and "k_override" not in file_flat and "k_override" not in cli:
        merged["k_override"] = None
    if "factor_u" in merged:
        merged["factor_u"] = tuple(float(u) for u in merged["factor_u"])
    for key in ("R", "Omega", "alpha", "rel_tol", "r_tilde", "symmetry_tol", "xi_tol", "funceq_tol"):
        if merged.get(key) is not None:
            merged[key] = float(merged[key])
    merged["grid"] = _grid_from(GridSpec.theorem_interval(), grid_over)
    known = set(RunConfig.__dataclass_fields__)
    unknown = set(merged) - known
    if unknown:
        raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")
    return RunConfig(**merged)
