"""Deterministic sampling grids on a real interval or a circle about 1/2."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError

NUDGE = 2.0**-20
POLICIES = ("closed", "open_left", "open_right")


@dataclass(frozen=True)
class GridSpec:
    """``count`` points; equally spaced on [start, end] or around a circle.

    For intervals, ``open_left`` / ``open_right`` keep the equal spacing but
    move the excluded endpoint inward by ``nudge``. An interval runs along
    the real axis at height ``fixed`` or, with ``axis="imag"``, along the
    vertical line Re s = ``fixed``. Circles are centred at ``center`` and
    start at angle 0.
    """

    kind: str = "interval"
    count: int = 64
    start: float = 0.5
    end: float = 2.0
    radius: float = 1.0
    center: complex = 0.5 + 0j
    endpoint_policy: str = "open_left"
    nudge: float = NUDGE
    axis: str = "real"
    fixed: float = 0.0

    def __post_init__(self):
        if self.kind not in ("interval", "circle"):
            raise ConfigError(f"grid kind must be 'interval' or 'circle', not {self.kind!r}")
        if not isinstance(self.count, int) or self.count < 2:
            raise ConfigError("grid count must be an integer >= 2")
        if self.axis not in ("real", "imag"):
            raise ConfigError(f"grid axis must be 'real' or 'imag', not {self.axis!r}")
        if self.endpoint_policy not in POLICIES:
            raise ConfigError(f"endpoint_policy must be one of {POLICIES}")
        if self.kind == "circle":
            if not (self.radius > 0.0 and math.isfinite(self.radius)):
                raise ConfigError("circle radius must be positive and finite")
        else:
            if not (math.isfinite(self.start) and math.isfinite(self.end)) or self.end <= self.start:
                raise ConfigError("interval needs finite start < end")
            if not 0.0 < self.nudge < (self.end - self.start) / (self.count - 1):
                raise ConfigError("nudge must be positive and smaller than the grid spacing")

    @classmethod
    def theorem_interval(cls, count: int = 64) -> GridSpec:
        """(1/2, 2] with the open end sampled at 1/2 + 2^-20."""
        return cls(kind="interval", count=count, start=0.5, end=2.0, endpoint_policy="open_left")

    @classmethod
    def circle(cls, radius: float, count: int, center: complex = 0.5 + 0j) -> GridSpec:
        return cls(kind="circle", count=count, radius=radius, center=center, endpoint_policy="closed")

    def points(self) -> list[complex]:
        if self.kind == "circle":
            return [self.center + self.radius * _unit(j, self.count) for j in range(self.count)]
        span = self.end - self.start
        last = self.count - 1
        xs = [self.start + span * i / last for i in range(self.count)]
        xs[-1] = self.end
        if self.endpoint_policy == "open_left":
            xs[0] = self.start + self.nudge
        elif self.endpoint_policy == "open_right":
            xs[-1] = self.end - self.nudge
        if self.axis == "imag":
            return [complex(self.fixed, x) for x in xs]
        return [complex(x, self.fixed) for x in xs]

    def real_points(self) -> list[float]:
        if self.kind != "interval" or self.axis != "real" or self.fixed != 0.0:
            raise ConfigError("real_points needs an interval on the real axis")
        return [p.real for p in self.points()]

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "count": self.count, "endpoint_policy": self.endpoint_policy}
        if self.kind == "circle":
            out.update(radius=self.radius, center=[self.center.real, self.center.imag])
        else:
            out.update(start=self.start, end=self.end, nudge=self.nudge, axis=self.axis, fixed=self.fixed)
        return out


def _unit(j: int, n: int) -> complex:
    """e^(2 pi i j/n), exact at the quarter turns."""
    j %= n
    if j == 0:
        return 1 + 0j
    if 2 * j == n:
        return -1 + 0j
    if 4 * j == n:
        return 1j
    if 4 * j == 3 * n:
        return -1j
    t = 2.0 * math.pi * j / n
    return complex(math.cos(t), math.sin(t))
