"""Converters between real signals and graded PST/NGT mnesors."""

from __future__ import annotations

import math
from dataclasses import dataclass

from mnesor.core import ALL, ZERO, Kind, Mnesor, ngt, pst


@dataclass(frozen=True)
class QuantizerConfig:
    scale: float  # signal units per grade step
    deadband: float = 0.0
    max_grade: int = 8
    deadband_target: str = "all"  # "all" keeps the other input in command, "zero" annihilates

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise ValueError("scale must be > 0")
        if not (math.isfinite(self.deadband) and self.deadband >= 0):
            raise ValueError("deadband must be >= 0")
        if isinstance(self.max_grade, bool) or not isinstance(self.max_grade, int) or self.max_grade < 1:
            raise ValueError("max_grade must be an integer >= 1")
        if self.deadband_target not in ("all", "zero"):
            raise ValueError("deadband_target must be 'all' or 'zero'")


@dataclass(frozen=True)
class ActuatorConfig:
    u_max: float = 30.0  # m/s^2
    max_grade: int = 8

    def __post_init__(self):
        if not (math.isfinite(self.u_max) and self.u_max > 0):
            raise ValueError("u_max must be > 0")
        if isinstance(self.max_grade, bool) or not isinstance(self.max_grade, int) or self.max_grade < 1:
            raise ValueError("max_grade must be an integer >= 1")


THETA_QUANTIZER = QuantizerConfig(scale=0.025, deadband=0.005)
OMEGA_QUANTIZER = QuantizerConfig(scale=0.125, deadband=0.025)
ACTUATOR = ActuatorConfig()


def quantize_grade(magnitude: float, cfg: QuantizerConfig) -> int:
    """Grade for a magnitude strictly outside the deadband, clamped to max_grade."""
    return min(cfg.max_grade, math.floor((magnitude - cfg.deadband) / cfg.scale) + 1)


def real_to_mnesor(v: float, cfg: QuantizerConfig) -> Mnesor:
    """PST for positive, NGT for negative; a larger magnitude gets a larger grade."""
    if not math.isfinite(v):
        raise ValueError(f"cannot convert non-finite value {v!r}")
    if abs(v) <= cfg.deadband:
        return ALL if cfg.deadband_target == "all" else ZERO
    g = quantize_grade(abs(v), cfg)
    return pst(g) if v > 0 else ngt(g)


def mnesor_to_real(U: Mnesor, cfg: ActuatorConfig) -> float:
    if not U.graded:
        return 0.0
    k = min(max(U.grade.grade, 0), cfg.max_grade)
    if k == 0:
        return 0.0
    sign = 1.0 if U.kind is Kind.PST else -1.0
    return sign * cfg.u_max * (k / cfg.max_grade)  # k/L <= 1 keeps the result within u_max


def actuator_levels(cfg: ActuatorConfig) -> set[float]:
    """Every value mnesor_to_real can return (2L + 1 of them)."""
    levels = {0.0}
    for k in range(1, cfg.max_grade + 1):
        levels.add(cfg.u_max * (k / cfg.max_grade))
        levels.add(-cfg.u_max * (k / cfg.max_grade))
    return levels
