"""The proportional-derivative baseline and the mnesor controller.

Both are pure functions of the pendulum state.  The PD law's sign depends on
the plant convention: with ``omega' = (g sin(theta) - u cos(theta)) / a`` the
restoring law is ``u = +(kp theta + kd omega)``; ``sign_mode="paper-literal"``
keeps the negated form ``u = -kp theta - kd omega`` as printed, which pushes
the pendulum over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from mnesor.convert import (
    ACTUATOR,
    OMEGA_QUANTIZER,
    THETA_QUANTIZER,
    ActuatorConfig,
    QuantizerConfig,
    mnesor_to_real,
    real_to_mnesor,
)
from mnesor.core import ZERO, Kind, Mnesor, mmul
from mnesor.plant import PendulumState, saturate

SIGN_MODES = ("plant-consistent", "paper-literal")


@dataclass(frozen=True)
class PdGains:
    kp: float = 10.0
    kd: float = 5.0
    u_max: float = 30.0
    sign_mode: str = "plant-consistent"

    def __post_init__(self):
        if not (math.isfinite(self.kp) and math.isfinite(self.kd)):
            raise ValueError("gains must be finite")
        if not (math.isfinite(self.u_max) and self.u_max > 0):
            raise ValueError("u_max must be > 0")
        if self.sign_mode not in SIGN_MODES:
            raise ValueError(f"sign_mode must be one of {', '.join(SIGN_MODES)}")


@dataclass(frozen=True)
class MnesorControllerConfig:
    theta_quantizer: QuantizerConfig = THETA_QUANTIZER
    omega_quantizer: QuantizerConfig = OMEGA_QUANTIZER
    actuator: ActuatorConfig = ACTUATOR
    cross_sign_zero: bool = True


class MnesorOutput(NamedTuple):
    u: float
    xi: Mnesor
    omega: Mnesor
    U: Mnesor


def pd_control(s: PendulumState, gains: PdGains = PdGains()) -> float:
    sigma = 1.0 if gains.sign_mode == "plant-consistent" else -1.0
    u = sigma * (gains.kp * s.theta + gains.kd * s.omega)
    return saturate(u, gains.u_max) + 0.0  # +0.0 folds -0.0 into 0.0


def opposite_bases(x: Mnesor, y: Mnesor) -> bool:
    return {x.kind, y.kind} == {Kind.PST, Kind.NGT}


def gate(xi: Mnesor, omega: Mnesor, cross_sign_zero: bool) -> Mnesor:
    """Xi × Omega, forced to ZERO on opposite signs when the gate is on."""
    if cross_sign_zero and opposite_bases(xi, omega):
        return ZERO
    return mmul(xi, omega)


def mnesor_control(s: PendulumState,
                   cfg: MnesorControllerConfig = MnesorControllerConfig()) -> MnesorOutput:
    xi = real_to_mnesor(s.theta, cfg.theta_quantizer)
    om = real_to_mnesor(s.omega, cfg.omega_quantizer)
    U = gate(xi, om, cfg.cross_sign_zero)
    return MnesorOutput(mnesor_to_real(U, cfg.actuator), xi, om, U)
