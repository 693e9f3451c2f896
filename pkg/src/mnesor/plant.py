"""Inverted pendulum driven by cart acceleration.

The bar pivots on the cart and carries a point mass at its tip.  With the
cart acceleration ``u`` as input the mass drops out::

    theta' = omega
    omega' = (g sin(theta) - u cos(theta)) / a
    x'     = v
    v'     = u
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


class NumericError(ArithmeticError):
    pass


@dataclass(frozen=True)
class PendulumParams:
    a: float = 1.0  # bar length [m]
    g: float = 9.81  # gravity [m/s^2]
    m: float = 1.0  # point mass [kg]; cancels out of the dynamics
    u_max: float = 30.0  # actuator saturation [m/s^2]

    def __post_init__(self):
        for name in ("a", "g", "u_max"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be > 0")
        if not (math.isfinite(self.m) and self.m > 0):
            raise ValueError("m must be > 0")


class PendulumState(NamedTuple):
    t: float = 0.0
    theta: float = 0.0  # rad, from the upright vertical
    omega: float = 0.0  # rad/s
    x: float = 0.0  # cart position [m]
    v: float = 0.0  # cart velocity [m/s]

    @property
    def fallen(self) -> bool:
        return not abs(self.theta) <= math.pi


def derivative(s: PendulumState, u: float, params: PendulumParams = PendulumParams()):
    """(theta', omega', x', v') at state s under cart acceleration u."""
    if not math.isfinite(u):
        raise ValueError(f"control input must be finite, got {u!r}")
    return (
        s.omega,
        (params.g * math.sin(s.theta) - u * math.cos(s.theta)) / params.a,
        s.v,
        u,
    )


def saturate(u: float, limit: float) -> float:
    return min(max(u, -limit), limit)


def step_rk4(s: PendulumState, u: float, dt: float,
             params: PendulumParams = PendulumParams()) -> PendulumState:
    """One classical RK4 step with u held constant (saturated at params.u_max)."""
    if not dt > 0:
        raise ValueError("dt must be > 0")
    if not math.isfinite(u):
        raise ValueError(f"control input must be finite, got {u!r}")
    u = saturate(u, params.u_max)
    y = (s.theta, s.omega, s.x, s.v)

    def f(y):
        return derivative(PendulumState(s.t, *y), u, params)

    try:
        k1 = f(y)
        k2 = f(tuple(yi + 0.5 * dt * ki for yi, ki in zip(y, k1)))
        k3 = f(tuple(yi + 0.5 * dt * ki for yi, ki in zip(y, k2)))
        k4 = f(tuple(yi + dt * ki for yi, ki in zip(y, k3)))
        nxt = tuple(
            yi + dt / 6.0 * (a + 2.0 * b + 2.0 * c + d)
            for yi, a, b, c, d in zip(y, k1, k2, k3, k4)
        )
    except (ValueError, OverflowError):
        # sin/cos of an infinite intermediate stage
        nxt = (math.nan,)
    if not all(math.isfinite(v) for v in nxt):
        raise NumericError(f"non-finite state after step at t={s.t}")
    return PendulumState(s.t + dt, *nxt)


def simulate_open_loop(s: PendulumState, u: float, dt: float, n: int,
                       params: PendulumParams = PendulumParams()) -> list[PendulumState]:
    """n RK4 steps under constant input; returns n + 1 states including s."""
    out = [s]
    for i in range(n):
        s = step_rk4(s, u, dt, params)
        s = s._replace(t=out[0].t + (i + 1) * dt)
        out.append(s)
    return out
