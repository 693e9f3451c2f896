"""Closed-loop simulation of the pendulum under either controller."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from mnesor.control import MnesorControllerConfig, PdGains, mnesor_control, pd_control
from mnesor.core import format_mnesor
from mnesor.plant import NumericError, PendulumParams, PendulumState, step_rk4

CONTROLLERS = ("pd", "mnesor", "none")
COMPLETED = "completed"
FELL_OVER = "fell-over"


@dataclass(frozen=True)
class SimConfig:
    dt: float = 0.001
    duration: float = 10.0
    theta0: float = 0.2
    omega0: float = 0.0
    controller: str = "pd"
    settling_epsilon: float = 0.01
    plant: PendulumParams = field(default_factory=PendulumParams)
    pd: PdGains = field(default_factory=PdGains)
    mnesor: MnesorControllerConfig = field(default_factory=MnesorControllerConfig)

    def __post_init__(self):
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise ValueError("dt must be > 0")
        if not (math.isfinite(self.duration) and self.duration >= self.dt):
            raise ValueError("duration must be >= dt")
        if not (math.isfinite(self.theta0) and math.isfinite(self.omega0)):
            raise ValueError("initial conditions must be finite")
        if self.controller not in CONTROLLERS:
            raise ValueError(f"controller must be one of {', '.join(CONTROLLERS)}")
        if not (math.isfinite(self.settling_epsilon) and self.settling_epsilon > 0):
            raise ValueError("settling_epsilon must be > 0")

    @property
    def steps(self) -> int:
        return round(self.duration / self.dt)


@dataclass
class Trajectory:
    """One sample per control step.  xi/omega_m/u_m are empty strings for non-mnesor runs."""

    controller: str
    dt: float
    t: list[float] = field(default_factory=list)
    theta: list[float] = field(default_factory=list)
    omega: list[float] = field(default_factory=list)
    u: list[float] = field(default_factory=list)
    xi: list[str] = field(default_factory=list)
    omega_m: list[str] = field(default_factory=list)
    u_m: list[str] = field(default_factory=list)
    status: str = COMPLETED

    def __len__(self):
        return len(self.t)

    def rows(self):
        return zip(self.t, self.theta, self.omega, self.u, self.xi, self.omega_m, self.u_m)


@dataclass(frozen=True)
class Metrics:
    settling_time: float  # math.inf when theta never settles
    max_abs_theta: float
    max_abs_u: float
    control_effort: float
    terminal_theta: float
    status: str

    def as_dict(self) -> dict:
        return {
            "settling_time": None if math.isinf(self.settling_time) else self.settling_time,
            "max_abs_theta": self.max_abs_theta,
            "max_abs_u": self.max_abs_u,
            "control_effort": self.control_effort,
            "terminal_theta": self.terminal_theta,
            "status": self.status,
        }


def _controller(cfg: SimConfig):
    if cfg.controller == "pd":
        return lambda s: (pd_control(s, cfg.pd), "", "", "")
    if cfg.controller == "mnesor":
        def ctl(s):
            out = mnesor_control(s, cfg.mnesor)
            return out.u, format_mnesor(out.xi), format_mnesor(out.omega), format_mnesor(out.U)
        return ctl
    return lambda s: (0.0, "", "", "")


def run(cfg: SimConfig) -> Trajectory:
    """Simulate from (theta0, omega0) with the control held over each step.

    Sample i is taken at t = i*dt, for i = 0..steps.  A run stops early, with
    status ``fell-over``, at the first sample with |theta| > pi.
    """
    ctl = _controller(cfg)
    tr = Trajectory(cfg.controller, cfg.dt)
    s = PendulumState(0.0, cfg.theta0, cfg.omega0, 0.0, 0.0)
    n = cfg.steps
    for i in range(n + 1):
        u, xi, om, U = ctl(s)
        tr.t.append(s.t)
        tr.theta.append(s.theta)
        tr.omega.append(s.omega)
        tr.u.append(u)
        tr.xi.append(xi)
        tr.omega_m.append(om)
        tr.u_m.append(U)
        if s.fallen:
            tr.status = FELL_OVER
            break
        if i == n:
            break
        try:
            s = step_rk4(s, u, cfg.dt, cfg.plant)
        except NumericError:
            tr.status = FELL_OVER
            break
        s = s._replace(t=(i + 1) * cfg.dt)
    return tr


def metrics(tr: Trajectory, epsilon: float = 0.01) -> Metrics:
    if not len(tr):
        raise ValueError("empty trajectory")
    last_outside = None
    for i in range(len(tr) - 1, -1, -1):
        if abs(tr.theta[i]) >= epsilon:
            last_outside = i
            break
    if tr.status != COMPLETED or last_outside == len(tr) - 1:
        settling = math.inf
    elif last_outside is None:
        settling = tr.t[0]
    else:
        settling = tr.t[last_outside + 1]
    return Metrics(
        settling_time=settling,
        max_abs_theta=max(abs(v) for v in tr.theta),
        max_abs_u=max(abs(v) for v in tr.u),
        control_effort=sum(abs(v) for v in tr.u) * tr.dt,
        terminal_theta=tr.theta[-1],
        status=tr.status,
    )


@dataclass
class Comparison:
    configs: list[SimConfig]
    trajectories: list[Trajectory]
    metrics: list[Metrics]

    def table(self) -> str:
        names = [c.controller for c in self.configs]
        rows = [("", *names)]
        for key in ("status", "settling_time", "max_abs_theta", "max_abs_u",
                    "control_effort", "terminal_theta"):
            cells = []
            for m in self.metrics:
                v = getattr(m, key)
                cells.append(v if isinstance(v, str) else f"{v:.6g}")
            rows.append((key, *cells))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def compare(*cfgs: SimConfig) -> Comparison:
    """Run each config and tabulate metrics side by side.

    All configs must share the plant and the initial condition.
    """
    if len(cfgs) < 2:
        raise ValueError("compare needs at least two configs")
    ref = cfgs[0]
    for c in cfgs[1:]:
        if (c.plant, c.theta0, c.omega0, c.dt, c.duration) != (
                ref.plant, ref.theta0, ref.omega0, ref.dt, ref.duration):
            raise ValueError("compared runs must share plant, initial state, dt and duration")
    trs = [run(c) for c in cfgs]
    return Comparison(list(cfgs), trs, [metrics(tr, c.settling_epsilon) for tr, c in zip(trs, cfgs)])
