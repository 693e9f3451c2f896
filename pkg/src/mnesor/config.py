"""JSON run configuration.

The document mirrors :class:`mnesor.sim.SimConfig`; every key is optional and
falls back to the defaults below.  Unknown keys are rejected::

    {
      "dt": 0.001, "duration": 10.0, "theta0": 0.2, "omega0": 0.0,
      "controller": "pd", "settling_epsilon": 0.01,
      "plant": {"a": 1.0, "g": 9.81, "m": 1.0, "u_max": 30.0},
      "pd": {"kp": 10.0, "kd": 5.0, "u_max": 30.0, "sign_mode": "plant-consistent"},
      "mnesor": {
        "theta_quantizer": {"scale": 0.025, "deadband": 0.005, "max_grade": 8,
                            "deadband_target": "all"},
        "omega_quantizer": {"scale": 0.125, "deadband": 0.025, "max_grade": 8,
                            "deadband_target": "all"},
        "actuator": {"u_max": 30.0, "max_grade": 8},
        "cross_sign_zero": true
      }
    }
"""

from __future__ import annotations

import dataclasses
import json
import typing
from pathlib import Path

from mnesor.sim import SimConfig


class ConfigError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path or "<root>"
        super().__init__(f"{self.path}: {message}")


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _coerce(value, tp, path: str):
    if tp is bool:
        if not isinstance(value, bool):
            raise ConfigError(path, f"expected true/false, got {json.dumps(value)}")
        return value
    if tp is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(path, f"expected an integer, got {json.dumps(value)}")
        return value
    if tp is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(path, f"expected a number, got {json.dumps(value)}")
        return float(value)
    if tp is str:
        if not isinstance(value, str):
            raise ConfigError(path, f"expected a string, got {json.dumps(value)}")
        return value
    raise TypeError(f"unsupported config type {tp!r}")


def merge(default, data, path: str = ""):
    """Return ``default`` with the fields named in ``data`` replaced."""
    if not isinstance(data, dict):
        raise ConfigError(path, f"expected an object, got {json.dumps(data)}")
    hints = typing.get_type_hints(type(default))
    names = {f.name for f in dataclasses.fields(default)}
    changes = {}
    for key, value in data.items():
        sub = _join(path, key)
        if key not in names:
            raise ConfigError(sub, "unknown key")
        tp = hints[key]
        current = getattr(default, key)
        if dataclasses.is_dataclass(current):
            changes[key] = merge(current, value, sub)
        else:
            changes[key] = _coerce(value, tp, sub)
    try:
        return dataclasses.replace(default, **changes)
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from None


def from_dict(data: dict) -> SimConfig:
    return merge(SimConfig(), data)


def load(path: str | Path) -> SimConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError("", f"cannot read config file {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("", f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_dict(data)


def to_dict(cfg) -> dict:
    return dataclasses.asdict(cfg)
