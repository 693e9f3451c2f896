"""Trace CSV, metrics JSON and SVG plots.  All writes are atomic."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path

from mnesor.sim import COMPLETED, Trajectory

COLUMNS = ("t", "theta", "omega", "u", "xi", "omega_m", "u_m")


def _num(x: float) -> str:
    return f"{x:.9g}"


def write_atomic(path: str | Path, data: str | bytes):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, mode, **({} if mode == "wb" else {"encoding": "utf-8", "newline": ""})) as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def trace_csv(tr: Trajectory) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for t, th, om, u, xi, omm, um in tr.rows():
        w.writerow((_num(t), _num(th), _num(om), _num(u), xi, omm, um))
    return buf.getvalue()


def write_trace(tr: Trajectory, path: str | Path):
    write_atomic(path, trace_csv(tr))


def read_trace(path: str | Path, controller: str = "", dt: float | None = None) -> Trajectory:
    """Read a trace CSV.  dt defaults to the first time step in the file."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != COLUMNS:
            raise ValueError(f"{path}: unexpected header {header}")
        tr = Trajectory(controller, 0.0)
        for row in reader:
            tr.t.append(float(row[0]))
            tr.theta.append(float(row[1]))
            tr.omega.append(float(row[2]))
            tr.u.append(float(row[3]))
            tr.xi.append(row[4])
            tr.omega_m.append(row[5])
            tr.u_m.append(row[6])
    if dt is None:
        dt = tr.t[1] - tr.t[0] if len(tr) > 1 else 0.0
    tr.dt = dt
    return tr


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def plot_svg(trajectories: list[Trajectory], titles: list[str]) -> bytes:
    """Line charts of theta, omega and u against t, one column per trajectory."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "mnesor"
    fig, axes = plt.subplots(3, len(trajectories), sharex=True, squeeze=False,
                             figsize=(5 * len(trajectories), 7))
    for j, (tr, title) in enumerate(zip(trajectories, titles)):
        for i, (label, series) in enumerate((("theta [rad]", tr.theta),
                                             ("omega [rad/s]", tr.omega),
                                             ("u [m/s²]", tr.u))):
            ax = axes[i][j]
            ax.plot(tr.t, series, lw=1)
            ax.set_ylabel(label)
            ax.grid(True, alpha=0.3)
        status = "" if tr.status == COMPLETED else f" ({tr.status})"
        axes[0][j].set_title(title + status)
        axes[-1][j].set_xlabel("t [s]")
    fig.tight_layout()
    buf = io.BytesIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()
