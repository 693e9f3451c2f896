import dataclasses

import pytest

from mnesor.sim import SimConfig, run
from mnesor.traceio import COLUMNS, plot_svg, read_trace, trace_csv, write_atomic, write_trace


@pytest.fixture(scope="module")
def mnesor_run():
    return run(SimConfig(controller="mnesor", duration=1.0))


def test_header_and_columns(mnesor_run):
    lines = trace_csv(mnesor_run).splitlines()
    assert lines[0] == ",".join(COLUMNS)
    assert lines[1] == "0,0.2,0,30,PST(+8),ALL,PST(+8)"
    assert len(lines) == len(mnesor_run) + 1


def test_pd_rows_leave_mnesor_columns_empty():
    tr = run(SimConfig(duration=0.01))
    assert trace_csv(tr).splitlines()[1].endswith(",,,")


def test_csv_round_trip(tmp_path, mnesor_run):
    path = tmp_path / "trace.csv"
    write_trace(mnesor_run, path)
    back = read_trace(path, "mnesor")
    for name in ("t", "theta", "omega", "u"):
        assert getattr(back, name) == [float(f"{v:.9g}") for v in getattr(mnesor_run, name)]
    for name in ("xi", "omega_m", "u_m"):
        assert getattr(back, name) == getattr(mnesor_run, name)


def test_atomic_write_leaves_no_temp(tmp_path):
    target = tmp_path / "sub" / "out.txt"
    write_atomic(target, "hello")
    write_atomic(target, "again")
    assert target.read_text() == "again"
    assert [p.name for p in target.parent.iterdir()] == ["out.txt"]


def test_svg_is_deterministic(mnesor_run):
    pytest.importorskip("matplotlib")
    pd = run(SimConfig(duration=1.0))
    a = plot_svg([pd, mnesor_run], ["pd", "mnesor"])
    b = plot_svg([pd, mnesor_run], ["pd", "mnesor"])
    assert a == b
    assert a.lstrip().startswith(b"<?xml")
