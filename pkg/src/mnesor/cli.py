"""Command-line entry point.

Exit status: 0 on success, 1 on runtime failure (a failed law, an overflow,
or a fall-over under ``--strict``), 2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from mnesor import config as configmod
from mnesor import traceio
from mnesor.core import enumerate_mnesors, format_mnesor, madd, mmul
from mnesor.laws import check_laws, check_semiring
from mnesor.minplus import ArithmeticRangeError
from mnesor.notation import ParseError, evaluate
from mnesor.sim import CONTROLLERS, COMPLETED, compare, metrics, run

GRADE_LIMIT = 32


class UsageError(Exception):
    pass


def _window(args) -> tuple[int, int]:
    lo, hi = args.min_grade, args.max_grade
    if lo > hi:
        raise UsageError(f"empty grade window: --min-grade {lo} > --max-grade {hi}")
    if lo < -GRADE_LIMIT or hi > GRADE_LIMIT:
        raise UsageError(f"grade window must lie within [{-GRADE_LIMIT}, {GRADE_LIMIT}]")
    return lo, hi


def cmd_laws(args) -> int:
    lo, hi = _window(args)
    report = check_semiring(lo, hi) if args.semiring else check_laws(lo, hi)
    if args.json:
        sys.stdout.write(traceio.dumps_json(report.as_list()))
    else:
        print(report.render())
    return 0 if report.passed else 1


def cmd_table(args) -> int:
    lo, hi = _window(args)
    op, sym = (madd, "+") if args.op == "add" else (mmul, "×")
    ms = enumerate_mnesors(lo, hi)
    head = [sym] + [format_mnesor(m) for m in ms]
    rows = [head]
    for x in ms:
        rows.append([format_mnesor(x)] + [format_mnesor(op(x, y)) for y in ms])
    width = max(len(c) for r in rows for c in r)
    for r in rows:
        print(" ".join(c.rjust(width) for c in r))
    return 0


def cmd_eval(args) -> int:
    try:
        value = evaluate(args.expression)
    except ParseError as exc:
        prefix = len(args.expression.encode("utf-8")[: exc.offset].decode("utf-8", "replace"))
        print(f"error: {exc}", file=sys.stderr)
        print(f"  {args.expression}\n  {' ' * prefix}^", file=sys.stderr)
        return 2
    except ArithmeticRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(format_mnesor(value))
    return 0


def _load_config(args):
    cfg = configmod.load(args.config) if args.config else configmod.from_dict({})
    return cfg


def _summary(name: str, m) -> str:
    st = "never" if m.settling_time == float("inf") else f"{m.settling_time:.3f} s"
    return (f"{name}: {m.status}; settling {st}; max|theta| {m.max_abs_theta:.4g} rad; "
            f"max|u| {m.max_abs_u:.4g} m/s²; effort {m.control_effort:.4g} m/s")


def cmd_simulate(args) -> int:
    cfg = _load_config(args)
    if args.controller:
        cfg = dataclasses.replace(cfg, controller=args.controller)
    tr = run(cfg)
    m = metrics(tr, cfg.settling_epsilon)
    out = Path(args.out)
    metrics_path = Path(args.metrics) if args.metrics else out.with_suffix(".json")
    traceio.write_trace(tr, out)
    traceio.write_atomic(metrics_path, traceio.dumps_json({
        "controller": cfg.controller,
        "config": configmod.to_dict(cfg),
        "metrics": m.as_dict(),
    }))
    print(_summary(cfg.controller, m))
    return 1 if args.strict and tr.status != COMPLETED else 0


def cmd_compare(args) -> int:
    base = _load_config(args)
    cfgs = [dataclasses.replace(base, controller=c) for c in args.controllers]
    result = compare(*cfgs)
    out_dir = Path(args.out_dir)
    names = []
    for i, c in enumerate(args.controllers):
        dup = args.controllers.count(c) > 1
        names.append(f"{c}-{i + 1}" if dup else c)
    runs = []
    for name, cfg, tr, m in zip(names, result.configs, result.trajectories, result.metrics):
        traceio.write_trace(tr, out_dir / f"{name}.csv")
        runs.append({"name": name, "controller": cfg.controller, "trace": f"{name}.csv",
                     "metrics": m.as_dict()})
    traceio.write_atomic(out_dir / "comparison.json", traceio.dumps_json({
        "config": configmod.to_dict(base),
        "runs": runs,
    }))
    if args.plot:
        try:
            svg = traceio.plot_svg(result.trajectories, names)
        except ImportError:
            print("warning: matplotlib not installed; skipping plot", file=sys.stderr)
        else:
            traceio.write_atomic(out_dir / "comparison.svg", svg)
    print(result.table())
    failed = any(tr.status != COMPLETED for tr in result.trajectories)
    return 1 if args.strict and failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mnesor", description="Mnesor algebra and pendulum control.")
    sub = p.add_subparsers(dest="command", required=True)

    def window(sp, lo, hi):
        sp.add_argument("--min-grade", type=int, default=lo)
        sp.add_argument("--max-grade", type=int, default=hi)

    sp = sub.add_parser("laws", help="check the algebraic laws exhaustively")
    window(sp, -8, 8)
    sp.add_argument("--semiring", action="store_true", help="check the min-plus laws instead")
    sp.add_argument("--json", action="store_true", help="machine-readable report")
    sp.set_defaults(func=cmd_laws)

    sp = sub.add_parser("table", help="print the addition or multiplication table")
    sp.add_argument("op", choices=("add", "mul"))
    window(sp, 0, 1)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("eval", help="evaluate a mnesor expression")
    sp.add_argument("expression")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("simulate", help="run one closed-loop simulation")
    sp.add_argument("--controller", choices=CONTROLLERS)
    sp.add_argument("--config", help="JSON run configuration")
    sp.add_argument("--out", required=True, help="trace CSV path")
    sp.add_argument("--metrics", help="metrics JSON path (default: OUT with .json suffix)")
    sp.add_argument("--strict", action="store_true", help="exit 1 if the pendulum falls over")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("compare", help="run two controllers on the same scenario")
    sp.add_argument("--config", help="JSON run configuration")
    sp.add_argument("--out-dir", required=True)
    sp.add_argument("--controllers", nargs=2, choices=CONTROLLERS, default=["pd", "mnesor"],
                    metavar="CONTROLLER")
    sp.add_argument("--no-plot", dest="plot", action="store_false", help="skip the SVG plot")
    sp.add_argument("--strict", action="store_true", help="exit 1 if any run falls over")
    sp.set_defaults(func=cmd_compare)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except configmod.ConfigError as exc:
        print(f"error: config: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
