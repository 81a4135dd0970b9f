"""Command line for zero scans, extreme-value runs, and verification.

Subcommands: `zeros scan`, `verify`, `large`, `small`, `report`.  A
key=value config file (--config) overrides any flags it names; the
cache directory comes from ZETARES_CACHE_DIR when set.  Exit code 0
means every check the invocation ran has passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .experiments import (ExperimentConfig, run_large_values,
                          run_small_values, run_verify)
from .reports import _rows_to_csv, emit_report
from .zeros import cache_dir, find_zeros


def _parse_window(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("window must be 'p_lo,p_hi'")
    lo, hi = float(parts[0]), float(parts[1])
    if not lo < hi:
        raise argparse.ArgumentTypeError("window needs p_lo < p_hi")
    return lo, hi


def _load_config(path: str) -> dict:
    """key=value lines; '#' comments; JSON-style scalars where they parse."""
    conf: dict = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"bad config line (need key=value): {raw!r}")
        key, val = (s.strip() for s in line.split("=", 1))
        if key == "window":
            conf[key] = _parse_window(val)
            continue
        try:
            conf[key] = json.loads(val)
        except json.JSONDecodeError:
            conf[key] = val
    return conf


def _apply_config(args: argparse.Namespace, conf: dict) -> None:
    for key, val in conf.items():
        if not hasattr(args, key):
            raise ValueError(f"unknown config key {key!r}")
        setattr(args, key, val)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _run_experiment(report, args) -> int:
    _emit(emit_report(report, args.format), args.out)
    if args.out:
        for c in report.checks:
            print(f"[{'PASS' if c.passed else 'FAIL'}] {c.label} "
                  f"ratio={c.ratio:.6g}")
    return 0 if report.all_passed else 1


def _cmd_scan(args) -> int:
    t_from = max(args.t_from, 2.0)   # no zeros below; scanner needs t >= 2
    zc = find_zeros(t_from, args.t_to)
    name = f"zeros_{t_from:g}_{args.t_to:g}.zrc"
    path = Path(cache_dir()) / name
    zc.save(path)
    if args.csv:
        zc.export_csv(args.csv)
    worst = zc.verify_rvm()
    print(f"{len(zc.records)} zeros in ({t_from:g}, {args.t_to:g}] "
          f"-> {path}")
    print(f"count-vs-smooth worst deviation {worst:.3f}")
    return 0


def _cmd_verify(args) -> int:
    reports = run_verify(only=args.only)
    for rep in reports:
        print(f"[{'PASS' if rep.passed else 'FAIL'}] {rep.label} "
              f"({rep.numeric:.0f}/{rep.predicted:.0f} subchecks)")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_large(args) -> int:
    mode = "large_tau_r" if args.mode == "tau_r" else "large_resonator"
    cfg = ExperimentConfig(mode=mode, t1=args.t1, t2=args.t2, M=args.M,
                           r=args.r, theta=args.theta, window=args.window,
                           tolerance=args.tolerance, out_path=args.out,
                           fmt=args.format)
    return _run_experiment(run_large_values(cfg), args)


def _cmd_small(args) -> int:
    cfg = ExperimentConfig(mode="small_values", t1=args.t1, t2=args.t2,
                           M=args.mcap, window=args.window,
                           tolerance=args.tolerance, out_path=args.out,
                           fmt=args.format)
    return _run_experiment(run_small_values(cfg), args)


def _cmd_report(args) -> int:
    doc = json.loads(Path(args.path).read_text())
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return 0
    if isinstance(doc, dict) and doc.get("rows"):
        sys.stdout.write(_rows_to_csv(doc["rows"]))
    elif isinstance(doc, dict) and "checks" in doc:
        sys.stdout.write(_rows_to_csv(doc["checks"]))
    else:
        sys.stdout.write(_rows_to_csv([doc]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetares",
        description="extreme values of zeta'(rho) over computed zeta zeros")
    parser.add_argument("--config",
                        help="key=value file; entries override flags")
    sub = parser.add_subparsers(dest="command", required=True)

    pz = sub.add_parser("zeros", help="zero-cache operations")
    zsub = pz.add_subparsers(dest="zeros_command", required=True)
    ps = zsub.add_parser("scan", help="scan and cache a zero range")
    ps.add_argument("--from", dest="t_from", type=float, required=True)
    ps.add_argument("--to", dest="t_to", type=float, required=True)
    ps.add_argument("--csv", help="also export index,gamma CSV here")
    ps.set_defaults(fn=_cmd_scan)

    pv = sub.add_parser("verify", help="run the acceptance checklist")
    pv.add_argument("--only", type=int, choices=range(1, 11), default=None)
    pv.set_defaults(fn=_cmd_verify)

    pl = sub.add_parser("large", help="large-values resonance run")
    pl.add_argument("--mode", choices=("tau_r", "resonator"),
                    default="tau_r")
    pl.add_argument("--r", type=int, default=2)
    pl.add_argument("--M", type=int, default=50)
    pl.add_argument("--t1", type=float, default=0.0)
    pl.add_argument("--t2", type=float, default=5000.0)
    pl.add_argument("--theta", type=float, default=None)
    pl.add_argument("--window", type=_parse_window, default=None)
    pl.add_argument("--tolerance", type=float, default=0.30)
    pl.add_argument("--out", default=None)
    pl.add_argument("--format", choices=("json", "csv"), default="json")
    pl.set_defaults(fn=_cmd_large)

    pm = sub.add_parser("small", help="small-values run over good ordinates")
    pm.add_argument("--t1", type=float, default=1000.0)
    pm.add_argument("--t2", type=float, default=2000.0)
    pm.add_argument("--window", type=_parse_window, default=None)
    pm.add_argument("--mcap", type=int, default=1)
    pm.add_argument("--tolerance", type=float, default=0.30)
    pm.add_argument("--out", default=None)
    pm.add_argument("--format", choices=("json", "csv"), default="json")
    pm.set_defaults(fn=_cmd_small)

    pr = sub.add_parser("report", help="re-emit a stored JSON report")
    pr.add_argument("path")
    pr.add_argument("--format", choices=("json", "csv"), default="json")
    pr.set_defaults(fn=_cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config:
            _apply_config(args, _load_config(args.config))
        return args.fn(args)
    except BrokenPipeError:
        # reader hung up (e.g. | head); mute the interpreter's own complaint
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 141
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"zetares: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
