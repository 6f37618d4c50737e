"""Command-line front end: ``jcpurity simulate | sweep | quantify | point | verify``.

Exit codes: 0 success, 1 runtime / IO / verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

from .core import BlochFourVector
from .dynamics import DEFAULT_TAIL_BOUND, ModelParams, evaluate, poisson_weights
from .errors import JCPurityError
from .measures import purity_report
from .oracle import BLOCH_TOL, EIGEN_TOL, run_oracle_suite
from .output import format_number, format_records, write_records
from .scan import FIELDS, ScanRecord, TimeGrid, run_scan, run_sweep
from .svgplot import DEFAULT_SERIES, render_svg

COMMANDS = ("simulate", "sweep", "quantify", "point", "verify")


class UsageError(Exception):
    def __init__(self, message, usage=""):
        super().__init__(message)
        self.usage = usage


@dataclass
class RunConfig:
    command: str
    model: str = "jc"
    alpha: float = 7.0
    beta: float = 0.0
    f: float = 1e-7
    g: float = 1.0
    tau_max: float = 50.0
    steps: int = 5000
    tail_bound: float = DEFAULT_TAIL_BOUND
    out: str | None = None
    format: str = "csv"
    plot: str | None = None
    series: tuple = DEFAULT_SERIES
    sweep_param: str | None = None
    sweep_values: tuple = ()
    tau: float = 0.0
    bloch: tuple = (1.0, 0.0, 0.0, 0.0)
    samples: int = 64
    seed: int = 0
    tolerance: float | None = None
    threads: int = 1

    def params(self) -> ModelParams:
        return ModelParams(self.model, self.alpha, self.beta, self.f, self.g)

    def grid(self) -> TimeGrid:
        return TimeGrid(self.tau_max, self.steps)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, self.format_usage())


def _finite(text):
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(val):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return val


def _float_list(text):
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise argparse.ArgumentTypeError("empty list")
    return tuple(_finite(s.strip()) for s in items)


def _name_list(text):
    return tuple(s.strip() for s in text.split(",") if s.strip())


def build_parser() -> argparse.ArgumentParser:
    model = _Parser(add_help=False)
    model.add_argument("--model", choices=("jc", "ajc"), default="jc")
    model.add_argument("--alpha", type=_finite, default=7.0,
                       help="real coherent amplitude (mean photon number alpha^2)")
    model.add_argument("--beta", type=_finite, default=0.0, help="red-sideband detuning delta/g")
    model.add_argument("--f", type=_finite, default=1e-7, help="field frequency omega/g")
    model.add_argument("--g", type=_finite, default=1.0, help="coupling rate")
    model.add_argument("--tail-bound", type=_finite, default=DEFAULT_TAIL_BOUND,
                       help="admissible Poisson tail mass beyond the Fock cutoff")

    scan = _Parser(add_help=False)
    scan.add_argument("--tau-max", type=_finite, default=50.0)
    scan.add_argument("--steps", type=int, default=5000)
    scan.add_argument("--threads", type=int, default=1)
    scan.add_argument("--plot", default=None, help="write an SVG chart here")
    scan.add_argument("--series", type=_name_list, default=DEFAULT_SERIES,
                      help="comma-separated columns to plot")

    io = _Parser(add_help=False)
    io.add_argument("--out", default=None, help="output file (default: stdout)")
    io.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = _Parser(prog="jcpurity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("simulate", parents=[model, scan, io],
                   help="scan one model over a time grid")
    sw = sub.add_parser("sweep", parents=[model, scan, io],
                        help="repeat the scan for a list of alpha, beta or f values")
    lists = sw.add_mutually_exclusive_group(required=True)
    lists.add_argument("--alpha-list", type=_float_list)
    lists.add_argument("--beta-list", type=_float_list)
    lists.add_argument("--f-list", type=_float_list)
    q = sub.add_parser("quantify", parents=[io], help="purity report of one Bloch four-vector")
    q.add_argument("--r0", type=_finite, default=1.0)
    q.add_argument("--r1", type=_finite, default=0.0)
    q.add_argument("--r2", type=_finite, default=0.0)
    q.add_argument("--r3", type=_finite, default=0.0)
    pt = sub.add_parser("point", parents=[model, io], help="state and report at one time")
    pt.add_argument("--tau", type=_finite, required=True)
    v = sub.add_parser("verify", help="closed form vs brute-force oracle suite")
    v.add_argument("--samples", type=int, default=64)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tolerance", type=_finite, default=None,
                   help="override both comparison tolerances")
    return parser


def parse_args(argv) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(list(argv))
    cfg = RunConfig(command=ns.command)
    for name in ("model", "alpha", "beta", "f", "g", "tail_bound", "tau_max", "steps",
                 "threads", "plot", "series", "out", "format", "tau", "samples",
                 "seed", "tolerance"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if ns.command == "sweep":
        for pname in ("alpha", "beta", "f"):
            vals = getattr(ns, f"{pname}_list")
            if vals is not None:
                cfg.sweep_param, cfg.sweep_values = pname, vals
    if ns.command == "quantify":
        cfg.bloch = (ns.r0, ns.r1, ns.r2, ns.r3)

    def bad(msg):
        raise UsageError(msg, parser.format_usage())

    if cfg.command in ("simulate", "sweep", "point"):
        if cfg.alpha < 0:
            bad("--alpha must be non-negative")
        if cfg.g <= 0:
            bad("--g must be positive")
        if cfg.f < 0:
            bad("--f must be non-negative")
        if not 0 < cfg.tail_bound < 1:
            bad("--tail-bound must lie in (0, 1)")
    if cfg.command in ("simulate", "sweep"):
        if cfg.tau_max <= 0:
            bad("--tau-max must be positive")
        if cfg.steps < 1:
            bad("--steps must be at least 1")
        if cfg.threads < 1:
            bad("--threads must be at least 1")
        unknown = [s for s in cfg.series if s not in FIELDS or s == "tau"]
        if unknown or not cfg.series:
            bad(f"unknown plot series {unknown}; choose from {', '.join(FIELDS[1:])}")
    if cfg.command == "point" and cfg.tau < 0:
        bad("--tau must be non-negative")
    if cfg.command == "verify":
        if cfg.samples < 1:
            bad("--samples must be at least 1")
        if cfg.tolerance is not None and cfg.tolerance <= 0:
            bad("--tolerance must be positive")
    return cfg


def _suffixed(path, tag):
    stem, ext = os.path.splitext(path)
    return f"{stem}_{tag}{ext}"


def _emit(records, cfg, out=None):
    out = out if out is not None else cfg.out
    if out is None or out == "-":
        sys.stdout.write(format_records(records, cfg.format))
    else:
        write_records(records, cfg.format, out)


def _trunc(cfg):
    return poisson_weights(cfg.alpha, cfg.tail_bound)[1]


def cmd_simulate(cfg: RunConfig) -> int:
    records = run_scan(cfg.params(), cfg.grid(), _trunc(cfg), num_threads=cfg.threads)
    _emit(records, cfg)
    if cfg.plot:
        render_svg(records, cfg.series, cfg.plot)
    return 0


def cmd_sweep(cfg: RunConfig) -> int:
    trunc = None if cfg.sweep_param == "alpha" else _trunc(cfg)
    base = cfg.params()
    results = run_sweep(base, cfg.sweep_param, cfg.sweep_values, cfg.grid(), trunc,
                        num_threads=cfg.threads)
    for value, records in results.items():
        tag = f"{cfg.sweep_param}{format_number(value)}"
        if cfg.out is None or cfg.out == "-":
            sys.stdout.write(f"# {cfg.sweep_param}={format_number(value)}\n")
            _emit(records, cfg)
        else:
            _emit(records, cfg, _suffixed(cfg.out, tag))
        if cfg.plot:
            render_svg(records, cfg.series, _suffixed(cfg.plot, tag))
    return 0


def cmd_quantify(cfg: RunConfig) -> int:
    bloch = BlochFourVector(*cfg.bloch)
    row = {"r0": bloch.r0, "r1": bloch.r1, "r2": bloch.r2, "r3": bloch.r3,
           "r_norm": bloch.norm}
    row.update(purity_report(bloch).as_dict())
    if cfg.format == "json":
        text = json.dumps(row, indent=1) + "\n"
    else:
        keys = list(row)
        text = ",".join(keys) + "\n" + ",".join(format_number(row[k]) for k in keys) + "\n"
    if cfg.out is None or cfg.out == "-":
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    return 0


def cmd_point(cfg: RunConfig) -> int:
    bloch = evaluate(cfg.params(), cfg.tau, _trunc(cfg))
    _emit([ScanRecord(cfg.tau, bloch, purity_report(bloch))], cfg)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    btol = BLOCH_TOL if cfg.tolerance is None else cfg.tolerance
    etol = EIGEN_TOL if cfg.tolerance is None else cfg.tolerance
    report = run_oracle_suite(cfg.samples, cfg.seed, btol, etol)
    print(("PASS " if report.ok else "FAIL ") + report.summary())
    return 0 if report.ok else 1


HANDLERS = {
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
    "quantify": cmd_quantify,
    "point": cmd_point,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(exc.usage)
        sys.stderr.write(f"jcpurity: error: {exc}\n")
        return 2
    try:
        return HANDLERS[cfg.command](cfg)
    except (JCPurityError, OSError, ValueError) as exc:
        sys.stderr.write(f"jcpurity: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
