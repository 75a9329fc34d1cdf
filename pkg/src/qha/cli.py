"""Command-line entry point: suite dispatch, norm calculator, report emission.

Exit codes: 0 all cases pass, 1 suite failures (report still written),
2 usage errors.  Stdout carries only the requested artifact; diagnostics go
to stderr.  Reports are byte-identical for identical inputs except for the
single "timestamp" field.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .gridio import load_grid_object, load_sequence
from .lab import DEFAULT_CATALOG, SUITES, SuiteConfig, run_suite
from .orlicz import luxemburg_norm_values, symbol_orlicz_norm, wave_orlicz_norm
from .phasegrid import PhaseSymbol, WaveFunction
from .schatten import symbol_schatten_norm
from .toeplitz import WindowPair, toeplitz_orlicz_bound
from .weyl import QuantizationIndex
from .young import YOUNG_GRAMMAR, parse_young

import numpy as np

__all__ = ["main", "run"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qha",
        description="Orlicz/Weyl phase-space toolbox and inequality verification suites",
    )
    parser.add_argument("--config", help="TOML file with defaults; flags override", default=None)
    sub = parser.add_subparsers(dest="command")

    p_verify = sub.add_parser("verify", help="run a verification suite and write its report")
    p_verify.add_argument("--suite", help=f"one of: {', '.join(sorted(SUITES))}")
    p_verify.add_argument("--N", type=int, default=None, help="grid size (default 128)")
    p_verify.add_argument("--seed", type=int, default=None, help="RNG seed (default 42)")
    p_verify.add_argument("--cases", type=int, default=None, help="case count (default 50)")
    p_verify.add_argument("--out", default=None, help="report path (default: stdout)")
    p_verify.add_argument("--format", choices=("json", "csv"), default=None)

    p_norm = sub.add_parser("norm", help="Luxemburg/Schatten norm of a file")
    p_norm.add_argument("--input", help="sequence, wave, or symbol file")
    p_norm.add_argument("--phi", help="Young spec, e.g. p:2")
    p_norm.add_argument("--schatten", action="store_true", help="Schatten symbol norm (symbol files)")
    p_norm.add_argument("--A", type=float, default=0.5, help="quantization parameter for --schatten")

    p_toep = sub.add_parser("toeplitz", help="Toeplitz Orlicz bound record")
    p_toep.add_argument("--symbol", help="symbol file")
    p_toep.add_argument("--window", help="wave file used for both windows")
    p_toep.add_argument("--phi", help="Young spec")

    sub.add_parser("catalog", help="list Young specs and suites")
    return parser


def _load_config(path: str | None, command: str | None) -> dict:
    if not path:
        return {}
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    merged = {k: v for k, v in data.items() if not isinstance(v, dict)}
    if command and isinstance(data.get(command), dict):
        merged.update(data[command])
    return merged


def _report_json(report) -> str:
    payload = report.to_dict()
    payload["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    return json.dumps(payload, indent=2) + "\n"


def _report_csv(report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["id", "inputs_digest", "lhs", "bound", "ratio", "pass", "diagnostics"])
    for c in report.cases:
        writer.writerow(
            [c.case_id, c.inputs_digest, repr(c.lhs), repr(c.bound), repr(c.ratio),
             c.passed, json.dumps(c.diagnostics, sort_keys=True)]
        )
    return buf.getvalue()


def _cmd_verify(args, conf) -> int:
    suite = args.suite or conf.get("suite")
    if not suite:
        print("verify requires --suite", file=sys.stderr)
        return 2
    if suite not in SUITES:
        print(f"unknown suite {suite!r}; known: {', '.join(sorted(SUITES))}", file=sys.stderr)
        return 2
    cfg = SuiteConfig(
        suite_id=suite,
        N=args.N if args.N is not None else int(conf.get("N", 128)),
        seed=args.seed if args.seed is not None else int(conf.get("seed", 42)),
        cases=args.cases if args.cases is not None else int(conf.get("cases", 50)),
        young_catalog=tuple(conf.get("young_catalog", DEFAULT_CATALOG)),
    )
    report = run_suite(cfg)
    fmt = args.format or conf.get("format", "json")
    text = _report_json(report) if fmt == "json" else _report_csv(report)
    out = args.out or conf.get("out")
    if out:
        Path(out).write_text(text)
        summary = report.summary
        print(
            f"{suite}: {summary['passed']}/{summary['total']} cases passed, "
            f"max ratio {summary['max_ratio']:.6g} -> {out}",
            file=sys.stderr,
        )
    else:
        sys.stdout.write(text)
    return 0 if report.all_passed else 1


def _cmd_norm(args, conf) -> int:
    path = args.input or conf.get("input")
    phi_spec = args.phi or conf.get("phi")
    if not path or not phi_spec:
        print("norm requires --input and --phi", file=sys.stderr)
        return 2
    phi = parse_young(phi_spec)
    try:
        obj = load_grid_object(path)
    except ValueError:
        obj = None
    if args.schatten:
        if not isinstance(obj, PhaseSymbol):
            print("--schatten needs a symbol file with a qha-grid header", file=sys.stderr)
            return 2
        A = QuantizationIndex.from_value(args.A)
        value = symbol_schatten_norm(obj, A, phi)
    elif isinstance(obj, PhaseSymbol):
        value = symbol_orlicz_norm(obj, phi)
    elif isinstance(obj, WaveFunction):
        value = wave_orlicz_norm(obj, phi)
    else:
        seq = load_sequence(path)
        value = luxemburg_norm_values(seq, np.ones(seq.size), phi)
    print(format(value, ".12g"))
    return 0


def _cmd_toeplitz(args, conf) -> int:
    sym_path = args.symbol or conf.get("symbol")
    win_path = args.window or conf.get("window")
    phi_spec = args.phi or conf.get("phi")
    if not sym_path or not win_path or not phi_spec:
        print("toeplitz requires --symbol, --window and --phi", file=sys.stderr)
        return 2
    a = load_grid_object(sym_path)
    w = load_grid_object(win_path)
    if not isinstance(a, PhaseSymbol) or not isinstance(w, WaveFunction):
        print("toeplitz needs a symbol file and a wave file", file=sys.stderr)
        return 2
    record = toeplitz_orlicz_bound(a, WindowPair(w, w), parse_young(phi_spec))
    print(
        json.dumps(
            {"lhs": record.lhs, "rhs": record.rhs, "constant": record.constant, "pass": record.passed},
            indent=2,
        )
    )
    return 0 if record.passed else 1


def _cmd_catalog() -> int:
    print(YOUNG_GRAMMAR)
    print("default Young catalog:", " ".join(DEFAULT_CATALOG))
    print("suites:", " ".join(sorted(SUITES)))
    return 0


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        conf = _load_config(args.config, args.command)
        if args.command == "verify":
            return _cmd_verify(args, conf)
        if args.command == "norm":
            return _cmd_norm(args, conf)
        if args.command == "toeplitz":
            return _cmd_toeplitz(args, conf)
        return _cmd_catalog()
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
