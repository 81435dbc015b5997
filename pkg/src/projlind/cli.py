"""Command-line entry point.

Subcommands:

* ``run --config PATH --mode {compare,exact-only,approx-only} --out PATH``
  propagates the configured scenario over its time grid, writes a CSV and
  prints a short summary.
* ``validate --config PATH`` checks the projector family axioms and prints
  the residual report.
* ``presets [NAME]`` lists the shipped presets, or dumps one as JSON.

Exit codes: 0 success, 1 validation failure, 2 propagation failure,
3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import numpy as np

from . import analysis, config, presets
from .exceptions import ConfigError, InvalidInputError
from .model import Scenario, validate_family
from .propagators import approx_propagate_closed, bch_error_indicator, exact_propagate

#: Fixed CSV column order.
CSV_COLUMNS = (
    "time", "trace_distance", "frobenius_gap",
    "exact_trace_re", "exact_trace_im",
    "approx_trace_re", "approx_trace_im",
    "approx_min_eig", "bch_indicator",
)

MODES = ("compare", "exact-only", "approx-only")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PROPAGATION = 2
EXIT_IO = 3

_NAN = float("nan")


def _min_eig(state) -> float:
    h = (state + state.conj().T) / 2.0
    return float(np.linalg.eigvalsh(h)[0])


def _collect_rows(scenario: Scenario, mode: str) -> list[dict]:
    """One dict per time point with every CSV column; columns the mode does
    not compute are NaN."""
    rows = []
    if mode == "compare":
        for rec in analysis.sweep(scenario):
            rows.append({
                "time": rec.time,
                "trace_distance": rec.trace_distance,
                "frobenius_gap": rec.frobenius_gap,
                "exact_trace_re": rec.exact_trace.real,
                "exact_trace_im": rec.exact_trace.imag,
                "approx_trace_re": rec.approx_trace.real,
                "approx_trace_im": rec.approx_trace.imag,
                "approx_min_eig": rec.approx_min_eigenvalue,
                "bch_indicator": rec.bch_indicator,
            })
        return rows
    for t in scenario.time_grid:
        row = dict.fromkeys(CSV_COLUMNS, _NAN)
        row["time"] = float(t)
        row["bch_indicator"] = bch_error_indicator(scenario, t)
        if mode == "exact-only":
            tr = np.trace(exact_propagate(scenario, t).state)
            row["exact_trace_re"], row["exact_trace_im"] = tr.real, tr.imag
        else:
            state = approx_propagate_closed(scenario, t).state
            tr = np.trace(state)
            row["approx_trace_re"], row["approx_trace_im"] = tr.real, tr.imag
            row["approx_min_eig"] = _min_eig(state)
        rows.append(row)
    return rows


def _write_csv(path: str, rows: list[dict]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(f"{row[col]:.17g}" for col in CSV_COLUMNS)


def _summary(scenario: Scenario, mode: str, rows: list[dict]) -> list[str]:
    lines = [
        f"scenario: dim={scenario.dim}, projectors={len(scenario.family)}, "
        f"time points={len(rows)}, mode={mode}",
    ]
    gaps = [r for r in rows if not math.isnan(r["trace_distance"])]
    if gaps:
        records = [analysis.ErrorRecord(
            time=r["time"], trace_distance=r["trace_distance"],
            frobenius_gap=r["frobenius_gap"],
            exact_trace=complex(r["exact_trace_re"], r["exact_trace_im"]),
            approx_trace=complex(r["approx_trace_re"], r["approx_trace_im"]),
            approx_min_eigenvalue=r["approx_min_eig"],
            bch_indicator=r["bch_indicator"]) for r in gaps]
        try:
            order = f"{analysis.convergence_order(records):.3f}"
        except InvalidInputError:
            order = "n/a (fewer than 3 usable gap points)"
        lines.append(f"fitted convergence order: {order}")
        lines.append(f"max trace distance: {max(r['trace_distance'] for r in gaps):.6e}")
    else:
        lines.append("fitted convergence order: n/a")
        lines.append("max trace distance: n/a")
    eigs = [r["approx_min_eig"] for r in rows if not math.isnan(r["approx_min_eig"])]
    if eigs:
        lines.append(f"worst positivity violation: {max(0.0, -min(eigs)):.6e}")
    else:
        lines.append("worst positivity violation: n/a")
    return lines


def _cmd_run(args) -> int:
    try:
        scenario = config.load_config(args.config)
    except OSError as exc:
        print(f"error: cannot read {args.config}: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        rows = _collect_rows(scenario, args.mode)
    except Exception as exc:  # propagation is not expected to fail on valid input
        print(f"error: propagation failed: {exc}", file=sys.stderr)
        return EXIT_PROPAGATION

    try:
        _write_csv(args.out, rows)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO

    for line in _summary(scenario, args.mode, rows):
        print(line)
    print(f"wrote: {args.out}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.config}: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        doc = config._parse_document(text)
        members = config._parse_members(doc, doc["dimension"])
    except (ConfigError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    report = validate_family(members)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_VALIDATION


def _cmd_presets(args) -> int:
    if args.name is None:
        for name in presets.PRESET_NAMES:
            print(name)
        return EXIT_OK
    try:
        print(presets.preset_text(args.name))
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projlind",
        description="Propagate projector-dissipator master equations and "
                    "compare the exact and factorized solutions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="propagate a scenario and write a CSV report")
    p_run.add_argument("--config", required=True, help="scenario JSON file")
    p_run.add_argument("--mode", choices=MODES, default="compare")
    p_run.add_argument("--out", required=True, help="output CSV path")
    p_run.set_defaults(func=_cmd_run)

    p_val = sub.add_parser("validate", help="check the projector family of a config")
    p_val.add_argument("--config", required=True, help="scenario JSON file")
    p_val.set_defaults(func=_cmd_validate)

    p_pre = sub.add_parser("presets", help="list shipped presets or dump one")
    p_pre.add_argument("name", nargs="?", default=None, help="preset to dump as JSON")
    p_pre.set_defaults(func=_cmd_presets)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
