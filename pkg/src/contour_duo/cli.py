"""Command-line front end and the only serialization layer.

Subcommands: simulate | cycle | classify | diagram | sweep.  Output formats
are json, csv and (for diagrams) ascii.  Every serialized number is an
integer or an exact num/den pair; velocities additionally carry the reduced
ratio as text.  Exit codes: 0 success, 1 invalid parameters or range,
2 inadmissible initial state, 3 sweep ran with --strict and found
discrepancies.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .dynamics import find_limit_cycle, classify_empirical, simulate
from .model import (
    InadmissibleStateError,
    State,
    SystemParams,
    canonical_state,
)
from .theory import ModePrediction, PredictedRegime, predict, spectrum_grid
from .verify import InstanceReport, SweepReport, sweep

MODE_CHARS = {"free": ".", "cluster-motion": "+", "collapse": "#", "intermediate": "+"}


# ---------------------------------------------------------------- helpers

def _fraction_json(v: Fraction) -> dict:
    return {"num": v.numerator, "den": v.denominator, "text": str(v)}


def _prediction_json(p: ModePrediction) -> dict:
    return {"mode": p.regime.value, "period": p.period, "v": _fraction_json(p.v)}


def _instance_json(report: InstanceReport) -> dict:
    p, x0 = report.params, report.x0
    return {
        "params": {"n": p.n, "d": p.d, "l1": p.l1, "l2": p.l2},
        "x0": {"x1": x0.x1, "x2": x0.x2},
        "transient": report.transient,
        "period": report.period,
        "moves": [report.moves1, report.moves2],
        "velocity": [_fraction_json(report.v1), _fraction_json(report.v2)],
        "empirical_mode": report.empirical.kind.value,
        "predicted": _prediction_json(report.predicted),
        "agree": report.agree,
        "discrepancy_kind": report.discrepancy.value if report.discrepancy else None,
    }


SWEEP_CSV_COLUMNS = [
    "n", "d", "l1", "l2", "x1", "x2", "transient", "period", "a1", "a2",
    "v1_num", "v1_den", "v2_num", "v2_den", "empirical", "predicted",
    "agree", "discrepancy",
]


def _instance_csv_row(report: InstanceReport) -> list:
    p, x0 = report.params, report.x0
    return [
        p.n, p.d, p.l1, p.l2, x0.x1, x0.x2,
        report.transient, report.period, report.moves1, report.moves2,
        report.v1.numerator, report.v1.denominator,
        report.v2.numerator, report.v2.denominator,
        report.empirical.kind.value, report.predicted.regime.value,
        str(report.agree).lower(),
        report.discrepancy.value if report.discrepancy else "",
    ]


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _parse_params(args) -> SystemParams:
    return SystemParams(args.n, args.d, args.l1, args.l2)


def _parse_x0(args, params: SystemParams) -> State:
    default = canonical_state(params)
    x1 = args.x1 if args.x1 is not None else default.x1
    x2 = args.x2 if args.x2 is not None else default.x2
    return State(x1, x2)


# ------------------------------------------------------------- subcommands

def cmd_simulate(args) -> int:
    params = _parse_params(args)
    x0 = _parse_x0(args, params)
    steps = args.steps if args.steps is not None else params.n * params.n
    run = simulate(params, x0, steps)
    if args.format == "json":
        rows = [
            {
                "t": t,
                "x1": run.states[t].x1,
                "x2": run.states[t].x2,
                "moved1": run.moved[t - 1][0] if t else False,
                "moved2": run.moved[t - 1][1] if t else False,
                "h1": run.h1[t],
                "h2": run.h2[t],
            }
            for t in range(len(run))
        ]
        payload = {
            "params": {"n": params.n, "d": params.d, "l1": params.l1, "l2": params.l2},
            "x0": {"x1": x0.x1, "x2": x0.x2},
            "rows": rows,
        }
        _write_output(_json_text(payload), args.out)
    else:
        rows = [
            [
                t,
                run.states[t].x1,
                run.states[t].x2,
                str(run.moved[t - 1][0] if t else False).lower(),
                str(run.moved[t - 1][1] if t else False).lower(),
                run.h1[t],
                run.h2[t],
            ]
            for t in range(len(run))
        ]
        _write_output(_csv_text(["t", "x1", "x2", "moved1", "moved2", "h1", "h2"], rows), args.out)
    return 0


def cmd_cycle(args) -> int:
    params = _parse_params(args)
    x0 = _parse_x0(args, params)
    cycle = find_limit_cycle(params, x0)
    mode = classify_empirical(cycle)
    if args.format == "json":
        payload = {
            "params": {"n": params.n, "d": params.d, "l1": params.l1, "l2": params.l2},
            "x0": {"x1": x0.x1, "x2": x0.x2},
            "transient": cycle.transient_len,
            "period": cycle.period,
            "moves": [cycle.moves1, cycle.moves2],
            "velocity": [_fraction_json(cycle.v1), _fraction_json(cycle.v2)],
            "empirical_mode": mode.kind.value,
        }
        _write_output(_json_text(payload), args.out)
    else:
        header = SWEEP_CSV_COLUMNS[:15]
        row = [
            params.n, params.d, params.l1, params.l2, x0.x1, x0.x2,
            cycle.transient_len, cycle.period, cycle.moves1, cycle.moves2,
            cycle.v1.numerator, cycle.v1.denominator,
            cycle.v2.numerator, cycle.v2.denominator,
            mode.kind.value,
        ]
        _write_output(_csv_text(header, [row]), args.out)
    return 0


def cmd_classify(args) -> int:
    params = _parse_params(args)
    prediction = predict(params)
    if prediction.regime is PredictedRegime.CLUSTER:
        line = f"cluster-motion T={prediction.period} v={prediction.v}"
    else:
        line = f"{prediction.regime.value} v={prediction.v}"
    _write_output(line + "\n", args.out)
    return 0


def _diagram_cells(n: int, d: int, source: str) -> list[dict]:
    """Cell records (l1, l2, mode char, exact velocity) in lexicographic order."""
    cells = []
    if source == "theory":
        grid = spectrum_grid(n, d)
        for l1 in range(1, n):
            for l2 in range(1, n):
                p = grid[(l1, l2)]
                cells.append(
                    {"l1": l1, "l2": l2, "mode": MODE_CHARS[p.regime.value], "v": p.v}
                )
    else:
        for l1 in range(1, n):
            for l2 in range(1, n):
                params = SystemParams(n, d, l1, l2)
                cycle = find_limit_cycle(params, canonical_state(params))
                mode = classify_empirical(cycle)
                cells.append(
                    {"l1": l1, "l2": l2, "mode": MODE_CHARS[mode.kind.value], "v": cycle.v1}
                )
    return cells


def _diagram_text(n: int, d: int, source: str, fmt: str, cells: list[dict]) -> str:
    if fmt == "json":
        payload = {
            "n": n,
            "d": d,
            "source": source,
            "cells": [
                {"l1": c["l1"], "l2": c["l2"], "mode": c["mode"], "v": _fraction_json(c["v"])}
                for c in cells
            ],
        }
        return _json_text(payload)
    if fmt == "csv":
        rows = [
            [c["l1"], c["l2"], c["mode"], c["v"].numerator, c["v"].denominator]
            for c in cells
        ]
        return _csv_text(["l1", "l2", "mode", "v_num", "v_den"], rows)
    # ascii: one row per l1 ascending, one column per l2 ascending
    by_cell = {(c["l1"], c["l2"]): c["mode"] for c in cells}
    lines = [
        f"# diagram n={n} d={d} source={source}",
        f"# rows l1=1..{n - 1} top to bottom, cols l2=1..{n - 1}; '.'=free '+'=cluster-motion '#'=collapse",
    ]
    for l1 in range(1, n):
        lines.append("".join(by_cell[(l1, l2)] for l2 in range(1, n)))
    return "\n".join(lines) + "\n"


def cmd_diagram(args) -> int:
    SystemParams(args.n, args.d, 1, 1)  # validate geometry
    cells = _diagram_cells(args.n, args.d, args.source)
    _write_output(_diagram_text(args.n, args.d, args.source, args.format, cells), args.out)
    return 0


def _sweep_json(report: SweepReport) -> dict:
    return {
        "range": {"n_min": report.n_min, "n_max": report.n_max, "policy": report.policy},
        "totals": {
            "instances": report.instances,
            "agreements": report.agreements,
            "discrepancies": dict(report.discrepancies),
        },
        "regions": {
            name: {"instances": stats.instances, "agreements": stats.agreements}
            for name, stats in report.regions.items()
        },
        "cycle_metrics": {
            "intermediate_cycles": report.intermediate_cycles,
            "intermediate_cycles_with_listed_state": report.intermediate_cycles_with_listed_state,
            "velocity_asymmetries": report.velocity_asymmetries,
        },
        "rows": [_instance_json(row) for row in report.rows],
    }


def cmd_sweep(args) -> int:
    report = sweep(args.n_min, args.n_max, initial_state_policy=args.states)
    if args.format == "json":
        _write_output(_json_text(_sweep_json(report)), args.out)
    else:
        rows = [_instance_csv_row(row) for row in report.rows]
        _write_output(_csv_text(SWEEP_CSV_COLUMNS, rows), args.out)
    if args.strict and report.agreements != report.instances:
        return 3
    return 0


# ------------------------------------------------------------------ parser

def _add_params_flags(sub, with_state: bool) -> None:
    sub.add_argument("--n", type=int, required=True, help="cells per ring")
    sub.add_argument("--d", type=int, required=True, help="second node offset")
    sub.add_argument("--l1", type=int, required=True, help="cluster 1 length")
    sub.add_argument("--l2", type=int, required=True, help="cluster 2 length")
    if with_state:
        sub.add_argument("--x1", type=int, default=None, help="cluster 1 start cell (default n-1)")
        sub.add_argument("--x2", type=int, default=None, help="cluster 2 start cell (default d-1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contour-duo",
        description="Exact two-ring cluster system: simulate, analyze cycles, "
        "predict regimes, draw phase diagrams, verify exhaustively.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("simulate", help="run a trajectory and emit its rows")
    _add_params_flags(p, with_state=True)
    p.add_argument("--steps", type=int, default=None, help="ticks to run (default n*n)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_simulate)

    p = subs.add_parser("cycle", help="find the limit cycle from a start state")
    _add_params_flags(p, with_state=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_cycle)

    p = subs.add_parser("classify", help="closed-form regime prediction")
    _add_params_flags(p, with_state=False)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_classify)

    p = subs.add_parser("diagram", help="phase diagram over all (l1, l2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--source", choices=["theory", "simulation"], default="theory")
    p.add_argument("--format", choices=["json", "csv", "ascii"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_diagram)

    p = subs.add_parser("sweep", help="exhaustive prediction-vs-simulation comparison")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--states", choices=["all", "canonical"], default="all")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    p.add_argument("--strict", action="store_true", help="exit 3 when any discrepancy exists")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InadmissibleStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
