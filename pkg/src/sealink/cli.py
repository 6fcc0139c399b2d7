"""Command-line interface: validate, budget, sweep, plot.

Exit codes are a stable contract: 0 success, 2 usage, 3 invalid
configuration or input format, 4 I/O failure, 5 internal error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .config import ConfigError, load_scenario
from .power import ArchitectureKind, power_breakdown
from .scenario import access_budget, budget_point, run_sweep
from .sweepcsv import CsvFormatError, emit_csv, parse_csv
from .svgplot import render_svg

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONFIG = 3
EXIT_IO = 4
EXIT_INTERNAL = 5

_ARCH_CHOICES = tuple(kind.value for kind in ArchitectureKind)


def _cmd_validate(args) -> int:
    try:
        load_scenario(args.scenario)
    except ConfigError as exc:
        for diagnostic in exc.diagnostics:
            print(diagnostic)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"cannot read {args.scenario}: {exc.strerror}")
        return EXIT_IO
    print("OK")
    return EXIT_OK


def _cmd_budget(args) -> int:
    if args.distance_km <= 0:
        print("budget: --distance-km must be positive", file=sys.stderr)
        return EXIT_USAGE
    scenario = load_scenario(args.scenario)
    arch = ArchitectureKind(args.arch)
    entry = budget_point(scenario, arch, args.distance_km)
    access = access_budget(scenario)

    total_tx_dbm = (
        scenario.transport_radio.tx_power_per_chain_dbm + 10.0 * math.log10(entry.n_elements)
    )
    parts = power_breakdown(
        arch,
        scenario.power_models[arch],
        entry.n_elements,
        total_tx_dbm,
        scenario.access_target.rate_bps,
    )

    print(f"transport link budget at {args.distance_km:g} km ({arch.value})")
    print(f"  path loss:            {entry.path_loss_db:.2f} dB")
    print(f"  transport requirement: {entry.transport_rate_bps:.6g} bps")
    print(f"  required EIRP:        {entry.required_eirp_dbm:.2f} dBm")
    print(f"  required array gain:  {entry.array_gain_db:.2f} dB")
    print(f"  array elements:       {entry.n_elements}")
    print(f"  consumed power:       {entry.consumed_power_w:.2f} W")
    print(f"    fixed:              {parts['fixed_w']:.2f} W")
    print(f"    chains:             {parts['chains_w']:.2f} W")
    print(f"    power amplifier:    {parts['pa_w']:.2f} W")
    if "compute_w" in parts:
        print(f"    computation:        {parts['compute_w']:.2f} W")
    print(f"  feasible:             {'yes' if entry.feasible else 'no'}")
    print(f"access link budget at {access.distance_km:g} km")
    print(f"  path loss:            {access.path_loss_db:.2f} dB")
    print(f"  required EIRP:        {access.required_eirp_dbm:.2f} dBm")
    print(f"  required array gain:  {access.array_gain_db:.2f} dB")
    print(f"  array elements:       {access.n_elements}")
    print()
    machine = {
        "distance_km": args.distance_km,
        "arch": arch.value,
        "path_loss_db": entry.path_loss_db,
        "transport_rate_bps": entry.transport_rate_bps,
        "required_eirp_dbm": entry.required_eirp_dbm,
        "array_gain_db": entry.array_gain_db,
        "n_elements": entry.n_elements,
        "consumed_power_w": entry.consumed_power_w,
        "feasible": entry.feasible,
    }
    print(json.dumps(machine, indent=2))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    scenario = load_scenario(args.scenario)
    rows = run_sweep(scenario)
    text = emit_csv(rows)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    print(f"wrote {args.out} ({2 * len(rows)} data rows)")
    return EXIT_OK


def _cmd_plot(args) -> int:
    with open(args.csv, encoding="utf-8") as fh:
        text = fh.read()
    records = parse_csv(text)
    if not records:
        raise CsvFormatError("line 2: no data rows after header")
    svg = render_svg(records)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sealink",
        description="Link-budget and power trade-off engine for UAV-carried "
        "base stations and remote radio heads over the sea.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a scenario file against the schema")
    p_validate.add_argument("scenario", help="scenario JSON file")
    p_validate.set_defaults(handler=_cmd_validate)

    p_budget = sub.add_parser("budget", help="budget one architecture at one distance")
    p_budget.add_argument("scenario", help="scenario JSON file")
    p_budget.add_argument("--arch", required=True, choices=_ARCH_CHOICES)
    p_budget.add_argument("--distance-km", required=True, type=float)
    p_budget.set_defaults(handler=_cmd_budget)

    p_sweep = sub.add_parser("sweep", help="run the distance sweep and write CSV")
    p_sweep.add_argument("scenario", help="scenario JSON file")
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_plot = sub.add_parser("plot", help="render a sweep CSV as an SVG chart")
    p_plot.add_argument("csv", help="CSV file produced by the sweep command")
    p_plot.add_argument("--out", required=True, help="output SVG path")
    p_plot.set_defaults(handler=_cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConfigError as exc:
        for diagnostic in exc.diagnostics:
            print(diagnostic, file=sys.stderr)
        return EXIT_CONFIG
    except CsvFormatError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except Exception as exc:  # noqa: BLE001 - last-resort mapping to exit code
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
