"""Batch command-line front-end.

Subcommands:

    adt-designer run <config> [--out DIR]
    adt-designer validate <config>
    adt-designer sweep <config> --param NAME --from A --to B --steps N [--out DIR]

``run`` writes ``design.txt`` (the design table) and ``manifest.json`` (the
resolved configuration and component versions) into the output directory and
prints the table; exit code 0 for a certified optimum, 2 for an uncertified
(warning-flagged) result, 1 on any error.  ``validate`` checks the file
without computing.  ``sweep`` re-optimizes along one parameter and writes
``sweep_<param>.csv``.  Outputs are byte-identical across repeated runs of
the same configuration.  The environment variable ADT_DESIGNER_MAX_WORKERS
caps the number of worker threads used for grid evaluation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import scenarios
from .errors import AdtDesignError, ConfigError

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adt-designer",
        description="Locally optimal accelerated-degradation test designs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="optimize the design described by a scenario file")
    p_run.add_argument("config", help="path to a scenario YAML file")
    p_run.add_argument("--out", default=None,
                       help="output directory (default: from the config)")

    p_val = sub.add_parser("validate", help="check a scenario file without computing")
    p_val.add_argument("config", help="path to a scenario YAML file")

    p_sweep = sub.add_parser("sweep", help="re-optimize along a one-parameter family")
    p_sweep.add_argument("config", help="path to a scenario YAML file")
    p_sweep.add_argument("--param", required=True,
                         choices=scenarios.SWEEPABLE_PARAMETERS)
    p_sweep.add_argument("--from", dest="start", type=float, required=True)
    p_sweep.add_argument("--to", dest="stop", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, required=True)
    p_sweep.add_argument("--out", default=None,
                         help="output directory (default: from the config)")
    return parser


def _resolve_config_arg(path: str) -> str:
    if path and not os.path.isfile(path) and not os.sep in path:
        # allow bundled scenario names as a convenience
        try:
            return scenarios.bundled_scenario_path(path)
        except ConfigError:
            pass
    return path


def _write(out_dir: str, name: str, text: str) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return path


def _manifest_text(result) -> str:
    return json.dumps(scenarios.manifest_dict(result), indent=2, sort_keys=True) + "\n"


def _cmd_run(args) -> int:
    config = scenarios.load_config(_resolve_config_arg(args.config))
    result = scenarios.run_scenario(config)
    report = scenarios.render_design_report(result)
    out_dir = args.out or config.output_dir
    _write(out_dir, "design.txt", report)
    _write(out_dir, "manifest.json", _manifest_text(result))
    sys.stdout.write(report)
    return 0 if result.certified else 2


def _cmd_validate(args) -> int:
    ok, message = scenarios.validate_config(_resolve_config_arg(args.config))
    if ok:
        sys.stdout.write("OK\n")
        sys.stdout.write(message)
        return 0
    sys.stderr.write(f"invalid: {message}\n")
    return 1


def _cmd_sweep(args) -> int:
    config = scenarios.load_config(_resolve_config_arg(args.config))
    if args.steps < 1:
        raise ConfigError("--steps must be at least 1")
    values = (np.linspace(args.start, args.stop, args.steps)
              if args.steps > 1 else np.array([args.start]))
    rows = scenarios.sweep(config, args.param, values)
    csv_text = scenarios.sweep_rows_to_csv(rows)
    out_dir = args.out or config.output_dir
    path = _write(out_dir, f"sweep_{args.param}.csv", csv_text)
    sys.stdout.write(f"wrote {path}\n")
    if any(r.status == "error" for r in rows):
        return 1
    return 0 if all(r.status == "certified" for r in rows) else 2


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "validate":
            return _cmd_validate(args)
        return _cmd_sweep(args)
    except ConfigError as exc:
        sys.stderr.write(f"configuration error: {exc}\n")
        return 1
    except AdtDesignError as exc:
        sys.stderr.write(f"error [{type(exc).__name__}]: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
