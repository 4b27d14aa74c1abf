"""Command-line entry point: one subcommand per experiment kind, plus `validate`.

Each experiment subcommand starts from `--config PATH`, `--catalog NAME` or the built-in defaults, applies any flags
on top, re-validates the result and runs it. Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 numerical or
dimension error.
"""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import argparse
import logging
import sys
from typing import Any, Dict, Optional, Sequence, Tuple

from coupledtops.exceptions import ConfigParseError
from coupledtops.experiments.config import (
    ExperimentConfig,
    catalog_names,
    config_from_dict,
    config_to_dict,
    load_catalog_config,
    validate_config,
)
from coupledtops.experiments.runner import run_experiment
from coupledtops.settings import EigenBackend, ExperimentKind, InitialStateKind, PModel

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_NUMERICAL = 4

SUBCOMMANDS: Dict[str, ExperimentKind] = {
    "phase-space": ExperimentKind.PHASE_SPACE,
    "evolve-pure": ExperimentKind.PURE_ENTROPY,
    "evolve-mixed": ExperimentKind.MIXED_ENTROPY,
    "rmt-bound": ExperimentKind.RMT_BOUND,
    "rmt-curve": ExperimentKind.SR_OVERLAY,
    "rdm-hist": ExperimentKind.RDM_HISTOGRAM,
    "spacing": ExperimentKind.SPACING,
}

# argparse destination -> (table, field) of the config it overrides
_OVERRIDES: Dict[str, Tuple[str, str]] = {
    "j": ("top", "j"),
    "k": ("top", "k"),
    "k2": ("top", "k2"),
    "eps": ("top", "eps"),
    "n_max": ("run", "n_max"),
    "stride": ("run", "stride"),
    "backend": ("run", "eigen_backend"),
    "jobs": ("run", "jobs"),
    "output": ("output", "directory"),
    "plot_script": ("output", "plot_script"),
    "grid": ("section", "grid_size"),
    "iterations": ("section", "iterations"),
    "hist_bins": ("histogram", "bins"),
    "n_start": ("histogram", "n_start"),
    "n_stop": ("histogram", "n_stop"),
    "sample_every": ("histogram", "sample_every"),
    "eigenstates": ("histogram", "eigenstate_mode"),
    "spacing_bins": ("spacing", "bins"),
    "s_max": ("spacing", "s_max"),
    "desymmetrize": ("spacing", "desymmetrize"),
    "p_model": ("overlay", "p_model"),
    "simulate": ("overlay", "simulate"),
    "burn_in": ("overlay", "uncoupled_burn_in"),
    "bound_n": ("bound", "N"),
    "bound_q": ("bound", "Q"),
    "weight": ("initial_state", "weight"),
}


def _add_common_arguments(parser: argparse.ArgumentParser, quantum: bool) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--config", help="JSON experiment config to start from")
    source.add_argument("--catalog", help="name of a shipped config, such as fig2a")
    parser.add_argument("--output", help="output directory")
    parser.add_argument("--plot-script", action="store_true", default=None, help="also write plot_results.py")
    parser.add_argument("--jobs", type=int, help="worker threads across sweep points")
    parser.add_argument("--k", type=float, nargs="+", help="torsion strength(s) of top 1")
    if quantum:
        parser.add_argument("--j", type=float, help="spin of each top")
        parser.add_argument("--k2", type=float, help="torsion strength of top 2 (defaults to k)")
        parser.add_argument("--eps", type=float, nargs="+", help="coupling strength(s)")
        parser.add_argument("--n-max", type=int, help="number of kicks")
        parser.add_argument("--stride", type=int, help="record every STRIDE kicks")
        parser.add_argument("--backend", choices=[b.value for b in EigenBackend], help="eigensolver")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coupledtops", description="Coupled kicked-top entanglement experiments.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")
    commands = parser.add_subparsers(dest="command", required=True)

    phase_space = commands.add_parser("phase-space", help="classical phase-space section")
    _add_common_arguments(phase_space, quantum=False)
    phase_space.add_argument("--grid", type=int, nargs=2, metavar=("N_COS_THETA", "N_PHI"))
    phase_space.add_argument("--iterations", type=int)

    evolve_commands = {
        "evolve-pure": "entanglement entropies of an evolving pure product state",
        "evolve-mixed": "log-negativity of an evolving two-point mixed state",
    }
    for name, description in evolve_commands.items():
        sub = commands.add_parser(name, help=description)
        _add_common_arguments(sub, quantum=True)
    commands.choices["evolve-mixed"].add_argument("--weight", type=float, help="weight of the first mixture point")

    bound = commands.add_parser("rmt-bound", help="random-matrix saturation bound of S_V")
    _add_common_arguments(bound, quantum=True)
    bound.add_argument("--N", dest="bound_n", type=int, nargs="+", help="smaller subsystem dimension(s)")
    bound.add_argument("--Q", dest="bound_q", type=float, nargs="+", help="dimension ratio(s) M/N")

    curve = commands.add_parser("rmt-curve", help="linear-entropy growth law, with the simulation overlaid")
    _add_common_arguments(curve, quantum=True)
    curve.add_argument("--p-model", choices=[m.value for m in PModel])
    curve.add_argument("--theory-only", dest="simulate", action="store_false", default=None)
    curve.add_argument("--burn-in", type=int, help="uncoupled kicks applied to the packet before the coupled run")

    hist = commands.add_parser("rdm-hist", help="pooled reduced-density-matrix eigenvalue histogram")
    _add_common_arguments(hist, quantum=True)
    hist.add_argument("--bins", dest="hist_bins", type=int)
    hist.add_argument("--n-start", type=int)
    hist.add_argument("--n-stop", type=int)
    hist.add_argument("--sample-every", type=int)
    hist.add_argument("--eigenstates", action="store_true", default=None, help="pool Floquet eigenvectors")

    spacing = commands.add_parser("spacing", help="eigenangle spacing histogram of the Floquet operator")
    _add_common_arguments(spacing, quantum=True)
    spacing.add_argument("--bins", dest="spacing_bins", type=int)
    spacing.add_argument("--s-max", type=float)
    spacing.add_argument("--no-desymmetrize", dest="desymmetrize", action="store_false", default=None)

    validate = commands.add_parser("validate", help="check a config file and report every problem")
    validate.add_argument("path")

    commands.add_parser("catalog", help="list the configs shipped with the package")
    return parser


def _base_config(args: argparse.Namespace, kind: ExperimentKind) -> Dict[str, Any]:
    base: Optional[ExperimentConfig] = None
    if args.config is not None:
        base = validate_config(args.config)
    elif args.catalog is not None:
        base = load_catalog_config(args.catalog)
    if base is None:
        data: Dict[str, Any] = {"experiment": kind.value}
        if kind is ExperimentKind.MIXED_ENTROPY:
            data["initial_state"] = {"kind": InitialStateKind.MIXED.value}
        return data
    if base.experiment is not kind:
        source = args.config or f"catalog:{args.catalog}"
        raise ConfigParseError(
            source, [("experiment", f"describes a {base.experiment.value} experiment, not {kind.value}")]
        )
    return config_to_dict(base)


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    """The config named on the command line with every given flag applied on top, validated as a whole."""
    kind = SUBCOMMANDS[args.command]
    data = _base_config(args, kind)
    for dest, (table, key) in _OVERRIDES.items():
        value = getattr(args, dest, None)
        if value is not None:
            data.setdefault(table, {})[key] = value
    return config_from_dict(data, source="command line")


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args)
    try:
        if args.command == "catalog":
            for name in catalog_names():
                print(name)
            return EXIT_OK
        if args.command == "validate":
            cfg = validate_config(args.path)
            print(f"{args.path}: valid {cfg.experiment.value} config with {max(len(cfg.sweep_points()), 1)} point(s)")
            return EXIT_OK
        result = run_experiment(config_from_args(args))
    except ConfigParseError as e:
        logger.error(str(e))
        return EXIT_CONFIG
    except OSError as e:
        logger.error(str(e))
        return EXIT_IO
    except (ArithmeticError, MemoryError, ValueError) as e:
        logger.error(str(e))
        return EXIT_NUMERICAL
    for path in result.csv_files:
        print(path)
    print(result.manifest)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
