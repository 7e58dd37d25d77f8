"""Command-line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from .const import (
    CSV_PRECISION,
    DEFAULT_BS_PHOTONS,
    DEFAULT_HOA_ORDERS,
    DEFAULT_HOS_ORDERS,
    DEFAULT_HOSPS_ORDERS,
    DEFAULT_LOG_LEVEL,
    DEFAULT_RESOLUTION,
    DEFAULT_TAIL_TOL,
    LOG_LEVELS,
    STATUS_INVALID_PARAMETER,
    STATUS_OK,
    VERSION,
)
from .definitions import ALL_VARIANTS, FIGURE_PANELS
from .exceptions import HoleBurnError
from .helpers.logging_utils import get_logger, set_log_level
from .helpers.output import dumps_json, emit
from .helpers.parsers import parse_sweep
from .models import Engineering, Family, Measure, StateSpec
from .scan import dump_state, reproduce
from .sweep import GridSpec, MeasureRequest, SweepConfig, run_sweep

_LOGGER = get_logger(__name__)

_DEFAULT_ORDERS = {
    Measure.HOA: DEFAULT_HOA_ORDERS,
    Measure.HOS: DEFAULT_HOS_ORDERS,
    Measure.HOSPS: DEFAULT_HOSPS_ORDERS,
}


def _add_state_options(parser: argparse.ArgumentParser, *, multi: bool) -> None:
    parser.add_argument(
        "--family", type=Family, choices=list(Family), required=True
    )
    if multi:
        parser.add_argument(
            "--engineering",
            type=Engineering,
            choices=list(Engineering),
            action="append",
            help="repeatable; all three variants when omitted",
        )
    else:
        parser.add_argument(
            "--engineering",
            type=Engineering,
            choices=list(Engineering),
            default=Engineering.NONE,
        )
    parser.add_argument("--alpha", type=float, default=0.0, help="|alpha|")
    parser.add_argument("--theta", type=float, default=0.0, help="phase of alpha")
    parser.add_argument("--p", type=float, default=0.5)
    parser.add_argument("--m", type=int, default=DEFAULT_BS_PHOTONS)
    parser.add_argument("--chi", type=float, default=0.0, help="Kerr parameter")
    parser.add_argument("--tol", type=float, default=DEFAULT_TAIL_TOL)
    parser.add_argument("--out", type=Path, default=None)
    parser.add_argument("--format", choices=("csv", "json"), default=None)


def _add_sweep_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sweep", metavar="NAME=START:STOP:COUNT[:lin|log]")
    parser.add_argument("--y-sweep", metavar="NAME=START:STOP:COUNT[:lin|log]")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--precision", type=int, default=CSV_PRECISION)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for all subcommands."""
    parser = argparse.ArgumentParser(
        prog="holeburn",
        description="Nonclassicality of hole-burnt even coherent, binomial and Kerr states.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument(
        "--log-level", choices=LOG_LEVELS, default=DEFAULT_LOG_LEVEL, type=str.upper
    )
    commands = parser.add_subparsers(dest="command", required=True)

    state = commands.add_parser("state", help="dump amplitudes and p_n of one state")
    _add_state_options(state, multi=False)

    witness = commands.add_parser("witness", help="evaluate a witness, optionally swept")
    witness.add_argument(
        "measure",
        type=Measure,
        choices=[Measure.HOA, Measure.HOS, Measure.HOSPS],
    )
    _add_state_options(witness, multi=True)
    _add_sweep_options(witness)
    witness.add_argument("--order", type=int, action="append")

    entropy = commands.add_parser("entropy", help="linear entropy after a 50:50 splitter")
    _add_state_options(entropy, multi=True)
    _add_sweep_options(entropy)

    figure = commands.add_parser("reproduce", help="write the data of one figure panel")
    figure.add_argument("figure_id", choices=sorted(FIGURE_PANELS))
    figure.add_argument("--out", type=Path, default=Path())
    figure.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    figure.add_argument("--workers", type=int, default=1)
    figure.add_argument("--tol", type=float, default=DEFAULT_TAIL_TOL)
    return parser


def _template(args: argparse.Namespace) -> StateSpec:
    engineering = args.engineering
    if isinstance(engineering, list):
        engineering = Engineering.NONE
    return StateSpec(
        args.family,
        engineering,
        alpha_mag=args.alpha,
        theta=args.theta,
        p=args.p,
        m=args.m,
        chi=args.chi,
    )


def _sweep_config(args: argparse.Namespace, measure: Measure) -> SweepConfig:
    if measure is Measure.ENTROPY:
        orders: tuple[int, ...] = ()
    else:
        orders = tuple(args.order or _DEFAULT_ORDERS[measure])
    return SweepConfig(
        template=_template(args),
        engineerings=tuple(args.engineering or ALL_VARIANTS),
        grid=GridSpec.model_validate(parse_sweep(args.sweep)) if args.sweep else None,
        grid_y=GridSpec.model_validate(parse_sweep(args.y_sweep)) if args.y_sweep else None,
        measures=(MeasureRequest(kind=measure, orders=orders),),
        output=args.out,
        tail_tol=args.tol,
        precision=args.precision,
        workers=args.workers,
    )


def _run_measure(args: argparse.Namespace, measure: Measure) -> int:
    cfg = _sweep_config(args, measure)
    result = run_sweep(cfg)
    if args.format == "json":
        payload = dumps_json({"header": result.header, "rows": result.records()})
        emit(payload, cfg.output)
    else:
        emit(result.to_csv(cfg.precision), cfg.output)
    return STATUS_OK


def _dispatch(args: argparse.Namespace) -> int:
    match args.command:
        case "state":
            dump_state(_template(args), args.format or "json", args.out, args.tol)
        case "witness":
            return _run_measure(args, args.measure)
        case "entropy":
            return _run_measure(args, Measure.ENTROPY)
        case "reproduce":
            data, manifest = reproduce(
                args.figure_id, args.out, args.resolution, args.workers, args.tol
            )
            _LOGGER.info("Wrote %s and %s", data, manifest)
    return STATUS_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the process exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    set_log_level(args.log_level)
    try:
        return _dispatch(args)
    except HoleBurnError as err:
        sys.stderr.write(f"ERROR: {err}\n")
        return err.status
    except ValidationError as err:
        sys.stderr.write(f"ERROR: {err}\n")
        return STATUS_INVALID_PARAMETER
