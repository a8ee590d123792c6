"""
Argument parsing utility for macdonald_lr.
"""

import argparse
import logging
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from macdonald_lr.combinatorics.partitions import Composition, Partition
from macdonald_lr.errors import ParseError

EvalPoint = Tuple[Fraction, Fraction]

METHODS = ["formula", "pieri", "both", "schur"]
MU_SHAPES = ["any", "column", "row"]
SUITES = ["agreement", "classical", "uniqueness"]
OUTPUT_FORMATS = ["table", "json"]


def add_verbose_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-v", "--verbose", help="show all logs", action="store_true"
    )


def configure_logging(args: argparse.Namespace) -> None:
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)
    else:
        logging.basicConfig(level=logging.INFO)


def parse_eval_point(text: str) -> EvalPoint:
    """Parses "q=1/3,t=2/5" (or "1/3,2/5") into exact rationals.

    Raises:
        ParseError: malformed text.
    """
    pieces = [piece.strip() for piece in text.split(",")]
    if len(pieces) != 2:
        raise ParseError(f"expected q=a/b,t=c/d, got {text!r}")
    values = {}
    for position, piece in enumerate(pieces):
        name, sep, value = piece.partition("=")
        if not sep:
            name, value = "qt"[position], piece
        name = name.strip()
        if name not in ("q", "t") or name in values:
            raise ParseError(f"bad variable {name!r} in {text!r}")
        try:
            values[name] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational {value!r} in {text!r}") from e
    return values["q"], values["t"]


def parse_box(text: str) -> Tuple[int, int]:
    """Parses "rows,cols" (or "rowsxcols")."""
    pieces = text.replace("x", ",").split(",")
    try:
        rows, cols = (int(piece) for piece in pieces)
    except ValueError as e:
        raise ParseError(f"expected rows,cols, got {text!r}") from e
    return rows, cols


def _argument_type(parse, name: str):
    def convert(text: str):
        try:
            return parse(text)
        except ParseError as e:
            raise argparse.ArgumentTypeError(str(e)) from e

    convert.__name__ = name
    return convert


partition_type = _argument_type(Partition.parse, "partition")
composition_type = _argument_type(Composition.parse, "composition")
eval_point_type = _argument_type(parse_eval_point, "point")
box_type = _argument_type(parse_box, "box")


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        help="Print machine-readable JSON instead of text.",
    )
    common.add_argument(
        "--eval",
        type=eval_point_type,
        action="append",
        default=None,
        metavar="q=A,t=B",
        help="Also evaluate at an exact rational point (repeatable).",
    )
    common.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes for the sweep.",
    )
    common.add_argument(
        "--config",
        type=Path,
        default=None,
        help="YAML configuration file (defaults to ./config.yaml).",
    )
    add_verbose_argument(common)
    return common


def _add_triple(parser: argparse.ArgumentParser) -> None:
    for flag in ("--lambda", "--mu", "--nu"):
        parser.add_argument(
            flag,
            dest=flag[2:].replace("lambda", "lam"),
            type=partition_type,
            required=True,
            help=f"Partition {flag[2:]} as comma-separated parts.",
        )


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="mlr",
        description="Macdonald Littlewood-Richardson coefficients.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    coeff = commands.add_parser(
        "coeff", parents=[common], help="Coefficient of P_nu in P_lam P_mu."
    )
    _add_triple(coeff)
    coeff.add_argument(
        "--method",
        choices=METHODS,
        default="both",
        help="formula, pieri (brute force), both, or schur (q = t).",
    )

    for name, text in (
        ("kostka", "Number of SSYT of a shape and weight."),
        ("unique", "The SSYT of a shape and weight, if unique."),
    ):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("--mu", type=partition_type, required=True)
        sub.add_argument("--weight", type=composition_type, required=True)

    expand = commands.add_parser(
        "expand", parents=[common], help="P_mu in the elementary basis."
    )
    expand.add_argument("--mu", type=partition_type, required=True)

    verify = commands.add_parser(
        "verify", parents=[common], help="Exhaustive verification sweeps."
    )
    verify.add_argument(
        "--suite",
        choices=SUITES,
        default=None,
        help="agreement (default), classical (q = t against LR and Kostka)"
        " or uniqueness (column criterion against Kostka).",
    )
    verify.add_argument("--max-mu-size", type=int, default=None)
    verify.add_argument(
        "--lambda-box", type=box_type, default=None, metavar="ROWS,COLS"
    )
    verify.add_argument("--mu-shape", choices=MU_SHAPES, default=None)
    for flag in (
        "--max-total-size",
        "--max-rows",
        "--max-boxes",
        "--max-entry",
    ):
        verify.add_argument(flag, type=int, default=None)
    verify.add_argument(
        "--positivity-point",
        type=eval_point_type,
        default=None,
        metavar="q=A,t=B",
    )
    verify.add_argument("--output", choices=OUTPUT_FORMATS, default=None)
    verify.add_argument(
        "--report",
        type=Path,
        default=None,
        help="Write the report to this file instead of stdout.",
    )

    stanley = commands.add_parser(
        "stanley", parents=[common], help="Hook-product check of a triple."
    )
    _add_triple(stanley)
    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments.

    Returns:
        argparse.Namespace: The parsed arguments; --json implies JSON sweep
        output unless --output is given.
    """
    args = build_parser().parse_args(argv)
    if args.command == "verify" and args.json and args.output is None:
        args.output = "json"
    return args
