"""
Command-line entry point.

Exit codes: 0 success, 2 malformed input, 3 violated precondition (for
instance a coefficient outside the unique-tableau case), 4 a failed
verification.
"""

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional

from macdonald_lr.algebra.hooks import SignedHookFactor
from macdonald_lr.algebra.rational import QtRational
from macdonald_lr.combinatorics.littlewood_richardson import (
    lr_coefficient_schur,
)
from macdonald_lr.combinatorics.tableaux import (
    Multiplicity,
    kostka,
    unique_ssyt,
)
from macdonald_lr.errors import (
    IdenticallySingularError,
    ParseError,
    PoleAtPointError,
    PreconditionError,
)
from macdonald_lr.factorization.formula import (
    formula_coefficient,
    formula_input,
)
from macdonald_lr.factorization.stanley import hook_form, stanley_check
from macdonald_lr.pieri.expansion import coeff_bruteforce, p_in_e_basis
from macdonald_lr.utils import args as mlr_args
from macdonald_lr.utils.config import get_section, load_config
from macdonald_lr.verifier.verifier import (
    ReportGenerator,
    SweepConfig,
    run_sweep,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4


def _emit(args: argparse.Namespace, payload: Dict, lines: List[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _evaluations(args: argparse.Namespace, value: QtRational) -> Dict:
    values = {}
    for q0, t0 in args.eval or ():
        key = f"q={q0},t={t0}"
        try:
            values[key] = str(value.evaluate(q0, t0))
        except PoleAtPointError:
            logger.warning("Skipping %s: pole of %s", key, value)
            values[key] = None
    return values


def render_hook_form(factors: List[SignedHookFactor]) -> str:
    """Numerator factors over denominator factors, by hook label."""
    num = [str(f.binomial) for f in factors if f.is_numerator]
    den = [str(f.binomial) for f in factors if not f.is_numerator]
    text = " ".join(num) or "1"
    if den:
        text = f"{text} / {' '.join(den)}"
    return text


def cmd_coeff(args: argparse.Namespace) -> int:
    lam, mu, nu = args.lam, args.mu, args.nu
    logger.info(
        "Computing c^%s_{%s,%s} by %s", nu, lam, mu, args.method
    )
    payload: Dict = {
        "lambda": lam.to_json(),
        "mu": mu.to_json(),
        "nu": nu.to_json(),
    }
    lines = []
    if args.method == "schur":
        count = lr_coefficient_schur(lam, mu, nu)
        brute = coeff_bruteforce(lam, mu, nu)
        try:
            special = str(brute.specialize_q_equals_t())
        except IdenticallySingularError:
            special = None
        payload.update({"lr": count, "q_equals_t": special})
        lines += [f"LR coefficient: {count}", f"at q = t: {special}"]
        _emit(args, payload, lines)
        return EXIT_OK

    results = {}
    if args.method in ("formula", "both"):
        inp = formula_input(lam, mu, nu)
        results["formula"] = formula_coefficient(inp)
        factors = hook_form(inp)
        payload["hook_form"] = [f.to_json() for f in factors]
        lines.append(f"hook form: {render_hook_form(factors)}")
    if args.method in ("pieri", "both"):
        results["pieri"] = coeff_bruteforce(lam, mu, nu)
    for name, value in results.items():
        payload[name] = value.to_json()
        payload[f"{name}_text"] = str(value)
        lines.append(f"{name}: {value}")
        evaluations = _evaluations(args, value)
        if evaluations:
            payload[f"{name}_values"] = evaluations
            lines += [f"  {k}: {v}" for k, v in evaluations.items()]
    status = EXIT_OK
    if args.method == "both":
        agree = results["formula"] == results["pieri"]
        payload["agree"] = agree
        lines.append(f"agree: {'yes' if agree else 'no'}")
        if not agree:
            status = EXIT_VERIFICATION
    _emit(args, payload, lines)
    return status


def cmd_kostka(args: argparse.Namespace) -> int:
    count = kostka(args.mu, args.weight)
    _emit(args, {"kostka": count}, [str(count)])
    return EXIT_OK


def cmd_unique(args: argparse.Namespace) -> int:
    found = unique_ssyt(args.mu, args.weight)
    if isinstance(found, Multiplicity):
        _emit(args, {"unique": found.value}, [found.value])
    else:
        _emit(args, {"unique": found.to_json()}, [found.render()])
    return EXIT_OK


def cmd_expand(args: argparse.Namespace) -> int:
    mu = args.mu
    expansion = p_in_e_basis(mu, max(mu.size, len(mu)))
    lines = [f"e{index}: {coeff}" for index, coeff in expansion.items()]
    _emit(args, {"mu": mu.to_json(), "e_basis": expansion.to_json()}, lines)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    sweep_config = SweepConfig.from_config(
        get_section(config, "verify"),
        max_mu_size=args.max_mu_size,
        lambda_box=args.lambda_box,
        eval_points=tuple(args.eval) if args.eval else None,
        positivity_point=args.positivity_point,
        workers=args.workers,
        output=args.output,
        mu_shape=args.mu_shape,
        suite=args.suite,
        max_total_size=args.max_total_size,
        max_rows=args.max_rows,
        max_boxes=args.max_boxes,
        max_entry=args.max_entry,
    )
    report = run_sweep(sweep_config, progress=args.report is not None)
    content = ReportGenerator(report).generate_report(sweep_config.output)
    if args.report is not None:
        try:
            args.report.parent.mkdir(parents=True, exist_ok=True)
            args.report.write_text(content)
            logger.info("Successfully wrote report to %s", args.report)
        except OSError as e:
            logger.error("Error writing report to %s: %s", args.report, e)
            sys.exit(1)
    else:
        print(content)
    logger.info(
        "Checked %d: %d passed, %d failed",
        report.checked,
        report.passed,
        report.failed,
    )
    return EXIT_OK if report.failed == 0 else EXIT_VERIFICATION


def cmd_stanley(args: argparse.Namespace) -> int:
    report = stanley_check(args.lam, args.mu, args.nu)
    lines = [
        f"laurent: {report.is_laurent_polynomial}",
        f"factored: {report.factored}",
        f"U count: {report.u_count}",
        f"L count: {report.l_count}",
        f"monomial: {report.monomial.to_json() if report.monomial else None}",
        f"passed: {report.passed}",
    ]
    _emit(args, report.to_json(), lines)
    return EXIT_OK if report.passed else EXIT_VERIFICATION


COMMANDS = {
    "coeff": cmd_coeff,
    "kostka": cmd_kostka,
    "unique": cmd_unique,
    "expand": cmd_expand,
    "verify": cmd_verify,
    "stanley": cmd_stanley,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = mlr_args.parse_args(argv)
    mlr_args.configure_logging(args)
    try:
        return COMMANDS[args.command](args)
    except ParseError as e:
        logger.error("Invalid input: %s", e)
        return EXIT_PARSE
    except PreconditionError as e:
        logger.error("Precondition failed: %s", e)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
