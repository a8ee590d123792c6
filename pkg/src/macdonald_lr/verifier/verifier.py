"""
Exhaustive verification sweeps.

The agreement suite takes every lam in a box, every mu up to a size bound
and every weight chi with K(mu, chi) = 1 and nu = lam + chi a partition. It
compares the closed form with the brute-force Pieri engine, the q = t
specialization with the classical LR count and the hook form with the
closed form. It also runs the hook-product check on nonzero coefficients
and checks that the Pieri coefficients between lam and nu are positive.

The classical suite compares the brute-force coefficient at q = t with the
LR count and the Kostka number over all small triples. The uniqueness
suite compares the column criterion with Kostka numbers.
"""

import dataclasses
import functools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from tqdm import tqdm

from macdonald_lr.algebra.hooks import signed_product
from macdonald_lr.algebra.rational import QtRational
from macdonald_lr.combinatorics.littlewood_richardson import (
    lr_coefficient_schur,
)
from macdonald_lr.combinatorics.partitions import (
    Composition,
    Partition,
    StripType,
    add_composition,
    compositions_of,
    horizontal_strips,
    partitions_between,
    partitions_in_box,
    partitions_of,
    strip_type,
    vertical_strips,
)
from macdonald_lr.combinatorics.tableaux import (
    Tableau,
    enumerate_ssyt,
    is_unique_by_columns,
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
    FormulaInput,
    formula_coefficient,
    formula_input,
)
from macdonald_lr.factorization.stanley import hook_form, stanley_check
from macdonald_lr.pieri.expansion import coeff_bruteforce
from macdonald_lr.pieri.pieri import horizontal_pieri_coefficient, psi_prime
from macdonald_lr.utils import stats
from macdonald_lr.utils.args import (
    MU_SHAPES,
    OUTPUT_FORMATS,
    SUITES,
    EvalPoint,
    parse_box,
    parse_eval_point,
)

logger = logging.getLogger(__name__)

CHECKS = ["numeric", "pieri", "schur", "hook_form", "stanley", "positivity"]
SUITE_CHECKS = {
    "agreement": CHECKS,
    "classical": ["schur", "kostka_bound", "horizontal_equality"],
    "uniqueness": ["uniqueness"],
}

# Pool chunks per worker.
CHUNKS_PER_WORKER = 64

_INT_FIELDS = (
    "max_mu_size",
    "max_total_size",
    "max_rows",
    "max_boxes",
    "max_entry",
)


def _point(value) -> EvalPoint:
    if isinstance(value, str):
        return parse_eval_point(value)
    q0, t0 = value
    return Fraction(str(q0)), Fraction(str(t0))


@dataclasses.dataclass(frozen=True)
class SweepConfig:
    max_mu_size: int = 5
    lambda_box: Tuple[int, int] = (4, 4)
    eval_points: Tuple[EvalPoint, ...] = (
        (Fraction(1, 3), Fraction(2, 5)),
    )
    positivity_point: EvalPoint = (Fraction(3, 10), Fraction(7, 10))
    workers: int = 1
    output: str = "table"
    mu_shape: str = "any"
    suite: str = "agreement"
    max_total_size: int = 9
    max_rows: int = 4
    max_boxes: int = 8
    max_entry: int = 5

    def __post_init__(self):
        for name in _INT_FIELDS + ("workers",):
            value = getattr(self, name)
            if value < 1:
                raise ParseError(f"{name} must be >= 1: {value}")
        rows, cols = self.lambda_box
        if rows < 1 or cols < 1:
            raise ParseError(f"lambda_box must be >= 1x1: {self.lambda_box}")
        if self.output not in OUTPUT_FORMATS:
            raise ParseError(f"unknown output format {self.output!r}")
        if self.mu_shape not in MU_SHAPES:
            raise ParseError(f"unknown mu_shape {self.mu_shape!r}")
        if self.suite not in SUITES:
            raise ParseError(f"unknown suite {self.suite!r}")
        object.__setattr__(self, "lambda_box", (rows, cols))
        object.__setattr__(self, "eval_points", tuple(self.eval_points))

    @classmethod
    def from_config(cls, section: Dict, **overrides) -> "SweepConfig":
        """Builds the config from a `verify:` mapping; non-None overrides
        win over the mapping, which wins over the field defaults."""
        values = {}
        for key in _INT_FIELDS:
            if key in section:
                values[key] = int(section[key])
        if "lambda_box" in section:
            box = section["lambda_box"]
            values["lambda_box"] = (
                parse_box(box) if isinstance(box, str) else tuple(box)
            )
        if "eval_points" in section:
            values["eval_points"] = tuple(
                _point(p) for p in section["eval_points"] or ()
            )
        if "positivity_point" in section:
            values["positivity_point"] = _point(section["positivity_point"])
        for key in ("workers", "output", "mu_shape", "suite"):
            if key in section:
                values[key] = section[key]
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def to_json(self) -> dict:
        data = {"suite": self.suite, "workers": self.workers}
        if self.suite == "agreement":
            data.update(
                {
                    "max_mu_size": self.max_mu_size,
                    "lambda_box": list(self.lambda_box),
                    "eval_points": [
                        [str(q), str(t)] for q, t in self.eval_points
                    ],
                    "positivity_point": [
                        str(v) for v in self.positivity_point
                    ],
                    "mu_shape": self.mu_shape,
                }
            )
        elif self.suite == "classical":
            data.update(
                {
                    "max_total_size": self.max_total_size,
                    "max_rows": self.max_rows,
                }
            )
        else:
            data.update(
                {"max_boxes": self.max_boxes, "max_entry": self.max_entry}
            )
        return data

    def settings(self) -> List[Tuple[str, str]]:
        """(name, value) rows for the report header."""
        if self.suite == "agreement":
            rows, cols = self.lambda_box
            return [
                ("lambda box", f"{rows} x {cols}"),
                ("max mu size", str(self.max_mu_size)),
                ("mu shape", self.mu_shape),
            ]
        if self.suite == "classical":
            return [
                ("max size of lambda and mu", str(self.max_total_size)),
                ("max rows of nu", str(self.max_rows)),
            ]
        return [
            ("max boxes", str(self.max_boxes)),
            ("max entry", str(self.max_entry)),
        ]


@dataclasses.dataclass(frozen=True, order=True)
class Instance:
    """A triple; tableau is the unique SSYT of shape mu and weight
    nu - lam when the sweep already found it."""

    lam: Partition
    mu: Partition
    nu: Partition
    tableau: Optional[Tableau] = dataclasses.field(
        default=None, compare=False, repr=False
    )

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "nu": self.nu.to_json(),
        }

    def __str__(self) -> str:
        return f"lam={self.lam} mu={self.mu} nu={self.nu}"


@dataclasses.dataclass(frozen=True, order=True)
class WeightInstance:
    mu: Partition
    weight: Tuple[int, ...]

    def to_json(self) -> dict:
        return {"mu": self.mu.to_json(), "weight": list(self.weight)}

    def __str__(self) -> str:
        return f"mu={self.mu} weight={Composition(self.weight)}"


AnyInstance = Union[Instance, WeightInstance]


def _mu_shapes(size: int, mu_shape: str) -> Iterator[Partition]:
    if mu_shape == "column":
        yield Partition((1,) * size)
    elif mu_shape == "row":
        yield Partition((size,))
    else:
        yield from partitions_of(size)


def unique_weights(
    config: SweepConfig,
) -> List[Tuple[Partition, Composition, Tableau]]:
    """(mu, chi, T) with K(mu, chi) = 1 over the rows of the lambda box."""
    rows = config.lambda_box[0]
    found = []
    for size in range(1, config.max_mu_size + 1):
        for mu in _mu_shapes(size, config.mu_shape):
            if len(mu) > rows:
                continue
            for chi in compositions_of(size, rows):
                tableau = unique_ssyt(mu, chi)
                if isinstance(tableau, Tableau):
                    found.append((mu, chi, tableau))
    logger.debug("%d unique (mu, chi) pairs", len(found))
    return found


def _agreement_instances(config: SweepConfig) -> Iterator[Instance]:
    pairs = unique_weights(config)
    for lam in partitions_in_box(*config.lambda_box):
        for mu, chi, tableau in pairs:
            nu = Partition.try_from(add_composition(lam, chi.entries))
            if nu is not None:
                yield Instance(lam, mu, nu, tableau)


def _classical_instances(config: SweepConfig) -> Iterator[Instance]:
    """Triples with |lam| + |mu| <= max_total_size, mu nonempty and nu
    containing lam and mu inside max_rows rows."""
    rows = config.max_rows
    for total in range(1, config.max_total_size + 1):
        for lam_size in range(total):
            for lam in partitions_of(lam_size, max_length=rows):
                for mu in partitions_of(total - lam_size, max_length=rows):
                    for nu in partitions_of(total, max_length=rows):
                        if nu.contains(lam) and nu.contains(mu):
                            yield Instance(lam, mu, nu)


def _uniqueness_instances(config: SweepConfig) -> Iterator[WeightInstance]:
    for size in range(1, config.max_boxes + 1):
        for mu in partitions_of(size, max_length=config.max_entry):
            for chi in compositions_of(size, config.max_entry):
                yield WeightInstance(mu, chi.entries)


def iter_instances(config: SweepConfig) -> Iterator[AnyInstance]:
    """Instances of the configured suite. Agreement instances come in
    canonical order: lam, then mu, then chi."""
    if config.suite == "classical":
        return _classical_instances(config)
    if config.suite == "uniqueness":
        return _uniqueness_instances(config)
    return _agreement_instances(config)


@dataclasses.dataclass
class InstanceResult:
    instance: AnyInstance
    checks: Dict[str, bool] = dataclasses.field(default_factory=dict)
    zero: bool = False
    skipped_points: int = 0
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(self.checks.values())

    @property
    def failed_checks(self) -> List[str]:
        if self.error is not None:
            return ["error"]
        return [name for name, ok in self.checks.items() if not ok]

    def to_json(self) -> dict:
        data = self.instance.to_json()
        data.update(
            {
                "zero": self.zero,
                "checks": self.checks,
                "passed": self.passed,
                "error": self.error,
            }
        )
        return data


def _numeric_agreement(
    f: QtRational, g: QtRational, points: Iterable[EvalPoint]
) -> Tuple[bool, int]:
    skipped = 0
    for q0, t0 in points:
        try:
            if f.evaluate(q0, t0) != g.evaluate(q0, t0):
                return False, skipped
        except PoleAtPointError:
            skipped += 1
    return True, skipped


def _integer_at_q_equals_t(f: QtRational) -> Optional[int]:
    """The q = t value of f when it is an integer constant."""
    try:
        value = f.specialize_q_equals_t()
    except IdenticallySingularError:
        return None
    if not value.is_laurent_polynomial() or not value.numerator.is_constant():
        return None
    return value.numerator.terms.get((0, 0), 0)


def _schur_ok(f: QtRational, lam, mu, nu) -> bool:
    value = _integer_at_q_equals_t(f)
    return value is not None and value == lr_coefficient_schur(lam, mu, nu)


@functools.lru_cache(maxsize=None)
def _strip_positive(
    inner: Partition, outer: Partition, point: EvalPoint
) -> bool:
    """Positivity of every Pieri coefficient of the strip outer/inner."""
    kind = strip_type(inner, outer)
    ok = True
    if kind in (StripType.VERTICAL, StripType.BOTH):
        ok = ok and psi_prime(inner, outer).evaluate(*point) > 0
    if kind in (StripType.HORIZONTAL, StripType.BOTH):
        value = horizontal_pieri_coefficient(inner, outer)
        ok = ok and value.evaluate(*point) > 0
    return ok


@functools.lru_cache(maxsize=None)
def window_strips_positive(
    lam: Partition,
    nu: Partition,
    point: EvalPoint,
    max_size: Optional[int] = None,
) -> bool:
    """Every vertical and horizontal strip kappa'/kappa with
    lam <= kappa < kappa' <= nu and |kappa'| <= max_size (default |nu|)
    has a positive Pieri coefficient at point."""
    top = nu.size if max_size is None else max_size
    for kappa in partitions_between(lam, nu):
        for r in range(1, top - kappa.size + 1):
            outers = set(vertical_strips(kappa, r, len(nu)))
            outers.update(horizontal_strips(kappa, r, len(nu)))
            for outer in outers:
                if nu.contains(outer) and not _strip_positive(
                    kappa, outer, point
                ):
                    logger.debug("%s/%s is not positive", outer, kappa)
                    return False
    return True


def _chains_positive(
    lam: Partition, mu: Partition, nu: Partition, point: EvalPoint
) -> bool:
    """Covers the Pieri steps between lam and nu and those of the e-basis
    expansion of P_mu, which use at most |mu| cells in at most
    max(len(nu), len(mu)) rows."""
    rows = max(len(nu), len(mu))
    box = Partition((mu.size,) * rows)
    return window_strips_positive(lam, nu, point) and (
        window_strips_positive(Partition(), box, point, mu.size)
    )


def _formula_input(instance: Instance) -> FormulaInput:
    if instance.tableau is None:
        return formula_input(instance.lam, instance.mu, instance.nu)
    return FormulaInput(instance.lam, instance.tableau, len(instance.nu))


def check_instance(instance: Instance, config: SweepConfig) -> InstanceResult:
    lam, mu, nu = instance.lam, instance.mu, instance.nu
    result = InstanceResult(instance)
    try:
        inp = _formula_input(instance)
        formula = formula_coefficient(inp)
        brute = coeff_bruteforce(lam, mu, nu)
        result.zero = formula.is_zero()
        ok, result.skipped_points = _numeric_agreement(
            formula, brute, config.eval_points
        )
        result.checks["numeric"] = ok
        result.checks["pieri"] = formula == brute
        result.checks["schur"] = _schur_ok(formula, lam, mu, nu)
        result.checks["hook_form"] = signed_product(hook_form(inp)) == formula
        if not result.zero:
            report = stanley_check(lam, mu, nu, inp=inp, coeff=formula)
            result.checks["stanley"] = report.passed
        result.checks["positivity"] = _chains_positive(
            lam, mu, nu, config.positivity_point
        )
    except (PreconditionError, ArithmeticError) as e:
        result.error = f"{type(e).__name__}: {e}"
    logger.debug("%s: %s", instance, result.failed_checks or "ok")
    return result


def check_classical(
    instance: Instance, config: SweepConfig
) -> InstanceResult:
    """At q = t the coefficient is the LR count, at most the Kostka number
    of nu - lam, and equal to it when nu/lam is a horizontal strip."""
    lam, mu, nu = instance.lam, instance.mu, instance.nu
    result = InstanceResult(instance)
    try:
        brute = coeff_bruteforce(lam, mu, nu)
        result.zero = brute.is_zero()
        value = _integer_at_q_equals_t(brute)
        result.checks["schur"] = value is not None and (
            value == lr_coefficient_schur(lam, mu, nu)
        )
        chi = Composition(
            tuple(a - b for a, b in zip(nu.parts, lam.padded(len(nu))))
        )
        bound = kostka(mu, chi)
        result.checks["kostka_bound"] = value is not None and value <= bound
        if strip_type(lam, nu) in (StripType.HORIZONTAL, StripType.BOTH):
            result.checks["horizontal_equality"] = value == bound
    except (PreconditionError, ArithmeticError) as e:
        result.error = f"{type(e).__name__}: {e}"
    logger.debug("%s: %s", instance, result.failed_checks or "ok")
    return result


def check_uniqueness(
    instance: WeightInstance, config: SweepConfig
) -> InstanceResult:
    """K(mu, chi) = 1 exactly when the enumerated tableau passes the
    column criterion."""
    tableaux = enumerate_ssyt(instance.mu, Composition(instance.weight))
    unique = len(tableaux) == 1
    result = InstanceResult(instance)
    result.checks["uniqueness"] = all(
        is_unique_by_columns(t) == unique for t in tableaux
    )
    return result


CHECKERS = {
    "agreement": check_instance,
    "classical": check_classical,
    "uniqueness": check_uniqueness,
}


@dataclasses.dataclass
class SweepReport:
    config: SweepConfig
    results: List[InstanceResult]

    @property
    def checked(self) -> int:
        return len(self.results)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def failed(self) -> int:
        return self.checked - self.passed

    @property
    def zero_count(self) -> int:
        return sum(1 for r in self.results if r.zero)

    @property
    def failures(self) -> List[InstanceResult]:
        return [r for r in self.results if not r.passed]

    def check_counts(self) -> Dict[str, Tuple[int, int]]:
        """name -> (passed, run) per check."""
        counts = {}
        for name in SUITE_CHECKS[self.config.suite]:
            ran = [r.checks[name] for r in self.results if name in r.checks]
            counts[name] = (sum(ran), len(ran))
        return counts

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "zero": self.zero_count,
            "skipped_points": sum(r.skipped_points for r in self.results),
            "failures": [r.to_json() for r in self.failures],
        }


def pool_chunksize(count: int, workers: int) -> int:
    return max(1, count // (workers * CHUNKS_PER_WORKER))


def run_sweep(config: SweepConfig, progress: bool = False) -> SweepReport:
    """Checks every instance of the configured suite; results come back in
    canonical order for any number of workers."""
    instances = sorted(iter_instances(config))
    logger.info(
        "Checking %d %s instances with %d worker(s)",
        len(instances),
        config.suite,
        config.workers,
    )
    check = functools.partial(CHECKERS[config.suite], config=config)
    bar = tqdm(total=len(instances), disable=not progress, unit="instance")
    results: List[InstanceResult] = []
    if config.workers == 1:
        for instance in instances:
            results.append(check(instance))
            bar.update()
    else:
        chunksize = pool_chunksize(len(instances), config.workers)
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for result in pool.map(check, instances, chunksize=chunksize):
                results.append(result)
                bar.update()
    bar.close()
    return SweepReport(config, results)


class ReportGenerator:
    def __init__(self, report: SweepReport):
        self.report = report

    def generate_report(self, report_type: str) -> str:
        """Generates report."""
        if report_type == "table":
            return self.generate_table_report()
        elif report_type == "json":
            return self.generate_json_report()
        else:
            raise ValueError(f"Unknown report type: {report_type}")

    def generate_json_report(self) -> str:
        return json.dumps(self.report.to_json(), indent=2)

    def generate_table_report(self) -> str:
        report = self.report
        config = report.config
        pass_rate = stats.calculate_pass_rate(report.passed, report.checked)
        zero_share = stats.calculate_share(report.zero_count, report.checked)
        lines = [
            "# Verification Report",
            f"Date: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}",
            "",
            "| Setting | Value |",
            "| :--- | :--- |",
            f"| **suite** | {config.suite} |",
        ]
        for name, value in config.settings():
            lines.append(f"| **{name}** | {value} |")
        lines += [
            f"| **workers** | {config.workers} |",
            "",
            "| Metric | Value |",
            "|---|---|",
            f"| **Checked** | {report.checked} |",
            f"| **Passed** | {report.passed} |",
            f"| **Failed** | {report.failed} |",
            f"| **Pass rate** | {pass_rate:.2%} |",
            f"| **Zero coefficients** | {zero_share:.2%} |",
            "",
            "## Checks",
            "| Check | Passed | Run | Status |",
            "|---|---|---|---|",
        ]
        for name, (passed, ran) in report.check_counts().items():
            status = "✅" if passed == ran else "❌"
            lines.append(f"| {name} | {passed} | {ran} | {status} |")
        if report.failures:
            lines.extend(
                [
                    "",
                    "## Failures",
                    "| Instance | Failed checks |",
                    "|---|---|",
                ]
            )
            for r in report.failures:
                failed = ", ".join(r.failed_checks)
                if r.error:
                    failed = f"{failed} ({r.error})"
                lines.append(f"| {r.instance} | {failed} |")
        return "\n".join(lines)
