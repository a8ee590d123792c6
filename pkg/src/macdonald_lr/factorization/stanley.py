"""
Hook-binomial form of the closed-form coefficient and the hook-product
check.

Every factor of the closed form is a ratio of hook binomials: the strip
b-factors of psi_T are L/U ratios of cells of the intermediate shapes, and
with A = lam_j - lam_k - a + b - 1 and B = lam_j - lam_k - a - 1 a triple
contributes

    L(A, k-j) / U(A, k-j)  *  U(B, k-j-1) / L(B, k-j-1).

Multiplying the coefficient by the lower hooks of lam and mu and the upper
hooks of nu should leave a product of U and L binomials, as many of one
kind as of the other.
"""

import dataclasses
import logging
from typing import List, Optional, Tuple

from macdonald_lr.algebra.hooks import (
    HookBinomial,
    Monomial,
    SignedHookFactor,
    cancel_reciprocal_pairs,
    hook_from_exponents,
    signed_product,
    verify_hook_product,
)
from macdonald_lr.algebra.rational import QtRational
from macdonald_lr.combinatorics.partitions import (
    Partition,
    arm_leg,
    strip_columns,
    strip_rows,
)
from macdonald_lr.factorization.formula import (
    AdmissibleTriple,
    FormulaInput,
    admissible_triples,
    formula_coefficient,
    formula_input,
)
from macdonald_lr.pieri.pieri import tableau_strips

logger = logging.getLogger(__name__)


def _strip_factors(
    inner: Partition, outer: Partition
) -> List[SignedHookFactor]:
    """b_inner / b_outer over cells in a row meeting the strip and a column
    that does not; all such cells lie in inner."""
    rows = set(strip_rows(inner, outer))
    cols = set(strip_columns(inner, outer))
    factors = []
    for s in outer.cells():
        if s.row not in rows or s.col in cols:
            continue
        arm_in, leg_in = arm_leg(inner, s)
        arm_out, leg_out = arm_leg(outer, s)
        factors += [
            SignedHookFactor.numerator(HookBinomial.lower(arm_in, leg_in)),
            SignedHookFactor.denominator(HookBinomial.upper(arm_in, leg_in)),
            SignedHookFactor.numerator(HookBinomial.upper(arm_out, leg_out)),
            SignedHookFactor.denominator(
                HookBinomial.lower(arm_out, leg_out)
            ),
        ]
    return factors


def _triple_hook_factors(
    inp: FormulaInput, triple: AdmissibleTriple
) -> List[SignedHookFactor]:
    j, k, a, b = triple.j, triple.k, triple.a, triple.b
    gap = inp.lam.part(j) - inp.lam.part(k)
    first = gap - a + b - 1
    second = gap - a - 1
    return [
        SignedHookFactor.numerator(hook_from_exponents(first, k - j + 1)),
        SignedHookFactor.denominator(hook_from_exponents(first + 1, k - j)),
        SignedHookFactor.numerator(
            hook_from_exponents(second + 1, k - j - 1)
        ),
        SignedHookFactor.denominator(hook_from_exponents(second, k - j)),
    ]


def hook_form(inp: FormulaInput) -> List[SignedHookFactor]:
    """The closed form as signed hook binomials, reciprocal pairs removed.

    Raw exponents are kept, so the signed product equals
    formula_coefficient(inp) exactly; a factor 1 - q^0 t^0 marks a
    vanishing coefficient.
    """
    factors: List[SignedHookFactor] = []
    for inner, outer in tableau_strips(inp.tableau):
        if inner != outer:
            factors += _strip_factors(inner, outer)
    for triple in admissible_triples(inp.tableau, inp.n):
        factors += _triple_hook_factors(inp, triple)
    cancelled = cancel_reciprocal_pairs(factors)
    logger.debug(
        "hook form of %s: %d factors, %d after cancellation",
        inp.tableau,
        len(factors),
        len(cancelled),
    )
    return cancelled


def hook_form_value(inp: FormulaInput) -> QtRational:
    return signed_product(hook_form(inp))


def shape_hooks(
    lam: Partition, mu: Partition, nu: Partition
) -> List[SignedHookFactor]:
    """Lower hooks of lam and mu, upper hooks of nu, all in the numerator."""
    hooks = []
    for shape, make in (
        (lam, HookBinomial.lower),
        (mu, HookBinomial.lower),
        (nu, HookBinomial.upper),
    ):
        for s in shape.cells():
            hooks.append(SignedHookFactor.numerator(make(*arm_leg(shape, s))))
    return hooks


def _orient(factors: List[SignedHookFactor]) -> List[SignedHookFactor]:
    return [
        dataclasses.replace(f, binomial=f.binomial.oriented()[0])
        for f in factors
    ]


def balanced_counts(
    exponents: List[Tuple[int, int]],
) -> Tuple[int, int, int]:
    """(u_count, l_count, unlabelled) for the most balanced labeling.

    1 - q^a is only an upper hook and 1 - t^b only a lower one; a binomial
    with both exponents positive may be either.
    """
    forced_u = forced_l = flexible = unlabelled = 0
    for q_exp, t_exp in exponents:
        if q_exp >= 1 and t_exp == 0:
            forced_u += 1
        elif q_exp == 0 and t_exp >= 1:
            forced_l += 1
        elif q_exp >= 1 and t_exp >= 1:
            flexible += 1
        else:
            unlabelled += 1
    as_upper = min(max((forced_l + flexible - forced_u) // 2, 0), flexible)
    return forced_u + as_upper, forced_l + flexible - as_upper, unlabelled


@dataclasses.dataclass
class StanleyReport:
    """Outcome of the hook-product check for one triple."""

    is_zero: bool
    is_laurent_polynomial: bool
    factored: bool
    u_count: int
    l_count: int
    residual_denominators: int = 0
    unlabelled: int = 0
    monomial: Optional[Monomial] = None
    factors: List[SignedHookFactor] = dataclasses.field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.is_zero:
            return True
        return (
            self.is_laurent_polynomial
            and self.factored
            and self.residual_denominators == 0
            and self.unlabelled == 0
            and self.u_count == self.l_count
        )

    def to_json(self) -> dict:
        return {
            "laurent": self.is_laurent_polynomial,
            "u_count": self.u_count,
            "l_count": self.l_count,
            "factored": self.factored,
            "monomial": self.monomial.to_json() if self.monomial else None,
            "passed": self.passed,
        }


def stanley_check(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    inp: Optional[FormulaInput] = None,
    coeff: Optional[QtRational] = None,
) -> StanleyReport:
    """Multiplies the coefficient by the hooks of lam, mu and nu and checks
    that a balanced product of U and L binomials remains.

    Args:
        lam, mu, nu: The triple.
        inp: The formula input of the triple, when already built.
        coeff: Its closed-form coefficient, when already computed.

    Raises:
        KostkaNotOneError: mu has zero or several tableaux of weight
            nu - lam.
    """
    if inp is None:
        inp = formula_input(lam, mu, nu)
    if coeff is None:
        coeff = formula_coefficient(inp)
    if coeff.is_zero():
        return StanleyReport(
            is_zero=True,
            is_laurent_polynomial=True,
            factored=True,
            u_count=0,
            l_count=0,
            monomial=Monomial(0, 0, 1),
        )
    hooks = shape_hooks(lam, mu, nu)
    value = coeff * signed_product(hooks)
    factors = cancel_reciprocal_pairs(_orient(hook_form(inp) + hooks))
    check = verify_hook_product(value, factors)
    numerators = [f.binomial.exponents for f in factors if f.is_numerator]
    u_count, l_count, unlabelled = balanced_counts(numerators)
    report = StanleyReport(
        is_zero=False,
        is_laurent_polynomial=value.is_laurent_polynomial(),
        factored=check.ok,
        u_count=u_count,
        l_count=l_count,
        residual_denominators=len(factors) - len(numerators),
        unlabelled=unlabelled,
        monomial=check.monomial,
        factors=factors,
    )
    logger.debug(
        "stanley check %s * %s -> %s: %s", lam, mu, nu, report.to_json()
    )
    return report

