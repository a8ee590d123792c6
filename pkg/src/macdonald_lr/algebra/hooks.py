"""
Hook binomials 1 - q^a t^b and signed products of them.

U(a, l) = 1 - q^(a+1) t^l is the upper hook binomial of a cell with arm a
and leg l, and L(a, l) = 1 - q^a t^(l+1) the lower one. The label is
metadata: two binomials with the same exponents are the same value.
"""

import dataclasses
import enum
from collections import Counter
from typing import Iterable, List, Optional, Tuple

from macdonald_lr.algebra.laurent import LaurentPoly
from macdonald_lr.algebra.rational import QtRational


class HookKind(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


class FactorPosition(enum.Enum):
    NUMERATOR = "numerator"
    DENOMINATOR = "denominator"


@dataclasses.dataclass(frozen=True)
class HookBinomial:
    """The binomial 1 - q^q_exp t^t_exp, optionally labelled U(a,l)/L(a,l).

    Exponents are arbitrary integers so that every raw factor of the closed
    form can be represented; only binomials with a nonnegative arm and leg
    carry a label.
    """

    q_exp: int
    t_exp: int
    kind: Optional[HookKind] = None
    arm: Optional[int] = None
    leg: Optional[int] = None

    def __post_init__(self):
        if self.kind is None:
            return
        if self.arm is None or self.leg is None:
            raise ValueError("labelled hook binomial needs arm and leg")
        if self.kind is HookKind.UPPER:
            expected = (self.arm + 1, self.leg)
        else:
            expected = (self.arm, self.leg + 1)
        if (self.q_exp, self.t_exp) != expected:
            raise ValueError(
                f"{self.kind.value} label ({self.arm},{self.leg}) does not "
                f"match exponents ({self.q_exp},{self.t_exp})"
            )

    @classmethod
    def upper(cls, arm: int, leg: int) -> "HookBinomial":
        return _labelled(arm + 1, leg, HookKind.UPPER, arm, leg)

    @classmethod
    def lower(cls, arm: int, leg: int) -> "HookBinomial":
        return _labelled(arm, leg + 1, HookKind.LOWER, arm, leg)

    @property
    def exponents(self) -> Tuple[int, int]:
        return (self.q_exp, self.t_exp)

    def value(self) -> LaurentPoly:
        return LaurentPoly.binomial(self.q_exp, self.t_exp)

    def is_zero(self) -> bool:
        return self.q_exp == 0 and self.t_exp == 0

    def oriented(self) -> Tuple["HookBinomial", int, Tuple[int, int]]:
        """Rewrites 1 - q^-a t^-b as -q^-a t^-b (1 - q^a t^b).

        Returns:
            (binomial, sign, monomial exponents) with the binomial's
            exponents not both nonpositive unless it is zero.
        """
        if self.q_exp <= 0 and self.t_exp <= 0 and not self.is_zero():
            flipped = hook_from_exponents(-self.q_exp, -self.t_exp)
            return flipped, -1, (self.q_exp, self.t_exp)
        return self, 1, (0, 0)

    def candidate_kinds(self) -> List[HookKind]:
        """Labels compatible with the exponents, if any."""
        kinds = []
        if self.q_exp >= 1 and self.t_exp >= 0:
            kinds.append(HookKind.UPPER)
        if self.q_exp >= 0 and self.t_exp >= 1:
            kinds.append(HookKind.LOWER)
        return kinds

    def __str__(self) -> str:
        if self.kind is HookKind.UPPER:
            return f"U({self.arm},{self.leg})"
        if self.kind is HookKind.LOWER:
            return f"L({self.arm},{self.leg})"
        return f"({self.value()})"


def _labelled(q_exp, t_exp, kind, arm, leg) -> HookBinomial:
    if arm < 0 or leg < 0:
        return HookBinomial(q_exp, t_exp)
    return HookBinomial(q_exp, t_exp, kind, arm, leg)


def hook_from_exponents(q_exp: int, t_exp: int) -> HookBinomial:
    """Labels a binomial canonically: U when t_exp = 0, else L when valid."""
    if q_exp >= 1 and t_exp == 0:
        return HookBinomial.upper(q_exp - 1, 0)
    if q_exp >= 0 and t_exp >= 1:
        return HookBinomial.lower(q_exp, t_exp - 1)
    return HookBinomial(q_exp, t_exp)


def hook_binomial(arm: int, leg: int, kind: HookKind) -> LaurentPoly:
    if kind is HookKind.UPPER:
        return LaurentPoly.binomial(arm + 1, leg)
    return LaurentPoly.binomial(arm, leg + 1)


@dataclasses.dataclass(frozen=True)
class SignedHookFactor:
    binomial: HookBinomial
    position: FactorPosition

    @classmethod
    def numerator(cls, binomial: HookBinomial) -> "SignedHookFactor":
        return cls(binomial, FactorPosition.NUMERATOR)

    @classmethod
    def denominator(cls, binomial: HookBinomial) -> "SignedHookFactor":
        return cls(binomial, FactorPosition.DENOMINATOR)

    @property
    def is_numerator(self) -> bool:
        return self.position is FactorPosition.NUMERATOR

    def to_json(self) -> dict:
        return {
            "q_exp": self.binomial.q_exp,
            "t_exp": self.binomial.t_exp,
            "label": str(self.binomial),
            "position": self.position.value,
        }


@dataclasses.dataclass(frozen=True)
class Monomial:
    q_exp: int
    t_exp: int
    sign: int

    def value(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.q_exp, self.t_exp, self.sign)

    def to_json(self) -> List[int]:
        return [self.q_exp, self.t_exp, self.sign]


@dataclasses.dataclass(frozen=True)
class HookProductCheck:
    ok: bool
    monomial: Optional[Monomial] = None


def signed_product(factors: Iterable[SignedHookFactor]) -> QtRational:
    """Numerator binomials over denominator binomials, normalized once."""
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for factor in factors:
        if factor.is_numerator:
            num = num * factor.binomial.value()
        else:
            den = den * factor.binomial.value()
    return QtRational(num, den)


def cancel_reciprocal_pairs(
    factors: Iterable[SignedHookFactor],
) -> List[SignedHookFactor]:
    """Removes numerator/denominator pairs of equal value.

    Survivors keep their original order; the earliest occurrences cancel
    first.
    """
    factors = list(factors)
    num = Counter(f.binomial.exponents for f in factors if f.is_numerator)
    den = Counter(f.binomial.exponents for f in factors if not f.is_numerator)
    to_drop = {
        FactorPosition.NUMERATOR: num & den,
        FactorPosition.DENOMINATOR: num & den,
    }
    survivors = []
    for factor in factors:
        pending = to_drop[factor.position]
        key = factor.binomial.exponents
        if pending[key] > 0:
            pending[key] -= 1
            continue
        survivors.append(factor)
    return survivors


def verify_hook_product(
    f: QtRational, factors: Iterable[SignedHookFactor]
) -> HookProductCheck:
    """Checks f = (+/- q^a t^b) * prod(numerator) / prod(denominator).

    A false result is the signal; nothing is raised for a mismatch.
    """
    target = signed_product(factors)
    if target.is_zero():
        if f.is_zero():
            return HookProductCheck(True, Monomial(0, 0, 1))
        return HookProductCheck(False)
    if f.is_zero():
        return HookProductCheck(False)
    ratio = f / target
    if not ratio.denominator.is_one() or not ratio.numerator.is_monomial():
        return HookProductCheck(False)
    (q_exp, t_exp), coeff = ratio.numerator.lex_least_term()
    if abs(coeff) != 1:
        return HookProductCheck(False)
    return HookProductCheck(True, Monomial(q_exp, t_exp, coeff))
