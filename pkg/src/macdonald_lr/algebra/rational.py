"""
Rational functions in q and t over the integers, kept in canonical form.

Canonical form: numerator and denominator are coprime, the denominator is
an ordinary polynomial divisible by neither q nor t, and its
lexicographically least term (by (q_exp, t_exp)) is positive. All monomial
units live in the numerator. Zero is stored as 0 / 1.
"""

from fractions import Fraction
from math import gcd
from typing import Dict, List, Tuple, Union

from macdonald_lr.algebra.laurent import LaurentPoly
from macdonald_lr.errors import (
    DivisionByZeroError,
    IdenticallySingularError,
    PoleAtPointError,
    ZeroDenominatorError,
)

Number = Union[int, Fraction]


class QtRational:
    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(
        self,
        numerator: Union[LaurentPoly, int] = 0,
        denominator: Union[LaurentPoly, int] = 1,
    ):
        num, den = _normalize(_as_laurent(numerator), _as_laurent(denominator))
        self.numerator: LaurentPoly = num
        self.denominator: LaurentPoly = den
        self._hash = _hash_of(num, den)

    @classmethod
    def _from_canonical(
        cls, numerator: LaurentPoly, denominator: LaurentPoly
    ) -> "QtRational":
        value = cls.__new__(cls)
        value.numerator = numerator
        value.denominator = denominator
        value._hash = _hash_of(numerator, denominator)
        return value

    @classmethod
    def zero(cls) -> "QtRational":
        return cls._from_canonical(LaurentPoly.zero(), LaurentPoly.one())

    @classmethod
    def one(cls) -> "QtRational":
        return cls._from_canonical(LaurentPoly.one(), LaurentPoly.one())

    @classmethod
    def from_int(cls, value: int) -> "QtRational":
        return cls(LaurentPoly.constant(value))

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_one(self) -> bool:
        return self.numerator.is_one() and self.denominator.is_one()

    def is_laurent_polynomial(self) -> bool:
        """True when the value lies in Z[q, 1/q, t, 1/t]."""
        return self.denominator.is_one()

    # Field arithmetic

    def __add__(self, other) -> "QtRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.denominator == other.denominator:
            return QtRational(
                self.numerator + other.numerator, self.denominator
            )
        return QtRational(
            self.numerator * other.denominator
            + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "QtRational":
        return QtRational._from_canonical(-self.numerator, self.denominator)

    def __sub__(self, other) -> "QtRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "QtRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> "QtRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return QtRational.zero()
        if self.is_one():
            return other
        if other.is_one():
            return self
        return QtRational(
            self.numerator * other.numerator,
            self.denominator * other.denominator,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QtRational":
        if self.is_zero():
            raise DivisionByZeroError("inverse of the zero rational function")
        return QtRational(self.denominator, self.numerator)

    def __truediv__(self, other) -> "QtRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZeroError(f"division of {self} by zero")
        return QtRational(
            self.numerator * other.denominator,
            self.denominator * other.numerator,
        )

    def __rtruediv__(self, other) -> "QtRational":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> "QtRational":
        base = self if exponent >= 0 else self.inverse()
        return QtRational(
            base.numerator ** abs(exponent), base.denominator ** abs(exponent)
        )

    # Evaluation

    def evaluate(self, q0: Number, t0: Number) -> Fraction:
        return eval_rational(self, q0, t0)

    def specialize_q_equals_t(self) -> "QtRational":
        return specialize_q_equals_t(self)

    # Comparison, hashing, serialization

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QtRational.from_int(other)
        if not isinstance(other, QtRational):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (QtRational._from_canonical, (self.numerator, self.denominator))

    def to_json(self) -> Dict[str, List[List[Union[int, str]]]]:
        return {
            "num": self.numerator.to_json(),
            "den": self.denominator.to_json(),
        }

    @classmethod
    def from_json(cls, data: Dict[str, list]) -> "QtRational":
        return cls(
            LaurentPoly.from_json(data["num"]),
            LaurentPoly.from_json(data["den"]),
        )

    def __repr__(self) -> str:
        return f"QtRational({self.numerator!r}, {self.denominator!r})"

    def __str__(self) -> str:
        num = str(self.numerator)
        if self.denominator.is_one():
            return num
        if len(self.numerator) > 1:
            num = f"({num})"
        den = str(self.denominator)
        if len(self.denominator) > 1:
            den = f"({den})"
        return f"{num}/{den}"


def _hash_of(num: LaurentPoly, den: LaurentPoly) -> int:
    if den.is_one():
        return hash(num)
    return hash((num, den))


def _as_laurent(value: Union[LaurentPoly, int]) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.constant(int(value))


def _coerce(value):
    if isinstance(value, QtRational):
        return value
    if isinstance(value, int):
        return QtRational.from_int(value)
    if isinstance(value, LaurentPoly):
        return QtRational(value)
    return NotImplemented


def _normalize(
    num: LaurentPoly, den: LaurentPoly
) -> Tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDenominatorError(f"zero denominator for numerator {num}")
    if num.is_zero():
        return LaurentPoly.zero(), LaurentPoly.one()

    (nq, nt), num_poly = num.split_monomial()
    (dq, dt), den_poly = den.split_monomial()
    shift = (nq - dq, nt - dt)

    if den_poly.is_constant():
        c = den_poly.lex_least_term()[1]
        g = gcd(num_poly.content(), c)
        num_poly = LaurentPoly({e: v // g for e, v in num_poly.items()})
        den_poly = LaurentPoly.constant(c // g)
    elif num_poly.is_constant():
        c = num_poly.lex_least_term()[1]
        g = gcd(den_poly.content(), c)
        num_poly = LaurentPoly.constant(c // g)
        den_poly = LaurentPoly({e: v // g for e, v in den_poly.items()})
    else:
        _, num_cof, den_cof = num_poly.to_ring().cofactors(den_poly.to_ring())
        num_poly = LaurentPoly.from_ring(num_cof)
        den_poly = LaurentPoly.from_ring(den_cof)

    if den_poly.lex_least_term()[1] < 0:
        num_poly = -num_poly
        den_poly = -den_poly
    return num_poly.shift(*shift), den_poly


def rational_normalize(num: LaurentPoly, den: LaurentPoly) -> QtRational:
    return QtRational(num, den)


def rational_arith(op: str, f: QtRational, g: QtRational) -> QtRational:
    if op == "add":
        return f + g
    elif op == "sub":
        return f - g
    elif op == "mul":
        return f * g
    elif op == "div":
        return f / g
    else:
        raise ValueError(f"Unknown rational operation: {op}")


def eval_rational(f: QtRational, q0: Number, t0: Number) -> Fraction:
    """Substitutes exact rationals for q and t.

    Raises:
        PoleAtPointError: the denominator vanishes at (q0, t0), or a
            negative exponent meets a zero coordinate.
    """
    try:
        den = f.denominator.evaluate(q0, t0)
        if den == 0:
            raise PoleAtPointError(f"{f} has a pole at q={q0}, t={t0}")
        return f.numerator.evaluate(q0, t0) / den
    except PoleAtPointError:
        raise
    except ZeroDivisionError as e:
        raise PoleAtPointError(f"{f} is singular at q={q0}, t={t0}") from e


def specialize_q_equals_t(f: QtRational) -> QtRational:
    """Substitutes q = t; the result is a rational function of t alone."""
    den = f.denominator.substitute_q_equals_t()
    if den.is_zero():
        raise IdenticallySingularError(f"denominator of {f} vanishes at q=t")
    return QtRational(f.numerator.substitute_q_equals_t(), den)


def product(factors) -> QtRational:
    """Multiplies an iterable of rationals, numerators and denominators
    separately, normalizing once at the end."""
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for factor in factors:
        if factor.is_zero():
            return QtRational.zero()
        num = num * factor.numerator
        den = den * factor.denominator
    return QtRational(num, den)
