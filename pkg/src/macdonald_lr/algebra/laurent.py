"""
Laurent polynomials in q and t with integer coefficients.

A value is a finite map from exponent pairs (q_exp, t_exp) to nonzero
integers. Values are immutable and hashable, so they can be cached and
shipped to worker processes.
"""

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

Exponent = Tuple[int, int]
Number = Union[int, Fraction]

_RING = ring("q,t", ZZ)[0]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] = None):
        cleaned = {}
        if terms:
            for (q_exp, t_exp), coeff in terms.items():
                coeff = int(coeff)
                if coeff:
                    cleaned[(int(q_exp), int(t_exp))] = coeff
        self._terms: Tuple[Tuple[Exponent, int], ...] = tuple(
            sorted(cleaned.items())
        )
        self._hash = _hash_terms(self._terms)

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls({(0, 0): value})

    @classmethod
    def monomial(
        cls, q_exp: int = 0, t_exp: int = 0, coeff: int = 1
    ) -> "LaurentPoly":
        return cls({(q_exp, t_exp): coeff})

    @classmethod
    def binomial(cls, q_exp: int, t_exp: int) -> "LaurentPoly":
        """Returns 1 - q^q_exp t^t_exp (zero when both exponents vanish)."""
        if q_exp == 0 and t_exp == 0:
            return cls()
        return cls({(0, 0): 1, (q_exp, t_exp): -1})

    @classmethod
    def from_ring(cls, poly: PolyElement, shift: Exponent = (0, 0)):
        """Converts a sympy ring element back, multiplying by q^a t^b."""
        dq, dt = shift
        return cls(
            {(e[0] + dq, e[1] + dt): int(c) for e, c in poly.terms()}
        )

    # Accessors

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == (((0, 0), 1),)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return self.is_zero() or (
            len(self._terms) == 1 and self._terms[0][0] == (0, 0)
        )

    def lex_least_term(self) -> Tuple[Exponent, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no terms")
        return self._terms[0]

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0, 0)
        return (
            min(e[0] for e, _ in self._terms),
            min(e[1] for e, _ in self._terms),
        )

    def content(self) -> int:
        g = 0
        for _, c in self._terms:
            g = gcd(g, c)
        return g

    # Arithmetic

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: Dict[Exponent, int] = {}
        for (aq, at), ac in self._terms:
            for (bq, bt), bc in other._terms:
                key = (aq + bq, at + bt)
                acc[key] = acc.get(key, 0) + ac * bc
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            (qe, te), c = self._terms[0]
            return LaurentPoly.monomial(-qe, -te, c) ** (-exponent)
        result = LaurentPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, q_exp: int, t_exp: int) -> "LaurentPoly":
        """Multiplies by the monomial q^q_exp t^t_exp."""
        return LaurentPoly(
            {(e[0] + q_exp, e[1] + t_exp): c for e, c in self._terms}
        )

    def split_monomial(self) -> Tuple[Exponent, "LaurentPoly"]:
        """Factors self as q^a t^b * p with p an ordinary polynomial.

        Returns:
            The exponent pair (a, b) and p, where p is divisible by neither
            q nor t.
        """
        a, b = self.min_exponents()
        return (a, b), self.shift(-a, -b)

    def to_ring(self) -> PolyElement:
        """Converts an ordinary polynomial to a sympy ring element."""
        if any(e[0] < 0 or e[1] < 0 for e, _ in self._terms):
            raise ValueError("negative exponents: call split_monomial first")
        return _RING.from_dict({e: c for e, c in self._terms})

    # Evaluation

    def evaluate(self, q0: Number, t0: Number) -> Fraction:
        """Exact substitution q = q0, t = t0.

        Raises:
            ZeroDivisionError: a negative exponent meets a zero argument.
        """
        q0 = Fraction(q0)
        t0 = Fraction(t0)
        total = Fraction(0)
        for (qe, te), c in self._terms:
            total += c * q0**qe * t0**te
        return total

    def substitute_q_equals_t(self) -> "LaurentPoly":
        acc: Dict[Exponent, int] = {}
        for (qe, te), c in self._terms:
            key = (0, qe + te)
            acc[key] = acc.get(key, 0) + c
        return LaurentPoly(acc)

    # Comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (LaurentPoly, (dict(self._terms),))

    def to_json(self) -> List[List[Union[int, str]]]:
        return [[qe, te, str(c)] for (qe, te), c in self._terms]

    @classmethod
    def from_json(cls, data: Iterable[List[Union[int, str]]]):
        return cls({(int(qe), int(te)): int(c) for qe, te, c in data})

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._terms)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, ((qe, te), c) in enumerate(self._terms):
            mono = _format_monomial(qe, te)
            magnitude = abs(c)
            if mono == "1":
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude} {mono}"
            if index == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)


def _format_monomial(q_exp: int, t_exp: int) -> str:
    parts = []
    for name, exp in (("q", q_exp), ("t", t_exp)):
        if exp == 1:
            parts.append(name)
        elif exp:
            parts.append(f"{name}^{exp}")
    return " ".join(parts) if parts else "1"


def _hash_terms(terms: Tuple[Tuple[Exponent, int], ...]) -> int:
    """Constants hash like the int they equal."""
    if not terms:
        return hash(0)
    if len(terms) == 1 and terms[0][0] == (0, 0):
        return hash(terms[0][1])
    return hash(terms)


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    return NotImplemented


def laurent_arith(op: str, f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if op == "add":
        return f + g
    elif op == "sub":
        return f - g
    elif op == "mul":
        return f * g
    else:
        raise ValueError(f"Unknown Laurent operation: {op}")


Q = LaurentPoly.monomial(1, 0)
T = LaurentPoly.monomial(0, 1)
