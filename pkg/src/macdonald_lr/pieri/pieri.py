"""
Pieri rules in the Macdonald P basis and the psi-weights of tableaux.

b_lam(s) = (1 - q^a t^(l+1)) / (1 - q^(a+1) t^l) for a cell s of lam with
arm a and leg l, and 1 outside lam. Every coefficient here is a product of
b-ratios over a set of cells chosen by the rows R and columns C that meet a
strip.
"""

import functools
import logging
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Tuple,
)

from macdonald_lr.algebra.laurent import Q, T, LaurentPoly
from macdonald_lr.algebra.rational import QtRational
from macdonald_lr.combinatorics.partitions import (
    Cell,
    Composition,
    Partition,
    StripType,
    conjugate,
    horizontal_strips,
    strip_columns,
    strip_rows,
    strip_type,
    vertical_strips,
)
from macdonald_lr.combinatorics.tableaux import Tableau
from macdonald_lr.errors import NotHorizontalStripError, NotVerticalStripError

logger = logging.getLogger(__name__)

_VERTICAL = (StripType.VERTICAL, StripType.BOTH)
_HORIZONTAL = (StripType.HORIZONTAL, StripType.BOTH)


def _hook_binomials(
    lam: Partition, conj: Partition, s: Cell
) -> Tuple[LaurentPoly, LaurentPoly]:
    """(lower, upper) hook binomials of a cell inside lam."""
    arm = lam.part(s.row) - s.col
    leg = conj.part(s.col) - s.row
    return (
        LaurentPoly.binomial(arm, leg + 1),
        LaurentPoly.binomial(arm + 1, leg),
    )


def _b_ratio(
    cells: Iterable[Cell], upper: Partition, lower: Partition
) -> QtRational:
    """Product over cells of b_upper(s) / b_lower(s), normalized once."""
    upper_conj, lower_conj = conjugate(upper), conjugate(lower)
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for s in cells:
        if s in upper:
            low, up = _hook_binomials(upper, upper_conj, s)
            num, den = num * low, den * up
        if s in lower:
            low, up = _hook_binomials(lower, lower_conj, s)
            num, den = num * up, den * low
    return QtRational(num, den)


def b_factor(lam: Partition, s: Cell) -> QtRational:
    return _b_ratio([s], lam, Partition())


@functools.lru_cache(maxsize=None)
def psi_prime(lam: Partition, nu: Partition) -> QtRational:
    """Vertical Pieri coefficient of P_nu in P_lam e_r: the product of
    b_nu / b_lam over cells in a column meeting nu/lam but a row that
    does not."""
    if strip_type(lam, nu) not in _VERTICAL:
        raise NotVerticalStripError(f"{nu}/{lam} is not a vertical strip")
    rows = set(strip_rows(lam, nu))
    cols = set(strip_columns(lam, nu))
    cells = [s for s in nu.cells() if s.col in cols and s.row not in rows]
    return _b_ratio(cells, nu, lam)


@functools.lru_cache(maxsize=None)
def phi(lam: Partition, nu: Partition) -> QtRational:
    """Product of b_nu / b_lam over cells of nu in a column meeting nu/lam."""
    if strip_type(lam, nu) not in _HORIZONTAL:
        raise NotHorizontalStripError(f"{nu}/{lam} is not a horizontal strip")
    cols = set(strip_columns(lam, nu))
    return _b_ratio([s for s in nu.cells() if s.col in cols], nu, lam)


@functools.lru_cache(maxsize=None)
def psi_skew(inner: Partition, outer: Partition) -> QtRational:
    """Product of b_inner / b_outer over cells of outer in a row meeting
    the strip and a column that does not."""
    if strip_type(inner, outer) not in _HORIZONTAL:
        raise NotHorizontalStripError(
            f"{outer}/{inner} is not a horizontal strip"
        )
    rows = set(strip_rows(inner, outer))
    cols = set(strip_columns(inner, outer))
    cells = [s for s in outer.cells() if s.row in rows and s.col not in cols]
    return _b_ratio(cells, inner, outer)


def tableau_strips(tableau: Tableau) -> List[Tuple[Partition, Partition]]:
    """Consecutive shapes (entries <= i-1, entries <= i) of the tableau."""
    return [
        (tableau.restricted_shape(i - 1), tableau.restricted_shape(i))
        for i in range(1, tableau.max_entry + 1)
    ]


def psi_weight(tableau: Tableau) -> QtRational:
    value = QtRational.one()
    for inner, outer in tableau_strips(tableau):
        if inner != outer:
            value = value * psi_skew(inner, outer)
    return value


def q_pochhammer(a: LaurentPoly, s: int) -> LaurentPoly:
    """(a; q)_s = (1 - a)(1 - a q) ... (1 - a q^(s-1))."""
    result = LaurentPoly.one()
    for i in range(s):
        result = result * (LaurentPoly.one() - a.shift(i, 0))
    return result


def psi_one_row(weight: Composition) -> QtRational:
    """Closed form of the psi-weight of a one-row tableau:
    (q;q)_n / (t;q)_n * prod_i (t;q)_(e_i) / (q;q)_(e_i)."""
    num = q_pochhammer(Q, weight.size)
    den = q_pochhammer(T, weight.size)
    for e in weight:
        num = num * q_pochhammer(T, e)
        den = den * q_pochhammer(Q, e)
    return QtRational(num, den)


@functools.lru_cache(maxsize=None)
def horizontal_pieri_coefficient(lam: Partition, nu: Partition) -> QtRational:
    """Coefficient of P_nu in P_lam P_(r): (q;q)_r / (t;q)_r * phi."""
    r = nu.size - lam.size
    prefactor = QtRational(q_pochhammer(Q, r), q_pochhammer(T, r))
    return prefactor * phi(lam, nu)


class Expansion:
    """Finite linear combination indexed by partitions of one size."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Partition, QtRational]] = None):
        cleaned = {k: v for k, v in (terms or {}).items() if not v.is_zero()}
        if len({k.size for k in cleaned}) > 1:
            raise ValueError("expansion indices must have equal size")
        self._terms: Dict[Partition, QtRational] = dict(sorted(cleaned.items()))

    def items(self) -> Iterator[Tuple[Partition, QtRational]]:
        return iter(self._terms.items())

    def indices(self) -> List[Partition]:
        return list(self._terms)

    def coefficient(self, index: Partition) -> QtRational:
        return self._terms.get(index, QtRational.zero())

    def __contains__(self, index: Partition) -> bool:
        return index in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __reduce__(self):
        return (type(self), (self._terms,))

    def to_json(self) -> List[dict]:
        return [
            {"index": index.to_json(), "coeff": coeff.to_json()}
            for index, coeff in self._terms.items()
        ]

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self._terms.items())
        return f"{type(self).__name__}({{{body}}})"


class PBasisExpansion(Expansion):
    """sum_kappa c_kappa P_kappa."""

    @classmethod
    def single(cls, lam: Partition) -> "PBasisExpansion":
        return cls({lam: QtRational.one()})


class Window(NamedTuple):
    """Keeps only partitions containing floor and contained in ceiling."""

    floor: Partition = Partition()
    ceiling: Optional[Partition] = None

    def admits(self, nu: Partition) -> bool:
        if not nu.contains(self.floor):
            return False
        return self.ceiling is None or self.ceiling.contains(nu)

    @property
    def max_rows(self) -> Optional[int]:
        return None if self.ceiling is None else len(self.ceiling)


def _apply_pieri(
    expansion: PBasisExpansion,
    r: int,
    window: Optional[Window],
    strips: Callable[..., Iterator[Partition]],
    coefficient: Callable[[Partition, Partition], QtRational],
) -> PBasisExpansion:
    window = window or Window()
    acc: Dict[Partition, QtRational] = {}
    for kappa, coeff in expansion.items():
        for nu in strips(kappa, r, window.max_rows):
            if not window.admits(nu):
                continue
            term = coeff * coefficient(kappa, nu)
            acc[nu] = acc[nu] + term if nu in acc else term
    logger.debug(
        "pieri step r=%d: %d terms -> %d terms", r, len(expansion), len(acc)
    )
    return PBasisExpansion(acc)


def multiply_by_e(
    expansion: PBasisExpansion, r: int, window: Optional[Window] = None
) -> PBasisExpansion:
    """Vertical Pieri rule applied termwise: P_kappa e_r."""
    return _apply_pieri(expansion, r, window, vertical_strips, psi_prime)


def multiply_by_onerow(
    expansion: PBasisExpansion, r: int, window: Optional[Window] = None
) -> PBasisExpansion:
    """Horizontal Pieri rule applied termwise: P_kappa P_(r)."""
    return _apply_pieri(
        expansion, r, window, horizontal_strips, horizontal_pieri_coefficient
    )
