"""
Closed form of c^nu_{lam,mu}(q,t) when mu has a unique tableau of weight
nu - lam.

With X_i = q^lam_i t^(1-i), the coefficient is psi_T times, for every
admissible triple (j, k, m) of the tableau T,

    (X_k - q^(b-a-1) t X_j) / (X_k - q^(b-a) X_j)
  * (X_k - q^(-a) t^-1 X_j) / (X_k - q^(-a-1) X_j).

A triple is admissible when column m contains k but not j (j < k); a and b
count the earlier columns containing k but not j, and j but not k.
"""

import dataclasses
import functools
import logging
from typing import Iterable, List, Optional, Tuple

from macdonald_lr.algebra.laurent import LaurentPoly
from macdonald_lr.algebra.rational import QtRational
from macdonald_lr.combinatorics.partitions import (
    Composition,
    Partition,
    StripType,
    add_composition,
    strip_type,
)
from macdonald_lr.combinatorics.tableaux import (
    Multiplicity,
    Tableau,
    is_unique_by_columns,
    unique_ssyt,
)
from macdonald_lr.errors import (
    KostkaNotOneError,
    NotContainedError,
    NotUniqueTableauError,
    NotVerticalStripError,
    NTooSmallError,
    NuNotPartitionError,
    SizeMismatchError,
)
from macdonald_lr.pieri.pieri import psi_weight

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class AdmissibleTriple:
    j: int
    k: int
    m: int
    a: int
    b: int

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class FormulaInput:
    """lam padded to n rows and the unique tableau T over the alphabet 1..n.

    nu = lam + weight(T) must be a partition.
    """

    lam: Partition
    tableau: Tableau
    n: int

    def __post_init__(self):
        if self.n < len(self.lam):
            raise NTooSmallError(
                f"n={self.n} is below the length of {self.lam}"
            )
        if self.tableau.max_entry > self.n:
            raise NTooSmallError(
                f"tableau uses {self.tableau.max_entry} beyond n={self.n}"
            )
        if Partition.try_from(self.nu_parts) is None:
            raise NuNotPartitionError(
                f"{self.lam} + {self.chi} = {self.nu_parts} is not a partition"
            )

    @property
    def chi(self) -> Composition:
        return self.tableau.weight(self.n)

    @property
    def nu_parts(self) -> Tuple[int, ...]:
        return add_composition(self.lam, self.chi.entries)

    @property
    def nu(self) -> Partition:
        return Partition(self.nu_parts)

    @property
    def mu(self) -> Partition:
        return self.tableau.shape

    def x_exponents(self, i: int) -> Tuple[int, int]:
        """(q, t) exponents of X_i = q^lam_i t^(1-i)."""
        return self.lam.part(i), 1 - i


def formula_input(
    lam: Partition, mu: Partition, nu: Partition
) -> FormulaInput:
    """Builds the input for a triple, with n = len(nu).

    Raises:
        SizeMismatchError: |nu| != |lam| + |mu|.
        NotContainedError: lam is not inside nu.
        KostkaNotOneError: mu has zero or several tableaux of weight nu - lam.
    """
    if nu.size != lam.size + mu.size:
        raise SizeMismatchError(f"|{nu}| != |{lam}| + |{mu}|")
    if not nu.contains(lam):
        raise NotContainedError(f"{lam} is not contained in {nu}")
    n = len(nu)
    chi = Composition(
        tuple(a - b for a, b in zip(nu.padded(n), lam.padded(n)))
    )
    tableau = unique_ssyt(mu, chi)
    if isinstance(tableau, Multiplicity):
        raise KostkaNotOneError(
            f"K({mu}, {chi}) is {tableau.value}, not one", tableau.value
        )
    return FormulaInput(lam, tableau, n)


def admissible_triples(tableau: Tableau, n: int) -> List[AdmissibleTriple]:
    """All admissible triples, ordered by column m, then k, then j."""
    triples = []
    columns = tableau.column_sets
    for m, column in enumerate(columns, start=1):
        earlier = columns[: m - 1]
        for k in range(2, n + 1):
            if k not in column:
                continue
            for j in range(1, k):
                if j in column:
                    continue
                a = sum(1 for c in earlier if k in c and j not in c)
                b = sum(1 for c in earlier if j in c and k not in c)
                triples.append(AdmissibleTriple(j, k, m, a, b))
    return triples


def _x_difference(
    inp: FormulaInput, k: int, j: int, q_shift: int, t_shift: int
) -> LaurentPoly:
    """X_k - q^q_shift t^t_shift X_j."""
    kq, kt = inp.x_exponents(k)
    jq, jt = inp.x_exponents(j)
    return LaurentPoly.monomial(kq, kt) - LaurentPoly.monomial(
        jq + q_shift, jt + t_shift
    )


def triple_factors(
    inp: FormulaInput, triple: AdmissibleTriple
) -> Tuple[LaurentPoly, LaurentPoly]:
    """Numerator and denominator of the two X-ratios of one triple."""
    j, k, a, b = triple.j, triple.k, triple.a, triple.b
    num = _x_difference(inp, k, j, b - a - 1, 1) * _x_difference(
        inp, k, j, -a, -1
    )
    den = _x_difference(inp, k, j, b - a, 0) * _x_difference(
        inp, k, j, -a - 1, 0
    )
    return num, den


def formula_coefficient(
    inp: FormulaInput, triples: Optional[Iterable[AdmissibleTriple]] = None
) -> QtRational:
    """psi_T times the product of the triple factors.

    Args:
        inp: Validated formula input.
        triples: Override the iteration order of the admissible triples;
            the product does not depend on it.

    Raises:
        NotUniqueTableauError: T is not unique of its shape and weight.
    """
    if not is_unique_by_columns(inp.tableau):
        raise NotUniqueTableauError(
            f"tableau {inp.tableau} is not unique of its shape and weight"
        )
    if triples is None:
        triples = admissible_triples(inp.tableau, inp.n)
    psi = psi_weight(inp.tableau)
    num = psi.numerator
    den = psi.denominator
    for triple in triples:
        t_num, t_den = triple_factors(inp, triple)
        if t_num.is_zero():
            logger.debug("triple %s annihilates the coefficient", triple)
            return QtRational.zero()
        num = num * t_num
        den = den * t_den
    return QtRational(num, den)


@functools.lru_cache(maxsize=None)
def coefficient(lam: Partition, mu: Partition, nu: Partition) -> QtRational:
    """formula_coefficient for a triple; raises KostkaNotOneError."""
    return formula_coefficient(formula_input(lam, mu, nu))


def vertical_pieri_x_form(
    lam: Partition, nu: Partition, n: Optional[int] = None
) -> QtRational:
    """The vertical Pieri coefficient as a product over rows j < k with
    nu_j = lam_j and nu_k = lam_k + 1 of

        (X_k - t/q X_j) / (X_k - X_j) * (X_k - X_j / t) / (X_k - X_j / q).
    """
    if strip_type(lam, nu) not in (StripType.VERTICAL, StripType.BOTH):
        raise NotVerticalStripError(f"{nu}/{lam} is not a vertical strip")
    n = len(nu) if n is None else n
    column = [i for i in range(1, n + 1) if nu.part(i) > lam.part(i)]
    inp = FormulaInput(lam, Tableau.from_columns([column]), n)
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for k in column:
        for j in range(1, k):
            if j in column:
                continue
            num = num * _x_difference(inp, k, j, -1, 1)
            num = num * _x_difference(inp, k, j, 0, -1)
            den = den * _x_difference(inp, k, j, 0, 0)
            den = den * _x_difference(inp, k, j, -1, 0)
    return QtRational(num, den)
