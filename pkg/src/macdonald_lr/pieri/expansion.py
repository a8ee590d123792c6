"""
Brute-force Macdonald LR coefficients through the elementary basis.

P_mu is expanded as sum d_eta' e_eta' by unitriangular back-substitution
(e_mu' = P_mu + lower terms), and each e_eta' acts on P_lam by a chain of
vertical Pieri steps. Only the coefficient of one P_nu is wanted, so every
chain is confined to the window lam <= kappa <= nu, and e-indices whose
largest part exceeds the number of rows where nu exceeds lam are dropped:
such e_r cannot add r cells in distinct rows of nu/lam.
"""

import functools
import logging
from typing import Dict, Optional, Tuple

from macdonald_lr.algebra.rational import QtRational
from macdonald_lr.combinatorics.partitions import Partition, strip_rows
from macdonald_lr.errors import CapTooSmallError
from macdonald_lr.pieri.pieri import (
    Expansion,
    PBasisExpansion,
    Window,
    multiply_by_e,
)

logger = logging.getLogger(__name__)


class EBasisExpansion(Expansion):
    """sum_eta d_eta e_eta, indexed by the e-partition eta."""


def e_chain(
    start: PBasisExpansion, e_index: Partition, window: Optional[Window] = None
) -> PBasisExpansion:
    """start * e_(e_index), multiplying by the largest parts first."""
    expansion = start
    for part in e_index.parts:
        expansion = multiply_by_e(expansion, part, window)
        if not len(expansion):
            break
    return expansion


@functools.lru_cache(maxsize=None)
def e_product_in_p_basis(
    e_index: Partition, ceiling: Optional[Partition] = None
) -> PBasisExpansion:
    """P-basis expansion of e_(e_index), optionally inside a ceiling."""
    return e_chain(
        PBasisExpansion.single(Partition()), e_index, Window(ceiling=ceiling)
    )


@functools.lru_cache(maxsize=None)
def p_in_e_basis(mu: Partition, row_cap: int) -> EBasisExpansion:
    """P_mu in the e basis, truncated to e-indices with parts <= row_cap.

    Raises:
        CapTooSmallError: row_cap is below the length of mu, which would
            drop the leading index mu' itself.
    """
    if row_cap < len(mu):
        raise CapTooSmallError(
            f"row cap {row_cap} is below the length of {mu}"
        )
    logger.debug("expanding P%s in the e basis, row cap %d", mu, row_cap)
    leading = mu.conjugate()
    if not mu:
        return EBasisExpansion({leading: QtRational.one()})
    # P_eta with more than row_cap rows only feeds e-indices with a part
    # above row_cap, so the ceiling box realizes the truncation.
    ceiling = Partition((mu.size,) * row_cap)
    e_leading = e_product_in_p_basis(leading, ceiling)
    acc = {leading: QtRational.one()}
    for eta, coeff in e_leading.items():
        if eta == mu:
            continue
        for index, d in p_in_e_basis(eta, row_cap).items():
            term = -(coeff * d)
            acc[index] = acc[index] + term if index in acc else term
    return EBasisExpansion(acc)


def _prefix_chain(
    chains: Dict[Tuple[int, ...], PBasisExpansion],
    parts: Tuple[int, ...],
    window: Optional[Window],
) -> PBasisExpansion:
    """e_chain from chains[()], resuming from the longest prefix of parts
    already in chains and recording every new prefix."""
    k = len(parts)
    while parts[:k] not in chains:
        k -= 1
    expansion = chains[parts[:k]]
    for i in range(k, len(parts)):
        if not len(expansion):
            break
        expansion = multiply_by_e(expansion, parts[i], window)
        chains[parts[: i + 1]] = expansion
    return expansion


def affected_rows(lam: Partition, nu: Partition) -> int:
    return len(strip_rows(lam, nu))


def coeff_bruteforce(
    lam: Partition, mu: Partition, nu: Partition, prune: bool = True
) -> QtRational:
    """Coefficient of P_nu in P_lam P_mu from the vertical Pieri rule.

    Args:
        lam: First factor.
        mu: Second factor, expanded in the e basis.
        nu: Target index.
        prune: Confine the Pieri chains to the window between lam and nu
            and truncate the e expansion. Disable only for small
            cross-checks.

    Returns:
        The canonical coefficient; zero for size mismatch or lam not in nu.
    """
    if nu.size != lam.size + mu.size or not nu.contains(lam):
        return QtRational.zero()
    rows = affected_rows(lam, nu)
    if prune:
        row_cap = max(rows, len(mu))
        window = Window(lam, nu)
    else:
        row_cap = max(mu.size, len(mu))
        window = None
    chains = {(): PBasisExpansion.single(lam)}
    total = QtRational.zero()
    for e_index, d in p_in_e_basis(mu, row_cap).items():
        if prune and e_index.part(1) > rows:
            continue
        chain = _prefix_chain(chains, e_index.parts, window)
        total = total + d * chain.coefficient(nu)
    return total
