"""
Semistandard Young tableaux.

A Tableau is stored row-major; the column view (lists and sets of entries)
is derived once and cached, since the uniqueness criterion and the
admissible triples are column questions while strips are row questions.
"""

import dataclasses
import enum
import functools
import logging
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from macdonald_lr.combinatorics.partitions import (
    Composition,
    Partition,
    conjugate,
)
from macdonald_lr.errors import (
    InvalidTableauError,
    NotRectangularError,
    NotUniqueBlockError,
    NTooSmallError,
    SizeMismatchError,
    WrongKindError,
)

logger = logging.getLogger(__name__)


class Multiplicity(enum.Enum):
    ZERO = "zero"
    MANY = "many"


class BlockKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"
    THIRD = "third"


@dataclasses.dataclass(frozen=True)
class Tableau:
    rows: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows if row)
        object.__setattr__(self, "rows", rows)
        lengths = [len(row) for row in rows]
        if any(lengths[i] < lengths[i + 1] for i in range(len(rows) - 1)):
            raise InvalidTableauError(f"row lengths {lengths} not a partition")
        for row in rows:
            if any(v < 1 for v in row):
                raise InvalidTableauError(f"entries must be positive: {row}")
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise InvalidTableauError(f"row {row} is not weakly increasing")
        for i in range(1, len(rows)):
            for j, value in enumerate(rows[i]):
                if rows[i - 1][j] >= value:
                    raise InvalidTableauError(
                        f"column {j + 1} is not strictly increasing"
                    )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "Tableau":
        columns = [sorted(c) for c in columns if c]
        height = max((len(c) for c in columns), default=0)
        rows = [
            tuple(c[i] for c in columns if len(c) > i) for i in range(height)
        ]
        tableau = cls(tuple(rows))
        if [list(c) for c in tableau.columns] != columns:
            raise InvalidTableauError(f"columns {columns} do not form a shape")
        return tableau

    @functools.cached_property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @functools.cached_property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        width = len(self.rows[0]) if self.rows else 0
        return tuple(
            tuple(row[j] for row in self.rows if len(row) > j)
            for j in range(width)
        )

    @functools.cached_property
    def column_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(c) for c in self.columns)

    @functools.cached_property
    def entries(self) -> FrozenSet[int]:
        return frozenset(v for row in self.rows for v in row)

    @property
    def max_entry(self) -> int:
        return max(self.entries, default=0)

    @property
    def size(self) -> int:
        return self.shape.size

    def weight(self, n: Optional[int] = None) -> Composition:
        """Multiplicities of 1..n (n defaults to the largest entry)."""
        if n is None:
            n = self.max_entry
        counts = [0] * n
        for row in self.rows:
            for v in row:
                if v > n:
                    raise NTooSmallError(f"entry {v} exceeds alphabet 1..{n}")
                counts[v - 1] += 1
        return Composition(tuple(counts))

    def restricted_shape(self, bound: int) -> Partition:
        """Shape of the subtableau of entries <= bound."""
        return Partition(
            tuple(sum(1 for v in row if v <= bound) for row in self.rows)
        )

    def is_rectangular(self) -> bool:
        return self.shape.is_rectangle()

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "rows": [list(row) for row in self.rows],
        }

    def render(self) -> str:
        if not self.rows:
            return "(empty tableau)"
        width = max(len(str(v)) for row in self.rows for v in row)
        return "\n".join(
            " ".join(str(v).rjust(width) for v in row) for row in self.rows
        )

    def __str__(self) -> str:
        return "/".join("".join(str(v) for v in row) for row in self.rows)


def _check_sizes(mu: Partition, chi: Composition) -> None:
    if mu.size != chi.size:
        raise SizeMismatchError(
            f"shape {mu} has {mu.size} cells but weight {chi} sums to "
            f"{chi.size}"
        )


def iter_ssyt(mu: Partition, chi: Composition) -> Iterator[Tableau]:
    """Yields SSYT of shape mu and weight chi.

    Cells are filled in row-major order trying values in increasing order,
    so tableaux come out lexicographically by row reading word. A branch is
    cut when some value has more copies left than columns able to take it.
    """
    _check_sizes(mu, chi)
    n = len(chi)
    remaining = list(chi.entries)
    grid = [[0] * row for row in mu.parts]
    heights = conjugate(mu).parts
    filled = [0] * len(heights)
    cells = [(c.row - 1, c.col - 1) for c in mu.cells()]

    def feasible() -> bool:
        for value in range(1, n + 1):
            need = remaining[value - 1]
            if not need:
                continue
            room = 0
            for col, height in enumerate(heights):
                depth = filled[col]
                if depth < height and (
                    depth == 0 or grid[depth - 1][col] < value
                ):
                    room += 1
            if need > room:
                return False
        return True

    def fill(k: int) -> Iterator[Tableau]:
        if k == len(cells):
            yield Tableau(tuple(tuple(row) for row in grid))
            return
        i, j = cells[k]
        low = i + 1
        if j > 0:
            low = max(low, grid[i][j - 1])
        if i > 0:
            low = max(low, grid[i - 1][j] + 1)
        for value in range(low, n + 1):
            if not remaining[value - 1]:
                continue
            grid[i][j] = value
            remaining[value - 1] -= 1
            filled[j] += 1
            if feasible():
                yield from fill(k + 1)
            filled[j] -= 1
            remaining[value - 1] += 1
            grid[i][j] = 0

    if feasible():
        yield from fill(0)


def enumerate_ssyt(
    mu: Partition, chi: Composition, cap: Optional[int] = None
) -> List[Tableau]:
    """All SSYT of shape mu and weight chi, or the first cap + 1 of them."""
    found = []
    for tableau in iter_ssyt(mu, chi):
        found.append(tableau)
        if cap is not None and len(found) > cap:
            break
    return found


def kostka(mu: Partition, chi: Composition) -> int:
    if mu.size != chi.size:
        return 0
    return sum(1 for _ in iter_ssyt(mu, chi))


def unique_ssyt(
    mu: Partition, chi: Composition
) -> Union[Tableau, Multiplicity]:
    """The tableau when K(mu, chi) = 1, otherwise Multiplicity.ZERO/MANY."""
    if mu.size != chi.size:
        return Multiplicity.ZERO
    found = enumerate_ssyt(mu, chi, cap=1)
    logger.debug("unique_ssyt(%s, %s): %d found", mu, chi, len(found))
    if not found:
        return Multiplicity.ZERO
    if len(found) > 1:
        return Multiplicity.MANY
    return found[0]


def is_unique_by_columns(tableau: Tableau) -> bool:
    """Every later column is a subset of, or one value away from, every
    earlier column."""
    sets = tableau.column_sets
    for a in range(len(sets)):
        for b in range(a + 1, len(sets)):
            earlier, later = sets[a], sets[b]
            if later <= earlier:
                continue
            if len(later) == len(earlier) and len(earlier - later) <= 1:
                continue
            return False
    return True


def classify_block(
    column_sets: Sequence[FrozenSet[int]],
) -> FrozenSet[BlockKind]:
    """Kinds of a block of equal-height columns.

    Raises:
        NotUniqueBlockError: sizes differ or no kind applies.
    """
    distinct = list(dict.fromkeys(frozenset(s) for s in column_sets))
    if not distinct:
        raise NotUniqueBlockError("empty block")
    k = len(distinct[0])
    if any(len(s) != k for s in distinct):
        raise NotUniqueBlockError("block columns have different heights")
    if len(distinct) == 1:
        return frozenset({BlockKind.FIRST})
    kinds = set()
    if len(frozenset.intersection(*distinct)) == k - 1:
        kinds.add(BlockKind.SECOND)
    if len(frozenset.union(*distinct)) == k + 1:
        kinds.add(BlockKind.THIRD)
    if not kinds:
        raise NotUniqueBlockError(
            f"columns {[sorted(s) for s in distinct]} fit no block kind"
        )
    return frozenset(kinds)


def rectangular_blocks(tableau: Tableau) -> List[Tableau]:
    """Splits the tableau into maximal runs of equal-height columns."""
    blocks: List[List[Tuple[int, ...]]] = []
    for column in tableau.columns:
        if blocks and len(blocks[-1][-1]) == len(column):
            blocks[-1].append(column)
        else:
            blocks.append([column])
    return [Tableau.from_columns(block) for block in blocks]


def relabel(tableau: Tableau) -> Tableau:
    """Renames the distinct entries to 1..r, preserving their order."""
    mapping = {v: i for i, v in enumerate(sorted(tableau.entries), start=1)}
    return Tableau(
        tuple(tuple(mapping[v] for v in row) for row in tableau.rows)
    )


def _require_rectangular(tableau: Tableau) -> None:
    if not tableau.is_rectangular():
        raise NotRectangularError(f"tableau {tableau} is not rectangular")


def intrinsic(tableau: Tableau) -> Tableau:
    """Deletes every entry present in all columns, closing gaps upward."""
    _require_rectangular(tableau)
    if not tableau.rows:
        return tableau
    common = frozenset.intersection(*tableau.column_sets)
    return Tableau.from_columns(
        [[v for v in column if v not in common] for column in tableau.columns]
    )


def complement(tableau: Tableau) -> Tableau:
    """One-row tableau of the values l + 1 - y_j, y_j missing from column j.

    Raises:
        NotRectangularError: the tableau is not a rectangle.
        WrongKindError: the tableau does not use exactly k + 1 values.
    """
    _require_rectangular(tableau)
    k = len(tableau.rows)
    values = tableau.entries
    if len(values) != k + 1:
        raise WrongKindError(
            f"{k}-row tableau uses {len(values)} distinct values, "
            f"expected {k + 1}"
        )
    largest = max(values)
    missing = [next(iter(values - column)) for column in tableau.column_sets]
    return Tableau((tuple(sorted(largest + 1 - y for y in missing)),))


def reversal(lam: Partition, tableau: Tableau, n: int) -> Partition:
    """(N - lam_l, ..., N - lam_1) with l the largest entry of the tableau."""
    if n <= lam.part(1):
        raise NTooSmallError(f"N={n} must exceed the first part of {lam}")
    largest = tableau.max_entry
    return Partition(tuple(n - part for part in reversed(lam.padded(largest))))


def complement_reduction(
    lam: Partition, tableau: Tableau, n: int
) -> Tuple[Partition, Tableau]:
    """The pair (reversal, complement) carrying the same coefficient.

    Applies to rectangular tableaux whose values are exactly 1..k+1.
    """
    k = len(tableau.rows)
    if tableau.entries != frozenset(range(1, k + 2)):
        raise WrongKindError(
            f"values of {tableau} are not exactly 1..{k + 1}"
        )
    return reversal(lam, tableau, n), complement(tableau)
