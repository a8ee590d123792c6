"""
The classical Littlewood-Richardson rule and Gelfand-Tsetlin patterns.

LR tableaux are skew fillings of nu/lam with weight mu whose reading word
(right to left along each row, rows top to bottom) is a lattice word. The
coefficient used by the q = t check comes from lrcalc; the tableaux feed
the Gelfand-Tsetlin maps.
"""

import dataclasses
from typing import Dict, Iterator, List, Tuple

import lrcalc

from macdonald_lr.combinatorics.partitions import Composition, Partition
from macdonald_lr.combinatorics.tableaux import Tableau
from macdonald_lr.errors import (
    InvalidPatternError,
    InvalidTableauError,
    NotLatticeWordError,
)


def _is_lattice(word: List[int]) -> bool:
    counts: Dict[int, int] = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


@dataclasses.dataclass(frozen=True)
class SkewTableau:
    """A semistandard filling of outer/inner, one tuple per row of outer."""

    inner: Partition
    outer: Partition
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise InvalidTableauError(f"{self.inner} not inside {self.outer}")
        rows = tuple(tuple(row) for row in self.rows)
        rows = rows + ((),) * (len(self.outer) - len(rows))
        object.__setattr__(self, "rows", rows)
        for i, row in enumerate(rows, start=1):
            expected = self.outer.part(i) - self.inner.part(i)
            if len(row) != expected:
                raise InvalidTableauError(
                    f"row {i} has {len(row)} entries, expected {expected}"
                )
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise InvalidTableauError(f"row {i} is not weakly increasing")
        for (i, j), value in self.cells().items():
            above = self.entry(i - 1, j)
            if above is not None and above >= value:
                raise InvalidTableauError(f"column {j} not strictly increasing")

    def entry(self, i: int, j: int):
        """Entry at 1-based cell (i, j), or None outside the skew shape."""
        if i < 1 or i > len(self.rows):
            return None
        offset = self.inner.part(i)
        if offset < j <= self.outer.part(i):
            return self.rows[i - 1][j - offset - 1]
        return None

    def cells(self) -> Dict[Tuple[int, int], int]:
        return {
            (i, self.inner.part(i) + k + 1): value
            for i, row in enumerate(self.rows, start=1)
            for k, value in enumerate(row)
        }

    def reading_word(self) -> List[int]:
        return [value for row in self.rows for value in reversed(row)]

    def is_lattice(self) -> bool:
        return _is_lattice(self.reading_word())

    def weight(self) -> Composition:
        word = self.reading_word()
        n = max(word, default=0)
        return Composition(tuple(word.count(v) for v in range(1, n + 1)))


def lr_tableaux(
    lam: Partition, mu: Partition, nu: Partition
) -> Iterator[SkewTableau]:
    """LR tableaux of shape nu/lam and weight mu, filled row by row from
    the right so the lattice condition is checked as the word is read."""
    if not nu.contains(lam) or nu.size != lam.size + mu.size:
        return
    letters = len(mu)
    cells = [
        (i, j)
        for i in range(1, len(nu) + 1)
        for j in range(nu.part(i), lam.part(i), -1)
    ]
    grid: Dict[Tuple[int, int], int] = {}
    counts = [0] * (letters + 1)

    def fill(k: int) -> Iterator[SkewTableau]:
        if k == len(cells):
            rows = tuple(
                tuple(
                    grid[(i, j)]
                    for j in range(lam.part(i) + 1, nu.part(i) + 1)
                )
                for i in range(1, len(nu) + 1)
            )
            yield SkewTableau(lam, nu, rows)
            return
        i, j = cells[k]
        high = min(letters, i)
        if (i, j + 1) in grid:
            high = min(high, grid[(i, j + 1)])
        low = grid[(i - 1, j)] + 1 if (i - 1, j) in grid else 1
        for value in range(low, high + 1):
            if counts[value] >= mu.part(value):
                continue
            if value > 1 and counts[value] + 1 > counts[value - 1]:
                continue
            grid[(i, j)] = value
            counts[value] += 1
            yield from fill(k + 1)
            counts[value] -= 1
            del grid[(i, j)]

    yield from fill(0)


def lr_coefficient_schur(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^nu_{lam,mu} for Schur functions, computed by lrcalc."""
    if nu.size != lam.size + mu.size:
        return 0
    if not (nu.contains(lam) and nu.contains(mu)):
        return 0
    return lrcalc.lrcoef(nu.to_json(), lam.to_json(), mu.to_json())


@dataclasses.dataclass(frozen=True)
class GTPattern:
    """Interlacing triangle; rows[j - 1] holds the j entries of level j."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        for j, row in enumerate(rows, start=1):
            if len(row) != j:
                raise InvalidPatternError(f"level {j} has {len(row)} entries")
            if any(v < 0 for v in row):
                raise InvalidPatternError(f"negative entry at level {j}")
        for j in range(1, len(rows)):
            lower, upper = rows[j - 1], rows[j]
            for k in range(j):
                if not upper[k] >= lower[k] >= upper[k + 1]:
                    raise InvalidPatternError(
                        f"levels {j} and {j + 1} do not interlace at {k + 1}"
                    )

    @property
    def top(self) -> Tuple[int, ...]:
        return self.rows[-1] if self.rows else ()

    def to_json(self) -> List[List[int]]:
        return [list(row) for row in reversed(self.rows)]

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in reversed(self.rows))


def lr_to_gt(tableau: SkewTableau) -> GTPattern:
    """Level j counts the entries k in the first j rows, for k <= j."""
    if not tableau.is_lattice():
        raise NotLatticeWordError(
            f"reading word {tableau.reading_word()} is not a lattice word"
        )
    n = len(tableau.outer)
    counts = [0] * (n + 1)
    levels = []
    for j in range(1, n + 1):
        for value in tableau.rows[j - 1]:
            counts[value] += 1
        levels.append(tuple(counts[1 : j + 1]))
    return GTPattern(tuple(levels))


def gt_to_tableau(pattern: GTPattern) -> Tableau:
    """The SSYT whose entries <= j fill the shape given by level j."""
    n = len(pattern.rows)
    rows: List[List[int]] = [[] for _ in range(n)]
    previous: Tuple[int, ...] = ()
    for j, level in enumerate(pattern.rows, start=1):
        for k, part in enumerate(level):
            before = previous[k] if k < len(previous) else 0
            rows[k].extend([j] * (part - before))
        previous = level
    return Tableau(tuple(tuple(row) for row in rows if row))
