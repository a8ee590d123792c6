"""
Integer partitions and compositions with their Young-diagram geometry.

Cells are 1-based (row, column). Partitions are normalized value types:
trailing zeros are dropped on construction, so formulas that need a padded
length take an explicit n.
"""

import dataclasses
import enum
import itertools
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from macdonald_lr.errors import (
    CellOutsideShapeError,
    InvalidPartitionError,
    SizeMismatchError,
)


def _parse_entries(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return ()
    try:
        values = tuple(int(piece) for piece in text.split(","))
    except ValueError as e:
        raise InvalidPartitionError(f"cannot parse {text!r}: {e}") from e
    if any(v < 0 for v in values):
        raise InvalidPartitionError(f"negative entry in {text!r}")
    return values


@dataclasses.dataclass(frozen=True)
class Cell:
    row: int
    col: int


@dataclasses.dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise InvalidPartitionError(f"nonpositive part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartitionError(f"{parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parses "5,4,4,3"; the empty string or "0" is the empty partition."""
        return cls(_parse_entries(text))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def try_from(cls, values: Iterable[int]) -> Optional["Partition"]:
        """Returns None instead of raising when values are not a partition."""
        try:
            return cls(tuple(values))
        except InvalidPartitionError:
            return None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def part(self, i: int) -> int:
        """The 1-based part i, zero beyond the length."""
        if 1 <= i <= len(self.parts):
            return self.parts[i - 1]
        return 0

    def padded(self, n: int) -> Tuple[int, ...]:
        return self.parts + (0,) * max(0, n - len(self.parts))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        """True when other's diagram lies inside this one."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def cells(self) -> Iterator[Cell]:
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield Cell(i, j)

    def __contains__(self, cell: Cell) -> bool:
        return 1 <= cell.row and 1 <= cell.col <= self.part(cell.row)

    def is_rectangle(self) -> bool:
        return len(set(self.parts)) <= 1

    def to_json(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclasses.dataclass(frozen=True)
class Composition:
    entries: Tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if any(e < 0 for e in entries):
            raise InvalidPartitionError(f"negative entry in {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(_parse_entries(text))

    @classmethod
    def of(cls, *entries: int) -> "Composition":
        return cls(tuple(entries))

    @property
    def size(self) -> int:
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def entry(self, i: int) -> int:
        if 1 <= i <= len(self.entries):
            return self.entries[i - 1]
        return 0

    def padded(self, n: int) -> "Composition":
        return Composition(
            self.entries + (0,) * max(0, n - len(self.entries))
        )

    def trimmed(self) -> "Composition":
        entries = self.entries
        while entries and entries[-1] == 0:
            entries = entries[:-1]
        return Composition(entries)

    def to_json(self) -> List[int]:
        return list(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


class StripType(enum.Enum):
    NOT_CONTAINED = "not_contained"
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    BOTH = "both"
    NEITHER = "neither"


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(
        tuple(
            sum(1 for p in lam.parts if p >= j)
            for j in range(1, lam.parts[0] + 1)
        )
    )


def arm_leg(lam: Partition, s: Cell) -> Tuple[int, int]:
    if s not in lam:
        raise CellOutsideShapeError(f"cell {s} is outside {lam}")
    conj = conjugate(lam)
    return lam.part(s.row) - s.col, conj.part(s.col) - s.row


def dominance_leq(rho: Partition, chi: Partition) -> bool:
    """True when every prefix sum of chi is at least that of rho."""
    if rho.size != chi.size:
        raise SizeMismatchError(
            f"dominance needs equal sizes, got {rho} and {chi}"
        )
    n = max(len(rho), len(chi))
    rho_sums = itertools.accumulate(rho.padded(n))
    chi_sums = itertools.accumulate(chi.padded(n))
    return all(c >= r for r, c in zip(rho_sums, chi_sums))


def conjugate_dominance_leq(rho: Partition, chi: Partition) -> bool:
    """Dominance on conjugates: rho' <= chi' (reverses the usual order)."""
    return dominance_leq(conjugate(rho), conjugate(chi))


def is_vertical_strip(lam: Partition, nu: Partition) -> bool:
    """No two cells of nu/lam in one row (lam must be contained in nu)."""
    n = len(nu)
    return nu.contains(lam) and all(
        b - a <= 1 for a, b in zip(lam.padded(n), nu.padded(n))
    )


def is_horizontal_strip(lam: Partition, nu: Partition) -> bool:
    """No two cells of nu/lam in one column: nu_{i+1} <= lam_i."""
    if not nu.contains(lam):
        return False
    return all(nu.part(i + 1) <= lam.part(i) for i in range(1, len(nu)))


def strip_type(lam: Partition, nu: Partition) -> StripType:
    if not nu.contains(lam):
        return StripType.NOT_CONTAINED
    vertical = is_vertical_strip(lam, nu)
    horizontal = is_horizontal_strip(lam, nu)
    if vertical and horizontal:
        return StripType.BOTH
    if vertical:
        return StripType.VERTICAL
    if horizontal:
        return StripType.HORIZONTAL
    return StripType.NEITHER


def strip_rows(lam: Partition, nu: Partition) -> List[int]:
    """1-based rows meeting nu/lam."""
    return [i for i in range(1, len(nu) + 1) if nu.part(i) > lam.part(i)]


def strip_columns(lam: Partition, nu: Partition) -> List[int]:
    """1-based columns meeting nu/lam."""
    return strip_rows(conjugate(lam), conjugate(nu))


def vertical_strips(
    lam: Partition, r: int, max_rows: Optional[int] = None
) -> Iterator[Partition]:
    """Partitions nu with nu/lam a vertical strip of r cells.

    Yields in the order of the chosen row sets (lexicographic), optionally
    restricted to at most max_rows rows.
    """
    limit = len(lam) + r
    if max_rows is not None:
        limit = min(limit, max_rows)
    if limit < len(lam):
        return
    base = list(lam.padded(limit))
    for rows in itertools.combinations(range(limit), r):
        parts = list(base)
        for i in rows:
            parts[i] += 1
        nu = Partition.try_from(parts)
        if nu is not None:
            yield nu


def horizontal_strips(
    lam: Partition, r: int, max_rows: Optional[int] = None
) -> Iterator[Partition]:
    """Partitions nu with nu/lam a horizontal strip of r cells."""
    limit = len(lam) + 1
    if max_rows is not None:
        limit = min(limit, max_rows)
    if limit < len(lam):
        return
    parts = lam.padded(limit)

    def extend(i: int, remaining: int, acc: List[int]) -> Iterator[List[int]]:
        if i == limit:
            if remaining == 0:
                yield list(acc)
            return
        cap = remaining if i == 0 else min(remaining, parts[i - 1] - parts[i])
        for extra in range(cap, -1, -1):
            acc.append(parts[i] + extra)
            yield from extend(i + 1, remaining - extra, acc)
            acc.pop()

    for values in extend(0, r, []):
        yield Partition(tuple(values))


def partitions_of(
    n: int, max_part: Optional[int] = None, max_length: Optional[int] = None
) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def build(remaining: int, cap: int, acc: List[int]):
        if remaining == 0:
            yield Partition(tuple(acc))
            return
        if max_length is not None and len(acc) >= max_length:
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            yield from build(remaining - part, part, acc)
            acc.pop()

    yield from build(n, max_part, [])


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions fitting in a rows x cols box, by size then reverse
    lexicographic order."""
    for size in range(rows * cols + 1):
        yield from partitions_of(size, max_part=cols, max_length=rows)


def compositions_of(n: int, length: int) -> Iterator[Composition]:
    """Weak compositions of n with exactly length entries."""
    if length == 0:
        if n == 0:
            yield Composition()
        return
    for first in range(n, -1, -1):
        for rest in compositions_of(n - first, length - 1):
            yield Composition((first,) + rest.entries)


def add_composition(lam: Partition, chi: Sequence[int]) -> Tuple[int, ...]:
    """Entrywise lam + chi over len(chi) rows (lam padded with zeros)."""
    n = max(len(lam), len(chi))
    chi = tuple(chi) + (0,) * (n - len(chi))
    return tuple(a + b for a, b in zip(lam.padded(n), chi))


def partitions_between(lam: Partition, nu: Partition) -> Iterator[Partition]:
    """Partitions kappa with lam inside kappa inside nu."""
    if not nu.contains(lam):
        return
    ranges = [range(a, b + 1) for a, b in zip(lam.padded(len(nu)), nu.parts)]
    for parts in itertools.product(*ranges):
        kappa = Partition.try_from(parts)
        if kappa is not None:
            yield kappa
