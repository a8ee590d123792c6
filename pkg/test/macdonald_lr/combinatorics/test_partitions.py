import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from macdonald_lr.combinatorics.partitions import (
    Cell,
    Composition,
    Partition,
    StripType,
    add_composition,
    arm_leg,
    compositions_of,
    conjugate,
    conjugate_dominance_leq,
    dominance_leq,
    horizontal_strips,
    partitions_between,
    partitions_in_box,
    partitions_of,
    strip_columns,
    strip_rows,
    strip_type,
    vertical_strips,
)
from macdonald_lr.errors import (
    CellOutsideShapeError,
    InvalidPartitionError,
    SizeMismatchError,
)

partitions = st.lists(st.integers(1, 6), max_size=6).map(
    lambda parts: Partition(tuple(sorted(parts, reverse=True)))
)


class TestPartition(unittest.TestCase):
    def test_parse(self):
        lam = Partition.parse("5,4,4,3")
        self.assertEqual(lam.parts, (5, 4, 4, 3))
        self.assertEqual(str(lam), "(5,4,4,3)")
        self.assertEqual(lam.size, 16)
        self.assertEqual(Partition.parse(""), Partition())
        self.assertEqual(Partition.parse("0"), Partition())

    def test_trailing_zeros_are_stripped(self):
        self.assertEqual(Partition((2, 1, 0, 0)), Partition.of(2, 1))

    def test_invalid(self):
        for text in ("1,2", "a", "2,-1"):
            with self.assertRaises(InvalidPartitionError):
                Partition.parse(text)
        self.assertIsNone(Partition.try_from([1, 3]))

    def test_part_and_padding(self):
        lam = Partition.of(3, 1)
        self.assertEqual(lam.part(2), 1)
        self.assertEqual(lam.part(5), 0)
        self.assertEqual(lam.padded(4), (3, 1, 0, 0))

    def test_cells(self):
        lam = Partition.of(2, 1)
        self.assertEqual(
            list(lam.cells()), [Cell(1, 1), Cell(1, 2), Cell(2, 1)]
        )
        self.assertIn(Cell(2, 1), lam)
        self.assertNotIn(Cell(2, 2), lam)

    def test_conjugate(self):
        self.assertEqual(conjugate(Partition.of(3, 1)), Partition.of(2, 1, 1))
        self.assertEqual(conjugate(Partition()), Partition())

    @settings(deadline=None)
    @given(partitions)
    def test_conjugate_is_an_involution(self, lam):
        self.assertEqual(lam.conjugate().conjugate(), lam)
        self.assertEqual(lam.conjugate().size, lam.size)

    def test_arm_leg(self):
        self.assertEqual(arm_leg(Partition.of(3, 2), Cell(1, 1)), (2, 1))
        self.assertEqual(arm_leg(Partition.of(3, 2), Cell(1, 3)), (0, 0))
        with self.assertRaises(CellOutsideShapeError):
            arm_leg(Partition.of(3, 2), Cell(2, 3))

    def test_contains(self):
        self.assertTrue(Partition.of(3, 2).contains(Partition.of(2, 2)))
        self.assertFalse(Partition.of(3, 2).contains(Partition.of(1, 1, 1)))

    def test_dominance(self):
        self.assertTrue(dominance_leq(Partition.of(2, 2), Partition.of(3, 1)))
        self.assertFalse(dominance_leq(Partition.of(3, 1), Partition.of(2, 2)))
        self.assertTrue(
            conjugate_dominance_leq(Partition.of(3, 1), Partition.of(2, 2))
        )
        with self.assertRaises(SizeMismatchError):
            dominance_leq(Partition.of(2), Partition.of(1))


class TestStrips(unittest.TestCase):
    def test_strip_type(self):
        one = Partition.of(1)
        self.assertIs(strip_type(one, Partition.of(2)), StripType.BOTH)
        self.assertIs(strip_type(one, Partition.of(3)), StripType.HORIZONTAL)
        column = Partition.of(1, 1, 1)
        self.assertIs(strip_type(one, column), StripType.VERTICAL)
        hook = Partition.of(2, 1)
        self.assertIs(strip_type(Partition(), hook), StripType.NEITHER)
        self.assertIs(strip_type(Partition.of(2), one), StripType.NOT_CONTAINED)

    def test_rows_and_columns(self):
        lam, nu = Partition.of(2, 1), Partition.of(3, 1, 1)
        self.assertEqual(strip_rows(lam, nu), [1, 3])
        self.assertEqual(strip_columns(lam, nu), [1, 3])

    def test_vertical_strips(self):
        found = set(vertical_strips(Partition.of(1), 1))
        self.assertEqual(found, {Partition.of(2), Partition.of(1, 1)})
        found = set(vertical_strips(Partition.of(1), 2, max_rows=2))
        self.assertEqual(found, {Partition.of(2, 1)})

    def test_horizontal_strips(self):
        found = set(horizontal_strips(Partition.of(1), 2))
        self.assertEqual(found, {Partition.of(3), Partition.of(2, 1)})

    def test_partitions_between(self):
        found = set(partitions_between(Partition.of(1), Partition.of(2, 1)))
        self.assertEqual(
            found,
            {
                Partition.of(1),
                Partition.of(2),
                Partition.of(1, 1),
                Partition.of(2, 1),
            },
        )
        self.assertEqual(
            list(partitions_between(Partition.of(2), Partition.of(1, 1))), []
        )

    def test_strips_below_the_length_of_lam(self):
        lam = Partition.of(1, 1)
        self.assertEqual(list(horizontal_strips(lam, 1, max_rows=1)), [])
        self.assertEqual(list(vertical_strips(lam, 1, max_rows=1)), [])
        found = set(horizontal_strips(lam, 1, max_rows=2))
        self.assertEqual(found, {Partition.of(2, 1)})

    @settings(deadline=None)
    @given(partitions, st.integers(0, 3))
    def test_generated_strips_have_their_type(self, lam, r):
        for nu in vertical_strips(lam, r):
            self.assertEqual(nu.size, lam.size + r)
            self.assertIn(
                strip_type(lam, nu), (StripType.VERTICAL, StripType.BOTH)
            )
        for nu in horizontal_strips(lam, r):
            self.assertEqual(nu.size, lam.size + r)
            self.assertIn(
                strip_type(lam, nu), (StripType.HORIZONTAL, StripType.BOTH)
            )


class TestEnumeration(unittest.TestCase):
    def test_partition_counts(self):
        counts = [len(list(partitions_of(n))) for n in range(8)]
        self.assertEqual(counts, [1, 1, 2, 3, 5, 7, 11, 15])

    def test_partitions_of_bounds(self):
        found = list(partitions_of(4, max_part=2, max_length=2))
        self.assertEqual(found, [Partition.of(2, 2)])

    def test_partitions_in_box(self):
        found = list(partitions_in_box(2, 2))
        self.assertEqual(len(found), 6)
        self.assertEqual(found[0], Partition())
        self.assertEqual(found[-1], Partition.of(2, 2))

    def test_compositions(self):
        found = [c.entries for c in compositions_of(2, 2)]
        self.assertEqual(found, [(2, 0), (1, 1), (0, 2)])
        self.assertEqual(len(list(compositions_of(3, 3))), 10)

    def test_composition(self):
        chi = Composition.parse("1,0,3,0")
        self.assertEqual(chi.size, 4)
        self.assertEqual(chi.entry(3), 3)
        self.assertEqual(chi.trimmed(), Composition.of(1, 0, 3))
        self.assertEqual(chi.padded(5).entries, (1, 0, 3, 0, 0))

    def test_add_composition(self):
        self.assertEqual(
            add_composition(Partition.of(2, 1), (1, 0, 1)), (3, 1, 1)
        )


if __name__ == "__main__":
    unittest.main()
