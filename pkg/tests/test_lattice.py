"""
Unit tests for oa_core.lattice: spaces, elements and fragments.
"""

from fractions import Fraction

import pytest
from hypothesis import given

from oa_core.errors import EnumerationCapError, NotAFragmentError, StructuralError
from oa_core.lattice import (
    Space,
    fragment_algebra_report,
    fragment_bool_op,
    fragment_chain,
    fragments,
    is_disjoint,
    is_fragment,
    is_lateral_chain,
    join,
    lattice_op,
    meet,
)
from oa_core.utils import bell_number, format_rational, set_partitions, to_rational

from strategies import elements_of

SPACE = Space.range(4, name="S4")


class TestSpace:
    """Test space construction."""

    def test_unit_weights_by_default(self):
        """Test default unit weights."""
        space = Space.range(3)
        assert space.weight == (1, 1, 1)
        assert space.finite_weight == space.weight

    def test_weights_from_mappings(self):
        """Test weights given as mappings."""
        space = Space.of(["a", "b"], weight={"a": 2, "b": "1/3"})
        assert space.weight == (Fraction(2), Fraction(1, 3))
        assert space.finite_weight == space.weight

    def test_rejects_empty_space(self):
        """Test rejection of an empty space."""
        with pytest.raises(StructuralError):
            Space(())

    def test_rejects_duplicate_points(self):
        """Test rejection of duplicate points."""
        with pytest.raises(StructuralError, match="Duplicate"):
            Space(("a", "a"))

    def test_rejects_nonpositive_weight(self):
        """Test rejection of nonpositive weights."""
        with pytest.raises(StructuralError, match="strictly positive"):
            Space.of(["a", "b"], weight={"a": 1, "b": 0})

    def test_element_from_list_and_mapping(self):
        """Test building elements from lists and mappings."""
        space = Space.of(["a", "b", "c"])
        assert space.element([1, "1/2", 0]) == space.element({"a": 1, "b": "1/2"})

    def test_element_length_mismatch(self):
        """Test an element with the wrong number of values."""
        with pytest.raises(StructuralError, match="3 points"):
            Space.range(3).element([1, 2])

    def test_element_unknown_point(self):
        """Test an element naming an unknown point."""
        with pytest.raises(StructuralError, match="Unknown points"):
            Space.of(["a"]).element({"b": 1})


class TestElementOperations:
    """Test coordinatewise lattice operations."""

    def test_join_meet_parts(self):
        """Test join, meet and the positive and negative parts."""
        x = SPACE.element([1, -2, 0, "1/2"])
        y = SPACE.element([0, 3, -1, "1/3"])
        assert join(x, y).to_list() == ["1", "3", "0", "1/2"]
        assert meet(x, y).to_list() == ["0", "-2", "-1", "1/3"]
        assert lattice_op("pos", x).to_list() == ["1", "0", "0", "1/2"]
        assert lattice_op("neg", x).to_list() == ["0", "2", "0", "0"]
        assert lattice_op("abs", x).to_list() == ["1", "2", "0", "1/2"]

    def test_unary_rejects_second_element(self):
        """Test that unary operations reject a second element."""
        x = SPACE.zero()
        with pytest.raises(StructuralError):
            lattice_op("abs", x, x)

    def test_space_mismatch(self):
        """Test operations on elements of different spaces."""
        with pytest.raises(StructuralError, match="Space mismatch"):
            SPACE.zero() + Space.range(3).zero()

    def test_disjointness(self):
        """Test disjointness of elements."""
        assert is_disjoint(SPACE.unit(0), SPACE.unit(1, -3))
        assert not is_disjoint(SPACE.unit(0), SPACE.constant(1))

    @given(elements_of(SPACE), elements_of(SPACE))
    def test_lattice_identities(self, x, y):
        """Test lattice identities on random elements."""
        assert join(x, y) + meet(x, y) == x + y
        assert lattice_op("pos", x) - lattice_op("neg", x) == x
        assert lattice_op("abs", x) == lattice_op("pos", x) + lattice_op("neg", x)
        assert is_disjoint(lattice_op("pos", x), lattice_op("neg", x))


class TestFragments:
    """Test fragments and the Boolean algebra F_x."""

    def test_fragments_are_restrictions(self):
        """Test that fragments are restrictions to support subsets."""
        x = SPACE.element([1, 0, -2, 3])
        frags = fragments(x)
        assert len(frags) == 8
        assert frags[0].is_zero()
        assert frags[-1] == x
        assert all(is_fragment(f, x) for f in frags)

    def test_non_fragment(self):
        """Test the fragment relation on a non-fragment."""
        x = SPACE.element([2, 0, 0, 0])
        assert not is_fragment(SPACE.element([1, 0, 0, 0]), x)

    def test_cap_is_enforced(self):
        """Test the fragment support cap."""
        x = Space.range(5).constant(1)
        with pytest.raises(EnumerationCapError, match="exceeds the configured cap 3"):
            fragments(x, cap=3)

    def test_boolean_operations(self):
        """Test Boolean operations on fragments."""
        x = SPACE.element([1, -2, 3, 0])
        z = x.restrict([0, 1])
        y = x.restrict([1, 2])
        assert fragment_bool_op("union", x, z, y) == x
        assert fragment_bool_op("intersect", x, z, y) == x.restrict([1])
        assert fragment_bool_op("complement", x, z) == x.restrict([2])

    def test_boolean_operation_rejects_non_fragment(self):
        """Test Boolean operations on a non-fragment."""
        x = SPACE.element([1, 1, 0, 0])
        with pytest.raises(NotAFragmentError):
            fragment_bool_op("complement", x, SPACE.element([2, 0, 0, 0]))

    @given(elements_of(SPACE))
    def test_fragment_algebra(self, x):
        """Test the fragment algebra report."""
        report = fragment_algebra_report(x)
        assert report.passed, report.failures
        assert report.fragment_count == 2 ** report.support_size

    def test_algebra_of_eight_point_support(self):
        """Test the fragment algebra on an eight-point support."""
        x = Space.range(8).element([1, -1, 2, "1/2", -3, 4, "-2/3", 5])
        report = fragment_algebra_report(x)
        assert report.passed
        assert report.fragment_count == 256

    def test_chain_is_lateral(self):
        """Test that the fragment chain increases laterally."""
        x = SPACE.element([1, 0, -2, 3])
        chain = fragment_chain(x)
        assert chain[0].is_zero() and chain[-1] == x
        assert is_lateral_chain(chain)

    def test_non_lateral_sequence(self):
        """Test a sequence that is not lateral."""
        assert not is_lateral_chain([SPACE.unit(0), SPACE.unit(0, 2)])


class TestUtilities:
    """Test rationals and partitions."""

    @pytest.mark.parametrize("value,expected", [
        (3, Fraction(3)), ("1/2", Fraction(1, 2)), (" -2/4 ", Fraction(-1, 2)), (0.1, Fraction(1, 10)),
    ])
    def test_to_rational(self, value, expected):
        """Test rational parsing."""
        assert to_rational(value) == expected

    @pytest.mark.parametrize("value", [True, "1/0", "abc", None, float("inf"), float("-inf"), float("nan")])
    def test_to_rational_rejects(self, value):
        """Test rejection of values that are not finite rationals."""
        with pytest.raises(StructuralError):
            to_rational(value)

    def test_format_rational(self):
        """Test rational formatting."""
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-1, 3)) == "-1/3"

    @pytest.mark.parametrize("n", range(0, 7))
    def test_partition_counts(self, n):
        """Test that partition counts are Bell numbers."""
        partitions = list(set_partitions(list(range(n))))
        assert len(partitions) == bell_number(n)
        assert len(set(partitions)) == len(partitions)

    def test_partitions_cover_items(self):
        """Test that every partition covers the items."""
        for p in set_partitions("abc"):
            assert sorted(x for block in p for x in block) == ["a", "b", "c"]
