"""
Unit tests for oa_core.projections.
"""

import pytest

from oa_core.errors import HomomorphismError, StructuralError
from oa_core.lattice import Space
from oa_core.projections import (
    BooleanHom,
    OrderProjection,
    SetMapTable,
    apply_projection,
    all_subsets,
    hom_apply,
    hom_apply_projection,
    hom_check,
    support_projection,
)


@pytest.fixture
def space():
    return Space.of(["a", "b", "c"], name="S3")


class TestOrderProjection:
    """Test order projections as carriers."""

    def test_apply(self, space):
        """Test applying an order projection."""
        x = space.element([1, 2, 3])
        assert OrderProjection.of(space, ["a", "c"])(x).to_list() == ["1", "0", "3"]
        assert apply_projection(OrderProjection.identity(space), x) == x
        with pytest.raises(StructuralError, match="Space mismatch"):
            apply_projection(OrderProjection.zero(Space.range(3)), x)

    def test_algebra(self, space):
        """Test the projection algebra."""
        p = OrderProjection.of(space, ["a", "b"])
        q = OrderProjection.of(space, ["b", "c"])
        assert p.meet(q).carrier == {"b"}
        assert p.join(q) == OrderProjection.identity(space)
        assert p.complement().carrier == {"c"}
        assert p.meet(q).leq(p)
        assert not p.leq(q)
        assert OrderProjection.zero(space).leq(p)

    def test_unknown_carrier_point(self, space):
        """Test a carrier with an unknown point."""
        with pytest.raises(StructuralError):
            OrderProjection.of(space, ["z"])

    def test_support_projection(self, space):
        """Test the support projection."""
        x = space.element([0, -1, 2])
        assert support_projection(x).sorted_carrier() == ["b", "c"]


class TestBooleanHom:
    """Test homomorphisms given by point maps."""

    def test_preimage_action(self, space):
        """Test the preimage action of a point map."""
        target = Space.of([1, 2], name="T2")
        h = BooleanHom.from_mapping(space, target, {1: "a", 2: "a"})
        assert hom_apply(h, ["a"]) == {1, 2}
        assert hom_apply(h, ["b", "c"]) == frozenset()
        projected = hom_apply_projection(h, OrderProjection.of(space, ["a"]))
        assert projected == OrderProjection.identity(target)

    def test_point_map_must_be_total(self, space):
        """Test that the point map must be total."""
        with pytest.raises(HomomorphismError, match="not total"):
            BooleanHom.from_mapping(space, space, {"a": "a"})

    def test_point_map_unknown_source(self, space):
        """Test a point map into unknown source points."""
        with pytest.raises(HomomorphismError, match="unknown source"):
            BooleanHom.from_mapping(space, space, {"a": "z", "b": "b", "c": "c"})

    def test_axioms_hold_for_point_maps(self, space):
        """Test the homomorphism axioms for point maps."""
        h = BooleanHom.from_mapping(space, space, {"a": "b", "b": "b", "c": "a"})
        report = hom_check(h)
        assert report.passed and report.exhaustive
        assert report.checked_pairs == 64

    def test_table_round_trip(self, space):
        """Test building a homomorphism from its table."""
        h = BooleanHom.from_mapping(space, space, {"a": "c", "b": "a", "c": "b"})
        assert BooleanHom.from_table(SetMapTable.from_hom(h)) == h

    def test_rejects_non_homomorphism_table(self, space):
        """Test rejection of a table that is not a homomorphism."""
        mapping = {a: a for a in all_subsets(space.points)}
        mapping[frozenset(["a", "b"])] = frozenset(["a"])
        table = SetMapTable.of(space, space, mapping)
        report = hom_check(table)
        assert not report.passed
        assert not report.axioms["union"]
        with pytest.raises(HomomorphismError):
            BooleanHom.from_table(table)

    def test_incomplete_table(self, space):
        """Test an incomplete table."""
        table = SetMapTable.of(space, space, {(): ()})
        assert not hom_check(table).passed

    def test_inverse_of_bijection(self, space):
        """Test the inverse of a bijective homomorphism."""
        h = BooleanHom.from_mapping(space, space, {"a": "b", "b": "c", "c": "a"})
        inv = h.inverse()
        assert h.compose(inv) == BooleanHom.identity(space)
        assert inv.compose(h) == BooleanHom.identity(space)

    def test_inverse_needs_bijection(self, space):
        """Test that the inverse needs a bijection."""
        h = BooleanHom.from_mapping(space, space, {"a": "a", "b": "a", "c": "a"})
        assert not h.is_isomorphism()
        with pytest.raises(HomomorphismError):
            h.inverse()

    def test_sampled_check_beyond_cap(self):
        """Test the sampled axiom check beyond the cap."""
        big = Space.range(8)
        report = hom_check(BooleanHom.identity(big), cap=6, samples=30)
        assert report.passed
        assert not report.exhaustive
        assert report.checked_pairs == 30
