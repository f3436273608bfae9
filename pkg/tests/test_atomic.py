"""
Unit tests for oa_core.atomic: atomicity, pointwise lattice operations and
the band projection.
"""

import random

import pytest
from hypothesis import given, settings

from oa_core.atomic import (
    atomic_complement,
    atomic_consequences_check,
    band_projection,
    band_projection_properties,
    ideal_property_check,
    is_atomic,
    masked_operator,
    partition_table,
    partition_value,
    pointwise_lattice_op,
    subordinate_hom,
)
from oa_core.errors import EnumerationCapError, NotAtomicError, PositivityError, StructuralError
from oa_core.lattice import Space
from oa_core.operators import KernelOperator, diagonal_operator, eval_op, oracle_search, sample_disjoint_pairs
from oa_core.projections import BooleanHom
from oa_core.validation import random_atomic_operator, random_hom, random_operator

from strategies import elements_of, nonnegative_elements_of, seeds

P4 = Space.range(4, name="P4")


class TestAtomicity:
    """Test the atomicity decision."""

    def test_shift_composition_is_atomic(self, z4_workspace):
        """Test that a superposition through a shift is atomic."""
        T = z4_workspace.operator("T")
        report = is_atomic(T, z4_workspace.hom("shift1"))
        assert report.verdict
        assert report.checked == len(T.entries)

    def test_witness_for_wrong_hom(self, z4_workspace):
        """Test the witness reported for the wrong homomorphism."""
        T = z4_workspace.operator("T")
        report = is_atomic(T, z4_workspace.hom("id"))
        assert not report.verdict
        w = report.witnesses[0]
        assert w.left != w.right
        assert len(w.carrier) == 1

    def test_full_mode_agrees(self, z4_workspace):
        """Test that full mode agrees with the singleton check."""
        T = z4_workspace.operator("T")
        assert is_atomic(T, z4_workspace.hom("shift1"), mode="full").verdict
        assert not is_atomic(T, z4_workspace.hom("id"), mode="full").verdict

    def test_full_mode_cap(self):
        """Test the full-mode support cap."""
        space = Space.range(7)
        T = diagonal_operator(space, "r")
        with pytest.raises(EnumerationCapError):
            is_atomic(T, BooleanHom.identity(space), mode="full", full_cap=6)

    def test_hom_must_match_operator(self, z4_workspace):
        """Test space mismatch between homomorphism and operator."""
        with pytest.raises(StructuralError, match="Homomorphism must map"):
            is_atomic(z4_workspace.operator("T"), BooleanHom.identity(P4))

    def test_entry_vanishing_on_grid_is_ignored(self):
        """Test that entries vanishing on the grid do not break atomicity."""
        # max(r, 0) + min(r, 0) - r is identically zero but not a zero literal
        T = KernelOperator.from_table(P4, P4, {0: {1: "max(r, 0) + min(r, 0) - r"}, 1: {1: "r"}})
        h = BooleanHom.from_mapping(P4, P4, {0: 0, 1: 1, 2: 2, 3: 3})
        assert is_atomic(T, h).verdict

    def test_subordinate_hom_detection(self, coordinate_pair):
        """Test detection of a subordinate homomorphism."""
        T, S = coordinate_pair
        assert subordinate_hom(T).phi("1") == "1"
        assert subordinate_hom(S).phi("1") == "2"
        assert subordinate_hom(T, S) is None

    @settings(max_examples=25)
    @given(seeds())
    def test_modes_agree_on_random_operators(self, seed):
        """Test that both modes agree on random operators."""
        rng = random.Random(seed)
        space = Space.range(rng.randint(1, 4))
        h = random_hom(rng, space)
        T = random_atomic_operator(rng, h) if rng.random() < 0.5 else random_operator(rng, space)
        single = is_atomic(T, h).verdict
        full = is_atomic(T, h, mode="full", samples=5, rng=rng).verdict
        assert single == full

    @settings(max_examples=40)
    @given(seeds())
    def test_consequences_of_atomicity(self, seed):
        """Test disjointness and fragment preservation."""
        rng = random.Random(seed)
        h = random_hom(rng, P4)
        T = random_atomic_operator(rng, h)
        report = atomic_consequences_check(T, sample_disjoint_pairs(P4, 20, rng),
                                           [P4.element([1, -2, "1/2", 3])])
        assert report.passed

    def test_ideal_property(self):
        """Test that operators dominated by an atomic operator are atomic."""
        h = BooleanHom.identity(P4)
        T = diagonal_operator(P4, "pow(r, 2)")
        report = ideal_property_check(T, T.scale("1/2"), h)
        assert report.hypothesis_holds and report.t_atomic and report.s_atomic
        assert report.passed


class TestPointwiseLattice:
    """Test pointwise lattice operations against the oracle."""

    @settings(max_examples=60)
    @given(seeds(), elements_of(P4))
    def test_pointwise_matches_oracle(self, seed, x):
        """Test pointwise formulas against the oracle."""
        rng = random.Random(seed)
        h = random_hom(rng, P4)
        T, S = random_atomic_operator(rng, h), random_atomic_operator(rng, h)
        for kind in ("join", "meet"):
            assert eval_op(pointwise_lattice_op(kind, T, S, h), x) == oracle_search(kind, T, S, x).value
        for kind in ("pos", "neg", "mod"):
            assert eval_op(pointwise_lattice_op(kind, T, None, h), x) == oracle_search(kind, T, None, x).value

    def test_derives_common_hom(self, z4_workspace):
        """Test that a common homomorphism is derived when none is given."""
        T, L = z4_workspace.operator("T"), z4_workspace.operator("L")
        x = z4_workspace.elements["x"]
        joined = pointwise_lattice_op("join", T, L)
        assert eval_op(joined, x) == oracle_search("join", T, L, x).value

    def test_refuses_operators_without_common_hom(self, coordinate_pair):
        """Test refusal when no common homomorphism exists."""
        T, S = coordinate_pair
        with pytest.raises(NotAtomicError):
            pointwise_lattice_op("join", T, S)

    def test_refuses_non_atomic_operator_for_given_hom(self, square_operator):
        """Test refusal for an operator that is not atomic."""
        h = BooleanHom.identity(square_operator.source)
        with pytest.raises(NotAtomicError) as info:
            pointwise_lattice_op("pos", square_operator, None, h)
        assert info.value.witness is not None


class TestBandProjection:
    """Test the band projection onto the atomic band."""

    def test_masks_to_graph(self, square_operator):
        """Test that the band projection keeps only graph entries."""
        h = BooleanHom.identity(square_operator.source)
        R = band_projection(square_operator, h)
        assert R == masked_operator(square_operator, h)
        assert R.to_table() == {"a": {"a": "pow(r, 2)"}, "b": {"b": "pow(r, 2)"}}
        assert R + atomic_complement(square_operator, h) == square_operator

    def test_singleton_partition_attains_minimum(self, square_operator):
        """Test that the singleton partition attains the minimum."""
        h = BooleanHom.identity(square_operator.source)
        x = square_operator.source.element([1, 2])
        table = partition_table(square_operator, h, [x], detail=True)
        assert table.partitions == 2
        row = table.rows[0]
        assert row.agrees
        assert row.minimum.to_list() == ["1", "4"]
        assert (("a",), ("b",)) in row.minimizers
        assert partition_value(square_operator, h, (("a", "b"),), x).to_list() == ["5", "5"]

    def test_requires_positive_operator(self):
        """Test that band projection needs a positive operator."""
        with pytest.raises(PositivityError):
            band_projection(diagonal_operator(P4, "r"), BooleanHom.identity(P4))

    def test_brute_mode(self, square_operator):
        """Test the brute-force partition mode."""
        h = BooleanHom.identity(square_operator.source)
        assert band_projection(square_operator, h, mode="brute") == band_projection(square_operator, h)

    def test_partition_cap(self):
        """Test the partition cap."""
        space = Space.range(7)
        T = diagonal_operator(space, "abs(r)")
        with pytest.raises(EnumerationCapError):
            partition_table(T, BooleanHom.identity(space), [space.constant(1)], partition_cap=6)

    @settings(max_examples=30)
    @given(seeds(), nonnegative_elements_of(P4))
    def test_closed_form_matches_partition_minimum(self, seed, x):
        """Test the closed form against the partition minimum."""
        rng = random.Random(seed)
        h = random_hom(rng, P4)
        T = random_operator(rng, P4, positive=True, density=0.6)
        assert partition_table(T, h, [x]).agrees

    @settings(max_examples=20)
    @given(seeds())
    def test_band_properties(self, seed):
        """Test the band projection laws."""
        rng = random.Random(seed)
        h = random_hom(rng, P4)
        T1 = random_operator(rng, P4, positive=True)
        T2 = random_atomic_operator(rng, h, positive=True)
        report = band_projection_properties(T1, T2, h, samples=10, rng=rng)
        assert report.passed, report.failures
