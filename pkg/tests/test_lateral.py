"""
Unit tests for oa_core.lateral: lateral ideals and the minimal extension.
"""

import random

import pytest
from hypothesis import given, settings

from oa_core.errors import LateralIdealError, PositivityError, StructuralError
from oa_core.lateral import (
    IdealKind,
    LateralIdeal,
    MinimalExtension,
    PartialMap,
    extension_atomic_check,
    extension_chain_report,
    extension_properties,
    ideal_contains,
    minimal_extension,
)
from oa_core.lattice import Space
from oa_core.operators import KernelOperator, diagonal_operator, eval_op
from oa_core.projections import BooleanHom
from oa_core.validation import random_atomic_operator, random_hom, random_ideal

from strategies import seeds

E2 = Space.of(["1", "2"], name="E2")
F1 = Space.of(["1"], name="F1")
P3 = Space.range(3, name="P3")
KINDS = ["order_ideal", "fragment_set", "operator_kernel", "explicit"]


@pytest.fixture
def three_abs():
    """T(x) = 3|x_1| into one point."""
    return KernelOperator.from_table(E2, F1, {"1": {"1": "3 * abs(r)"}}, name="T")


class TestLateralIdeal:
    """Test the four ideal kinds."""

    def test_fragment_set(self):
        """Test the fragment-set ideal."""
        u = E2.element([1, 0])
        D = LateralIdeal.fragment_set(u)
        assert D.kind is IdealKind.FRAGMENT_SET
        assert D.is_finite()
        assert set(D.members()) == {E2.zero(), u}
        assert u in D
        assert E2.element([2, 0]) not in D

    def test_order_ideal(self):
        """Test the order ideal generated by an element."""
        D = LateralIdeal.order_ideal(P3, [P3.element([1, 0, -2])])
        assert P3.element([5, 0, "1/3"]) in D
        assert P3.element([0, 1, 0]) not in D
        assert ideal_contains(D, P3.element([-1, 0, 0]))
        assert D.bound_constant(P3.element([3, 0, 0])) == 3

    def test_operator_kernel(self):
        """Test the kernel of a positive operator."""
        K = diagonal_operator(E2, "max(r, 0)")
        D = LateralIdeal.operator_kernel(K)
        assert E2.element([-1, -5]) in D
        assert E2.element([1, 0]) not in D
        assert all(eval_op(K, y).is_zero() for y in D.sample_members(random.Random(0), 20))

    def test_operator_kernel_needs_positive_operator(self):
        """Test that an operator kernel ideal needs a positive operator."""
        with pytest.raises(LateralIdealError, match="positive"):
            LateralIdeal.operator_kernel(diagonal_operator(E2, "r"))

    def test_explicit_empty_ideal(self):
        """Test the empty explicit ideal."""
        D = LateralIdeal.explicit(E2, [])
        assert D.members() == ()
        assert E2.zero() not in D
        assert D.sample_members(random.Random(0), 5) == []
        assert D.axioms_report().passed

    def test_explicit_ideal_axioms_are_enforced(self):
        """Test that explicit members must satisfy the ideal axioms."""
        x = E2.element([1, 1])
        with pytest.raises(LateralIdealError, match="fragment closure"):
            LateralIdeal.explicit(E2, [x])
        members = [E2.zero(), E2.element([1, 0]), E2.element([0, 1])]
        with pytest.raises(LateralIdealError, match="disjoint sums"):
            LateralIdeal.explicit(E2, members)
        assert LateralIdeal.explicit(E2, members + [x]).axioms_report().exhaustive

    def test_space_mismatch(self):
        """Test membership of an element from another space."""
        with pytest.raises(StructuralError):
            LateralIdeal.order_ideal(E2, [P3.zero()])

    @settings(max_examples=30)
    @given(seeds())
    def test_random_ideals_satisfy_axioms(self, seed):
        """Test the axioms on random ideals."""
        rng = random.Random(seed)
        for kind in KINDS:
            D = random_ideal(rng, P3, kind)
            assert D.axioms_report(samples=20, rng=rng).passed, kind


class TestMinimalExtension:
    """Test T̃(x) = sup{Ty : y ∈ F_x ∩ D}."""

    def test_fragment_domain(self, three_abs):
        """Test extension from a fragment-set domain."""
        D = LateralIdeal.fragment_set(E2.element([1, 0]))
        T = PartialMap.from_operator(three_abs, D)
        assert minimal_extension(T, E2.element([1, 5])).to_list() == ["3"]
        assert minimal_extension(T, E2.element([2, 5])).to_list() == ["0"]

    def test_order_ideal_domain(self, three_abs):
        """Test extension from an order ideal."""
        D = LateralIdeal.order_ideal(E2, [E2.element([1, 0])])
        T = PartialMap.from_operator(three_abs, D)
        assert minimal_extension(T, E2.element([2, 5])).to_list() == ["6"]

    def test_operator_kernel_domain(self, three_abs):
        """Test extension from an operator kernel."""
        D = LateralIdeal.operator_kernel(diagonal_operator(E2, "max(r, 0)"))
        T = PartialMap.from_operator(three_abs, D)
        assert minimal_extension(T, E2.element([-1, 4])).to_list() == ["3"]

    def test_empty_domain_extends_by_zero(self, three_abs):
        """Test that the empty domain extends by zero."""
        T = PartialMap.from_operator(three_abs, LateralIdeal.explicit(E2, []))
        assert minimal_extension(T, E2.element([1, 1])).is_zero()

    def test_partial_map_must_be_positive(self):
        """Test that negative partial maps are rejected."""
        D = LateralIdeal.fragment_set(E2.element([-1, 0]))
        T = KernelOperator.from_table(E2, F1, {"1": {"1": "r"}})
        with pytest.raises(PositivityError):
            PartialMap.from_operator(T, D)

    def test_non_positive_map_has_no_minimal_extension(self):
        """Test that a non-positive map has no minimal extension."""
        D = LateralIdeal.fragment_set(E2.element([1, 0]))
        T = KernelOperator.from_table(E2, F1, {"1": {"1": "r"}})
        partial = PartialMap.from_operator(T, D, positive=False)
        with pytest.raises(PositivityError):
            minimal_extension(partial, E2.element([1, 0]))

    def test_partial_map_outside_domain(self, three_abs):
        """Test evaluating a partial map outside its domain."""
        T = PartialMap.from_operator(three_abs, LateralIdeal.fragment_set(E2.element([1, 0])))
        with pytest.raises(StructuralError, match="outside the domain"):
            T(E2.element([0, 1]))

    def test_from_values(self):
        """Test a partial map given member by member."""
        u = E2.element([1, 1])
        D = LateralIdeal.fragment_set(u)
        values = {u: F1.element([2]), E2.element([1, 0]): F1.element([1]), E2.element([0, 1]): F1.element([1])}
        T = PartialMap.from_values(D, F1, values)
        assert MinimalExtension(T)(E2.element([1, 1])).to_list() == ["2"]

    def test_chain_report(self, three_abs):
        """Test extension values along a fragment chain."""
        D = LateralIdeal.order_ideal(E2, [E2.element([1, 0])])
        T = PartialMap.from_operator(three_abs, D)
        report = extension_chain_report(T, E2.element([2, 5]))
        assert report.monotone and report.stabilizes
        assert [v.to_list() for v in report.values] == [["0"], ["6"], ["6"]]

    @settings(max_examples=15)
    @given(seeds())
    def test_extension_properties_per_kind(self, seed):
        """Test extension laws for each ideal kind."""
        rng = random.Random(seed)
        h = random_hom(rng, P3)
        T = random_atomic_operator(rng, h, positive=True)
        for kind in KINDS:
            partial = PartialMap.from_operator(T, random_ideal(rng, P3, kind), samples=10, rng=rng)
            report = extension_properties(partial, samples=10, pairs=30, rng=rng)
            assert report.passed, (kind, report.failures)
            assert extension_atomic_check(partial, h, samples=10, rng=rng).passed, kind

    def test_atomic_check_rejects_non_atomic_map(self):
        """Test that the atomic check rejects a non-atomic map."""
        D = LateralIdeal.fragment_set(E2.element([1, 1]))
        T = KernelOperator.from_table(E2, E2, {"1": {"2": "abs(r)"}, "2": {"2": "abs(r)"}})
        partial = PartialMap.from_operator(T, D)
        report = extension_atomic_check(partial, BooleanHom.identity(E2))
        assert not report.precondition_holds
        assert not report.passed
