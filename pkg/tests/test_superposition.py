"""
Unit tests for oa_core.superposition.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from oa_core.errors import HomomorphismError, NotAtomicError, StructuralError
from oa_core.lattice import Space
from oa_core.operators import equal_on_grid, eval_op
from oa_core.projections import BooleanHom
from oa_core.superposition import (
    ShiftOperator,
    SuperpositionKernel,
    compose_superposition,
    deviation_measure,
    factor_atomic,
    rho_along,
    rho_metric,
    rho_on,
    shift_apply,
    superpose,
    verify_factorization,
)
from oa_core.validation import random_hom, random_superposition_kernel

from strategies import elements_of, seeds

P3 = Space.range(3, name="P3")


class TestSuperpositionKernel:
    """Test superposition kernels."""

    def test_superpose(self):
        """Test the superposition operator."""
        N = SuperpositionKernel.from_mapping(P3, {0: "pow(r, 2)", 2: "abs(r)"})
        f = P3.element([-2, 5, -3])
        assert superpose(N, f).to_list() == ["4", "0", "3"]
        assert N(f) == eval_op(N.as_operator(), f)

    def test_rejects_unnormalised_kernel(self):
        """Test rejection of a kernel with N(t, 0) != 0."""
        with pytest.raises(StructuralError, match="not normalised"):
            SuperpositionKernel.uniform(P3, "abs(r) + 1")

    def test_rejects_wrong_length(self):
        """Test a kernel with the wrong number of expressions."""
        with pytest.raises(StructuralError):
            SuperpositionKernel(P3, ("r",))

    def test_continuity_report(self):
        """Test the continuity report."""
        smooth = SuperpositionKernel.uniform(P3, "div(r, 1 + abs(r))")
        assert smooth.check_conditions().passed
        jumpy = SuperpositionKernel.from_mapping(P3, {1: "ifzero(r, 0, div(1, pow(r, 2)))"})
        report = jumpy.check_conditions()
        assert report.vanishes_at_zero
        assert report.flagged == [1]
        assert report.max_jumps[1] > 1000

    def test_undefined_points_are_reported(self):
        """Test that undefined grid points are reported."""
        # defined at 0 by the ifzero guard but not at r = 1
        N = SuperpositionKernel.uniform(Space.range(1), "ifzero(r, 0, div(1, r - 1))")
        report = N.check_conditions()
        assert report.undefined == {0: Fraction(1)}
        assert not report.passed


class TestShift:
    """Test shift operators."""

    def test_shift_reads_through_point_map(self):
        """Test that the shift reads through the point map."""
        h = BooleanHom.from_mapping(P3, P3, {0: 1, 1: 2, 2: 0})
        f = P3.element([10, 20, 30])
        assert shift_apply(ShiftOperator(h), f).to_list() == ["20", "30", "10"]

    def test_inverse(self):
        """Test the inverse shift."""
        h = BooleanHom.from_mapping(P3, P3, {0: 1, 1: 2, 2: 0})
        S = ShiftOperator(h)
        f = P3.element([1, "-1/2", 3])
        assert S.inverse()(S(f)) == f
        assert S(S.inverse()(f)) == f

    def test_non_invertible_shift(self):
        """Test the inverse of a non-invertible shift."""
        h = BooleanHom.from_mapping(P3, P3, {0: 0, 1: 0, 2: 0})
        assert not ShiftOperator(h).is_invertible()
        with pytest.raises(HomomorphismError):
            ShiftOperator(h).inverse()

    @given(seeds(), elements_of(P3))
    def test_shift_as_linear_operator(self, seed, f):
        """Test the shift as a kernel operator."""
        S = ShiftOperator(random_hom(random.Random(seed), P3))
        assert eval_op(S.as_operator(), f) == S(f)


class TestFactorization:
    """Test T = T_N ∘ S_Phi."""

    def test_z4_factorisation(self, z4_workspace):
        """Test factorisation through the cyclic shift."""
        T, h = z4_workspace.operator("T"), z4_workspace.hom("shift1")
        N = factor_atomic(T, h)
        assert N.to_table() == {"0": "r", "1": "pow(r, 2)", "2": "abs(r)", "3": "max(r, 0)"}
        assert verify_factorization(T, h, N, samples=20).passed

    def test_requires_bijection(self, z4_workspace):
        """Test that factorisation needs a bijection."""
        space = z4_workspace.space("Z4")
        constant = BooleanHom.from_mapping(space, space, {p: "0" for p in space.points})
        with pytest.raises(HomomorphismError, match="bijective"):
            factor_atomic(z4_workspace.operator("T"), constant)

    def test_requires_atomic_operator(self, z4_workspace):
        """Test that factorisation needs an atomic operator."""
        with pytest.raises(NotAtomicError):
            factor_atomic(z4_workspace.operator("T"), z4_workspace.hom("id"))

    def test_wrong_kernel_is_caught(self, z4_workspace):
        """Test that a wrong kernel fails verification."""
        T, h = z4_workspace.operator("T"), z4_workspace.hom("shift1")
        wrong = SuperpositionKernel.uniform(h.target_space, "r")
        report = verify_factorization(T, h, wrong, samples=10)
        assert not report.passed
        assert not report.kernel_recovered

    @settings(max_examples=40)
    @given(seeds())
    def test_factor_round_trip(self, seed):
        """Test factoring a composed superposition."""
        rng = random.Random(seed)
        h = random_hom(rng, P3, bijective=True)
        N = random_superposition_kernel(rng, P3)
        T = compose_superposition(N, h)
        recovered = factor_atomic(T, h)
        assert equal_on_grid(compose_superposition(recovered, h), T)
        assert verify_factorization(T, h, recovered, samples=10, rng=rng).passed


class TestMetric:
    """Test the metric of convergence in measure."""

    def test_values(self):
        """Test metric values."""
        f = P3.element([1, 0, 0])
        g = P3.element([0, 0, 3])
        assert rho_metric(f, g) == Fraction(1, 2) + Fraction(3, 4)
        assert rho_on(f, g, [0]) == Fraction(1, 2)
        assert deviation_measure(f, g, Fraction(1, 2)) == 2
        assert deviation_measure(f, g, 1) == 1

    def test_finite_weight(self):
        """Test the metric under a finite weight."""
        space = Space.of(["a", "b"], weight={"a": 1, "b": 1}, finite_weight={"a": "1/2", "b": "1/4"})
        f = space.element([1, 1])
        assert rho_metric(f, space.zero()) == Fraction(1, 4) + Fraction(1, 8)
        assert rho_on(f, space.zero()) == 1

    def test_unknown_carrier(self):
        """Test a carrier with an unknown point."""
        with pytest.raises(StructuralError):
            rho_on(P3.zero(), P3.zero(), ["z"])

    @given(elements_of(P3), elements_of(P3), elements_of(P3))
    def test_metric_axioms(self, f, g, h):
        """Test the metric axioms."""
        assert rho_metric(f, f) == 0
        assert (rho_metric(f, g) == 0) == (f == g)
        assert rho_metric(f, g) == rho_metric(g, f)
        assert rho_metric(f, h) <= rho_metric(f, g) + rho_metric(g, h)

    def test_rho_along_stabilising_sequence(self, z4_workspace):
        """Test the metric along a stabilising sequence."""
        T = z4_workspace.operator("T")
        x = z4_workspace.elements["x"]
        chain = [x.restrict(list(x.space.points)[:k]) for k in range(5)]
        distances = rho_along(lambda f: eval_op(T, f), chain, x)
        assert distances[-1] == 0
        assert distances[0] > 0
