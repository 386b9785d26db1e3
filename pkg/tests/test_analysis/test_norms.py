"""Tests for mixed norms and the dyadic solution norms."""

from __future__ import annotations

import math

import numpy as np
import pytest

from fourlab.analysis import Outer, mixed_norm, xn_norm, xs_norm
from fourlab.spectral import ComplexField, Projection, free_trace, lp_project, make_grid


class TestMixedNorm:
    def test_constant_field(self, constant_trace):
        expected = abs(1.5 - 2.0j) * math.sqrt(1.0 * 2 * math.pi)
        assert mixed_norm(constant_trace, "time", 2, 2) == pytest.approx(expected, rel=1e-12)

    def test_fubini(self, random_trace):
        lhs = mixed_norm(random_trace, Outer.TIME, 2, 2)
        rhs = mixed_norm(random_trace, Outer.SPACE, 2, 2)
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_infinite_exponents_are_maxima(self, random_trace):
        peak = float(np.max(np.abs(random_trace.values)))
        assert mixed_norm(random_trace, Outer.TIME, math.inf, math.inf) == pytest.approx(peak)

    @pytest.mark.parametrize("outer", ["time", "space"])
    @pytest.mark.parametrize("q,r", [(4, math.inf), (math.inf, 2), (2, 4)])
    def test_homogeneous_of_degree_one(self, random_trace, outer, q, r):
        scaled = random_trace.with_values(-3.0j * random_trace.values)
        assert mixed_norm(scaled, outer, q, r) == pytest.approx(
            3.0 * mixed_norm(random_trace, outer, q, r), rel=1e-12
        )

    @pytest.mark.parametrize("outer", ["time", "space"])
    def test_monotone_under_majorization(self, random_trace, outer):
        bigger = random_trace.with_values(random_trace.values * (1.0 + np.abs(random_trace.values)))
        for q, r in [(2, 2), (4, math.inf), (math.inf, 2)]:
            assert mixed_norm(bigger, outer, q, r) >= mixed_norm(random_trace, outer, q, r)

    def test_rejects_small_exponent(self, random_trace):
        with pytest.raises(ValueError):
            mixed_norm(random_trace, "time", 0.5, 2)

    def test_rejects_unknown_outer(self, random_trace):
        with pytest.raises(ValueError):
            mixed_norm(random_trace, "frequency", 2, 2)

    def test_strichartz_norm_stable_under_refinement(self):
        grid = make_grid(4096, 64 * math.pi)
        rng = np.random.default_rng(5)
        phi = ComplexField.from_function(
            grid, lambda x: np.exp(-x**2 / 18) * np.exp(1j * (4 + rng.uniform()) * x)
        )
        piece = lp_project(phi, Projection.shell(4))
        coarse = free_trace(piece, count=65, dt=2e-4)
        fine = free_trace(piece.on_grid(grid.refined(2)), count=65, dt=2e-4)
        a = mixed_norm(coarse, "time", 4, math.inf)
        b = mixed_norm(fine, "time", 4, math.inf)
        assert a <= b * (1 + 1e-12)
        assert a == pytest.approx(b, rel=0.03)


class TestXnNorm:
    def test_zero_trace(self, shell_trace):
        zero = shell_trace.with_values(np.zeros_like(shell_trace.values))
        breakdown = xn_norm(zero, 4.0)
        assert breakdown.weighted_total == 0.0
        assert breakdown.l4x_linft == 0.0

    def test_weighted_total_identity(self, shell_trace):
        b = xn_norm(shell_trace, 4.0, eps=0.01)
        expected = (
            b.l_inf_t_l2x
            + 2.0 * b.l4t_linfx
            + 4.0**-1.01 * b.l2x_linft
            + 4.0**-0.25 * b.l4x_linft
            + 8.0 * b.linfx_l2t
        )
        assert b.weighted_total == expected

    def test_components_scale_with_amplitude(self, shell_trace):
        a = xn_norm(shell_trace, 4.0)
        b = xn_norm(shell_trace.with_values(2.5j * shell_trace.values), 4.0)
        assert b.l4t_linfx == pytest.approx(2.5 * a.l4t_linfx, rel=1e-12)
        assert b.weighted_total == pytest.approx(2.5 * a.weighted_total, rel=1e-12)

    def test_rejects_unlocalized_trace(self, shell_trace):
        with pytest.raises(ValueError):
            xn_norm(shell_trace, 32.0)

    def test_energy_component_is_mass(self, shell_trace):
        assert xn_norm(shell_trace, 4.0).l_inf_t_l2x == pytest.approx(
            shell_trace[0].l2_norm(), rel=1e-10
        )


class TestXsNorm:
    def test_single_shell(self, shell_trace):
        single = xs_norm({4.0: shell_trace}, s=0.5)
        assert single == pytest.approx(2.0 * xn_norm(shell_trace, 4.0).weighted_total, rel=1e-12)

    def test_duplicate_shell_rejected(self, shell_trace):
        with pytest.raises(ValueError):
            xs_norm([(4.0, shell_trace), (4.0, shell_trace)], s=0.0)

    def test_non_dyadic_key_rejected(self, shell_trace):
        with pytest.raises(ValueError):
            xs_norm({3.0: shell_trace}, s=0.0)

    def test_monotone_in_regularity(self, shell_trace):
        values = [xs_norm({4.0: shell_trace}, s=s) for s in (-0.5, 0.0, 0.5, 1.0)]
        assert values == sorted(values)
