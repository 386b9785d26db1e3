"""Tests for Fourier multipliers, Littlewood-Paley projections and Sobolev norms."""

from __future__ import annotations

import math

import numpy as np
import pytest

from fourlab.spectral import (
    BRIDGE,
    SHARP,
    SMOOTH,
    BumpKind,
    BumpProfile,
    ComplexField,
    Projection,
    ResolutionError,
    Symbol,
    fourier_multiplier,
    lp_norm,
    lp_project,
    make_grid,
    resolvable_shells,
    sobolev_norm,
)


class TestBumpProfile:
    @pytest.mark.parametrize("kind", list(BumpKind))
    def test_plateaus(self, kind):
        bump = BumpProfile(kind)
        r = np.linspace(-1.0, 1.0, 41)
        np.testing.assert_array_equal(bump(r), 1.0)
        np.testing.assert_array_equal(bump(np.array([2.0, 2.5, -3.0])), 0.0)

    @pytest.mark.parametrize("kind", list(BumpKind))
    def test_bounded_and_even(self, kind):
        bump = BumpProfile(kind)
        r = np.linspace(0.0, 3.0, 301)
        values = bump(r)
        assert values.min() >= 0.0 and values.max() <= 1.0
        np.testing.assert_array_equal(values, bump(-r))

    def test_shell_weight_is_one_at_scale(self):
        assert float(SMOOTH.shell(8.0, 8.0)) == pytest.approx(1.0)

    def test_smooth_profile_is_monotone(self):
        values = SMOOTH(np.linspace(1.0, 2.0, 201))
        assert np.all(np.diff(values) <= 0.0)

    def test_bridge_profile_values(self):
        assert float(BRIDGE(1.5)) == pytest.approx(math.exp(-1.0 / 3.0))
        values = BRIDGE(np.linspace(1.0, 2.0, 201))
        assert np.all(np.diff(values) <= 0.0)

    def test_bridge_is_flat_where_it_leaves_one(self):
        # first derivative vanishes at |r| = 1, second does not
        h = 1e-4
        slope = (BRIDGE(1.0 + h) - BRIDGE(1.0)) / h
        assert abs(float(slope)) < 1e-3
        curvature = (BRIDGE(1.0 + 2 * h) - 2 * BRIDGE(1.0 + h) + BRIDGE(1.0)) / h**2
        assert float(curvature) == pytest.approx(-2.0, rel=1e-2)


class TestFourierMultiplier:
    def test_derivative_of_plane_wave(self, unit_grid):
        wave = ComplexField.plane_wave(unit_grid, 3.0)
        out = fourier_multiplier(wave, Symbol.deriv(1))
        np.testing.assert_allclose(out.values, 3j * wave.values, atol=1e-12)

    def test_inhomogeneous_order_zero_is_identity(self, band_limited):
        out = fourier_multiplier(band_limited, Symbol.frac_inhomog(0.0))
        np.testing.assert_allclose(out.values, band_limited.values, atol=1e-12)

    def test_negative_homogeneous_power(self, unit_grid):
        wave = ComplexField.plane_wave(unit_grid, 4.0)
        out = fourier_multiplier(wave, Symbol.frac_homog(-0.25))
        np.testing.assert_allclose(out.values, 4.0**-0.25 * wave.values, atol=1e-12)

    def test_homogeneous_symbol_kills_mean(self, unit_grid):
        constant = ComplexField(unit_grid, np.full(unit_grid.n, 2.0 + 0j))
        out = fourier_multiplier(constant, Symbol.frac_homog(-0.5))
        np.testing.assert_allclose(out.values, 0.0, atol=1e-14)

    def test_nyquist_mode_removed(self, unit_grid):
        nyquist = ComplexField(unit_grid, np.cos(16 * np.asarray(unit_grid.points)))
        out = fourier_multiplier(nyquist, Symbol.deriv(0))
        np.testing.assert_allclose(out.values, 0.0, atol=1e-13)

    def test_rejects_non_finite_order(self):
        with pytest.raises(ValueError):
            Symbol.frac_homog(float("nan"))

    def test_rejects_negative_derivative(self):
        with pytest.raises(ValueError):
            Symbol.deriv(-1)


class TestLpProject:
    def test_shell_passes_mode_at_scale(self):
        grid = make_grid(64, 2 * math.pi)
        wave = ComplexField.plane_wave(grid, 8.0)
        out = lp_project(wave, Projection.shell(8))
        np.testing.assert_allclose(out.values, wave.values, atol=1e-12)

    @pytest.mark.parametrize("bump", [SMOOTH, BRIDGE, SHARP])
    def test_partition_of_unity(self, band_limited, bump):
        grid = band_limited.grid
        total = lp_project(band_limited, Projection.low(1), bump)
        for N in resolvable_shells(grid):
            total = total + lp_project(band_limited, Projection.shell(N), bump)
        np.testing.assert_allclose(total.values, band_limited.values, atol=1e-12)

    def test_plus_kills_negative_mode(self, unit_grid):
        wave = ComplexField.plane_wave(unit_grid, -3.0)
        assert lp_project(wave, Projection.plus()).max_abs() < 1e-14

    def test_plus_is_idempotent(self, band_limited):
        once = lp_project(band_limited, Projection.plus())
        twice = lp_project(once, Projection.plus())
        np.testing.assert_allclose(twice.values, once.values, atol=1e-12)

    def test_double_shell_squares_weight(self, band_limited):
        grid = band_limited.grid
        twice = lp_project(lp_project(band_limited, Projection.shell(4)), Projection.shell(4))
        r = np.abs(np.asarray(grid.wavenumbers))
        weight = SMOOTH.shell(r, 4.0) ** 2 * grid.nyquist_mask
        direct = ComplexField.from_coefficients(grid, band_limited.coefficients() * weight)
        np.testing.assert_allclose(twice.values, direct.values, atol=1e-12)

    def test_low_plus_high_is_identity(self, band_limited):
        low = lp_project(band_limited, Projection.low(2), SHARP)
        high = lp_project(band_limited, Projection.high(2), SHARP)
        np.testing.assert_allclose((low + high).values, band_limited.values, atol=1e-12)

    def test_unresolvable_shell_raises(self, unit_grid):
        with pytest.raises(ResolutionError):
            lp_project(ComplexField.zeros(unit_grid), Projection.shell(8))

    def test_non_dyadic_scale_rejected(self):
        with pytest.raises(ValueError):
            Projection.shell(3)


class TestSobolevNorm:
    def test_order_zero_is_l2(self, packet):
        assert sobolev_norm(packet, 0.0) == pytest.approx(packet.l2_norm(), rel=1e-12)

    def test_plane_wave_closed_form(self, unit_grid):
        wave = ComplexField.plane_wave(unit_grid, 5.0)
        expected = 6.0 * math.sqrt(2 * math.pi)
        assert sobolev_norm(wave, 1.0) == pytest.approx(expected, rel=1e-12)

    def test_homogeneous_ignores_mean(self, unit_grid):
        constant = ComplexField(unit_grid, np.ones(unit_grid.n))
        assert sobolev_norm(constant, -0.5, homogeneous=True) == 0.0

    def test_rejects_non_finite_index(self, packet):
        with pytest.raises(ValueError):
            sobolev_norm(packet, float("inf"))


class TestBernstein:
    @pytest.mark.parametrize("p", [2.0, math.inf])
    @pytest.mark.parametrize("s", [0.5, 1.0, -0.5, -1.0])
    def test_ratio_bounded_across_shells(self, wide_grid, p, s):
        rng = np.random.default_rng(3)
        coeffs = rng.standard_normal(wide_grid.n) + 1j * rng.standard_normal(wide_grid.n)
        f = ComplexField.from_coefficients(wide_grid, coeffs)
        ratios = []
        for N in resolvable_shells(wide_grid)[:3]:
            piece = lp_project(f, Projection.shell(N))
            lhs = lp_norm(fourier_multiplier(piece, Symbol.frac_homog(s)), p)
            ratios.append(lhs / (N**s * lp_norm(piece, p)))
        assert 0.1 < min(ratios) and max(ratios) < 10.0
