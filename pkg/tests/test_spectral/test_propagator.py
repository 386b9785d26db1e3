"""Tests for the free group, traces and the Duhamel integral."""

from __future__ import annotations

import numpy as np
import pytest

from fourlab.spectral import (
    ComplexField,
    LinearSymbol,
    SpaceTimeTrace,
    duhamel_integral,
    duhamel_trace,
    free_evolve,
    free_trace,
)


def _forced_mode(grid, k, omega, count, dt):
    """Trace of exp(i omega t) exp(i k x)."""
    times = dt * np.arange(count)
    wave = ComplexField.plane_wave(grid, k).values
    return SpaceTimeTrace(grid, 0.0, dt, np.exp(1j * omega * times)[:, None] * wave[None, :])


class TestFreeEvolve:
    def test_zero_time_is_identity(self, band_limited):
        out = free_evolve(band_limited, 0.0)
        np.testing.assert_allclose(out.values, band_limited.values, atol=1e-13)

    def test_plane_wave_phase(self, unit_grid):
        wave = ComplexField.plane_wave(unit_grid, 3.0)
        out = free_evolve(wave, 0.2)
        np.testing.assert_allclose(out.values, np.exp(0.2j * 81) * wave.values, atol=1e-12)

    def test_second_order_term(self, unit_grid):
        wave = ComplexField.plane_wave(unit_grid, 2.0)
        out = free_evolve(wave, 0.3, LinearSymbol(nu=-1.0, beta=1.0))
        np.testing.assert_allclose(out.values, np.exp(0.3j * (-16 - 4)) * wave.values, atol=1e-12)

    @pytest.mark.parametrize("t", [0.1, 1.0, 10.0])
    def test_unitary(self, band_limited, t):
        out = free_evolve(band_limited, t)
        assert out.l2_norm() == pytest.approx(band_limited.l2_norm(), rel=1e-12)

    def test_group_law(self, band_limited):
        two_step = free_evolve(free_evolve(band_limited, 0.3), 0.45)
        one_step = free_evolve(band_limited, 0.75)
        np.testing.assert_allclose(two_step.values, one_step.values, atol=1e-11)

    def test_conjugation_reverses_time(self, band_limited):
        lhs = free_evolve(band_limited.conj(), 0.4)
        rhs = free_evolve(band_limited, -0.4).conj()
        np.testing.assert_allclose(lhs.values, rhs.values, atol=1e-11)

    def test_rejects_non_finite_time(self, band_limited):
        with pytest.raises(ValueError):
            free_evolve(band_limited, float("nan"))

    def test_rejects_degenerate_symbol(self):
        with pytest.raises(ValueError):
            LinearSymbol(0.0, 0.0)


class TestLinearSymbolFrame:
    @pytest.mark.parametrize("sym", [LinearSymbol(), LinearSymbol(nu=-1.0, beta=1.0)])
    def test_slope_matches_difference_quotient(self, sym):
        xi, h = np.array([-3.0, 0.5, 2.0]), 1e-5
        quotient = (sym.dispersion(xi + h) - sym.dispersion(xi - h)) / (2 * h)
        np.testing.assert_allclose(sym.dispersion_slope(xi), quotient, rtol=1e-8)

    @pytest.mark.parametrize("sym", [LinearSymbol(), LinearSymbol(nu=2.0, beta=-3.0)])
    def test_frame_dispersion_removes_tangent_line(self, sym):
        xi0, delta = 1.5, np.linspace(-2.0, 2.0, 9)
        direct = (
            sym.dispersion(xi0 + delta)
            - sym.dispersion(np.array(xi0))
            - sym.dispersion_slope(xi0) * delta
        )
        np.testing.assert_allclose(sym.frame_dispersion(delta, xi0), direct, atol=1e-11)

    def test_group_speed_is_slope_magnitude(self):
        sym = LinearSymbol(beta=1.0)
        assert sym.group_speed(-2.0) == pytest.approx(abs(4 * -8 + 4))


class TestSpaceTimeTrace:
    def test_needs_two_snapshots(self, unit_grid):
        with pytest.raises(ValueError):
            SpaceTimeTrace(unit_grid, 0.0, 0.1, np.zeros((1, unit_grid.n)))

    def test_needs_positive_step(self, unit_grid):
        with pytest.raises(ValueError):
            SpaceTimeTrace(unit_grid, 0.0, 0.0, np.zeros((3, unit_grid.n)))

    def test_free_trace_matches_free_evolve(self, packet):
        trace = free_trace(packet, count=5, dt=0.05)
        np.testing.assert_allclose(trace[3].values, free_evolve(packet, 0.15).values, atol=1e-12)
        assert trace.t_final == pytest.approx(0.2)

    def test_from_fields(self, packet):
        trace = SpaceTimeTrace.from_fields([packet, packet * 2.0], t0=1.0, dt=0.5)
        assert trace.count == 2
        np.testing.assert_allclose(trace.times, [1.0, 1.5])


class TestDuhamelIntegral:
    def test_zero_forcing(self, unit_grid):
        forcing = SpaceTimeTrace(unit_grid, 0.0, 0.1, np.zeros((11, unit_grid.n)))
        assert duhamel_integral(forcing, 0.7).max_abs() == 0.0

    def test_start_time_gives_zero(self, unit_grid):
        forcing = _forced_mode(unit_grid, 2.0, 3.0, 11, 0.1)
        assert duhamel_integral(forcing, 0.0).max_abs() == 0.0

    def test_free_forcing_integrates_linearly(self, packet):
        forcing = free_trace(packet, count=21, dt=0.05)
        out = duhamel_integral(forcing, 1.0)
        expected = 1.0 * free_evolve(packet, 1.0).values
        np.testing.assert_allclose(out.values, expected, atol=1e-11)

    def test_resonance_factor(self, unit_grid):
        k, omega, t = 2.0, 3.0, 1.0
        forcing = _forced_mode(unit_grid, k, omega, 501, 0.002)
        out = duhamel_integral(forcing, t)
        factor = (np.exp(1j * omega * t) - np.exp(1j * t * k**4)) / (1j * (omega - k**4))
        expected = factor * ComplexField.plane_wave(unit_grid, k).values
        np.testing.assert_allclose(out.values, expected, atol=1e-7)

    def test_off_lattice_time(self, unit_grid):
        k, omega, t = 1.0, 0.5, 0.537
        forcing = _forced_mode(unit_grid, k, omega, 101, 0.01)
        out = duhamel_integral(forcing, t)
        factor = (np.exp(1j * omega * t) - np.exp(1j * t * k**4)) / (1j * (omega - k**4))
        expected = factor * ComplexField.plane_wave(unit_grid, k).values
        np.testing.assert_allclose(out.values, expected, atol=1e-8)

    def test_linear_in_forcing(self, unit_grid):
        a = _forced_mode(unit_grid, 1.0, 2.0, 21, 0.05)
        b = _forced_mode(unit_grid, -3.0, 0.5, 21, 0.05)
        combined = a.with_values(2.0 * a.values - 1j * b.values)
        lhs = duhamel_integral(combined, 0.8)
        rhs = 2.0 * duhamel_integral(a, 0.8) - 1j * duhamel_integral(b, 0.8)
        np.testing.assert_allclose(lhs.values, rhs.values, atol=1e-12)

    def test_outside_range_raises(self, unit_grid):
        forcing = _forced_mode(unit_grid, 1.0, 2.0, 11, 0.1)
        with pytest.raises(ValueError):
            duhamel_integral(forcing, 1.5)
        with pytest.raises(ValueError):
            duhamel_integral(forcing, -0.1)

    def test_cumulative_trace_agrees_on_lattice(self, unit_grid):
        forcing = _forced_mode(unit_grid, 2.0, 3.0, 201, 0.005)
        cumulative = duhamel_trace(forcing)
        assert cumulative[0].max_abs() == 0.0
        np.testing.assert_allclose(
            cumulative[200].values, duhamel_integral(forcing, 1.0).values, atol=1e-7
        )

    def test_cumulative_trace_keeps_imaginary_part(self, unit_grid):
        k, dt = 1.0, 0.005
        forcing = _forced_mode(unit_grid, k, 0.0, 201, dt)
        cumulative = duhamel_trace(forcing)
        wave = ComplexField.plane_wave(unit_grid, k).values
        for j in (1, 2, 57, 200):
            t = j * dt
            factor = (1.0 - np.exp(1j * t * k**4)) / (1j * (0.0 - k**4))
            np.testing.assert_allclose(cumulative[j].values, factor * wave, atol=1e-7)
        np.testing.assert_allclose(
            cumulative[200].values, duhamel_integral(forcing, 1.0).values, atol=1e-7
        )
