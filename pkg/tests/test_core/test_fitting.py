"""Tests for log-log slope fits and spread checks."""

from __future__ import annotations

import math

import pytest

from fourlab.core.experiments import fit_slope, geometric_mean, within_factor


class TestFitSlope:
    def test_exact_power_law(self):
        xs = [1.0, 2.0, 4.0, 8.0, 16.0]
        fit = fit_slope(xs, [3.0 * x**1.5 for x in xs])
        assert fit.slope == pytest.approx(1.5, abs=1e-12)
        assert fit.intercept == pytest.approx(math.log(3.0), abs=1e-12)
        assert fit.residual < 1e-12

    def test_residual_of_noisy_data(self):
        fit = fit_slope([1.0, 2.0, 4.0], [1.0, 2.0 * math.e, 4.0])
        assert fit.residual > 0.1

    def test_needs_three_points(self):
        with pytest.raises(ValueError, match="at least 3"):
            fit_slope([1.0, 2.0], [1.0, 2.0])

    def test_lengths_must_match(self):
        with pytest.raises(ValueError, match="matching"):
            fit_slope([1.0, 2.0, 4.0], [1.0, 2.0])

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
    def test_rejects_non_positive(self, bad):
        with pytest.raises(ValueError, match="positive finite"):
            fit_slope([1.0, 2.0, 4.0], [1.0, bad, 4.0])


class TestSpread:
    def test_geometric_mean(self):
        assert geometric_mean([1.0, 4.0, 16.0]) == pytest.approx(4.0)

    def test_within_factor(self):
        assert within_factor([1.0, 4.0], 2.1)
        assert not within_factor([1.0, 4.0], 1.9)
