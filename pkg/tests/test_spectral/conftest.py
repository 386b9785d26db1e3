"""Fixtures shared by the spectral substrate tests."""

from __future__ import annotations

import math

import numpy as np
import pytest

from fourlab.spectral import ComplexField, make_grid


@pytest.fixture()
def unit_grid():
    """2 pi periodic grid with integer wavenumbers -16..15."""
    return make_grid(32, 2 * math.pi)


@pytest.fixture()
def wide_grid():
    """Large torus for localized data: period 64 pi, Nyquist 16."""
    return make_grid(1024, 64 * math.pi)


@pytest.fixture()
def packet(wide_grid):
    """Modulated Gaussian, localized far from the domain edge."""
    return ComplexField.from_function(
        wide_grid, lambda x: 0.5 * np.exp(-x**2 / 8.0) * np.exp(1.5j * x)
    )


@pytest.fixture()
def band_limited(wide_grid, rng):
    """Random coefficients supported on |xi| < 4."""
    xi = np.asarray(wide_grid.wavenumbers)
    coeffs = (rng.standard_normal(wide_grid.n) + 1j * rng.standard_normal(wide_grid.n))
    coeffs[np.abs(xi) >= 4.0] = 0.0
    return ComplexField.from_coefficients(wide_grid, coeffs)
