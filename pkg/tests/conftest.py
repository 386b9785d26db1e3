"""Shared fixtures for the entire test suite."""

from __future__ import annotations

import numpy as np
import pytest

from fourlab.spectral import ComplexField


# ---------------------------------------------------------------------------
# Random data
# ---------------------------------------------------------------------------

@pytest.fixture()
def rng():
    """Seeded generator; tests that draw random data stay reproducible."""
    return np.random.default_rng(20240601)


# ---------------------------------------------------------------------------
# Localized packets
# ---------------------------------------------------------------------------

def gaussian(grid, a=0.5, width=2.0, k0=1.0):
    """``a exp(-x^2 / (2 width^2)) exp(i k0 x)`` sampled on *grid*."""
    return ComplexField.from_function(
        grid, lambda x: a * np.exp(-(x**2) / (2 * width**2)) * np.exp(1j * k0 * x)
    )


@pytest.fixture()
def make_packet():
    return gaussian
