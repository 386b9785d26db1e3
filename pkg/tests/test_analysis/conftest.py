"""Fixtures and data builders for the analysis tests."""

from __future__ import annotations

import math

import numpy as np
import pytest

from fourlab.spectral import ComplexField, SpaceTimeTrace, free_trace, make_grid

BASE_PERIOD = 512 * math.pi


def shell_packet(N: float, center: float = 1.25, n: int = 2048) -> ComplexField:
    """Gaussian packet at frequency ``center * N`` with spectral width ``N / 8``.

    The grid period shrinks like ``1 / N`` so packets at different scales are
    exact rescalings of each other.
    """
    grid = make_grid(n, BASE_PERIOD / N)
    width = 8.0 / N
    return ComplexField.from_function(
        grid, lambda x: np.exp(-x**2 / (2 * width**2)) * np.exp(1j * center * N * x)
    )


def coherent_envelope(N: float, T: float, n: int = 256) -> ComplexField:
    """Unit Gaussian envelope of length ``N sqrt(12 T)`` on a period of 32 lengths.

    With ``carrier=N`` it stands for a packet at frequency ``N`` that stays
    coherent over ``[0, T]``.
    """
    length = N * math.sqrt(12.0 * T)
    grid = make_grid(n, 32.0 * length)
    field = ComplexField.from_function(grid, lambda x: np.exp(-x**2 / (2 * length**2)))
    return field * (1.0 / field.l2_norm())


@pytest.fixture()
def packet_factory():
    return shell_packet


@pytest.fixture()
def envelope_factory():
    return coherent_envelope




@pytest.fixture()
def small_grid():
    return make_grid(64, 2 * math.pi)


@pytest.fixture()
def constant_trace(small_grid):
    values = np.full((11, small_grid.n), 1.5 - 2.0j)
    return SpaceTimeTrace(small_grid, 0.0, 0.1, values)


@pytest.fixture()
def random_trace(small_grid):
    rng = np.random.default_rng(11)
    values = rng.standard_normal((9, small_grid.n)) + 1j * rng.standard_normal((9, small_grid.n))
    return SpaceTimeTrace(small_grid, 0.0, 0.05, values)


@pytest.fixture()
def shell_trace():
    """Free evolution of a packet localized in the shell N = 4."""
    packet = shell_packet(4.0)
    return free_trace(packet, count=65, dt=1e-4)
