"""Core test fixtures: solver grids, packets and small lab defaults."""

from __future__ import annotations

import math

import pytest

from fourlab.core.types import LabConfig
from fourlab.spectral import make_grid


@pytest.fixture()
def solver_grid():
    """Period 64 pi, Nyquist 8: enough room for packets of width 2."""
    return make_grid(512, 64 * math.pi)


@pytest.fixture()
def fine_grid():
    return make_grid(2048, 64 * math.pi)


@pytest.fixture()
def small_packet(make_packet, solver_grid):
    return make_packet(solver_grid, a=0.05)


@pytest.fixture()
def packet(make_packet, solver_grid):
    return make_packet(solver_grid)


@pytest.fixture()
def lab(tmp_path):
    """Small defaults so harness tests stay quick."""
    return LabConfig(
        grid={"n": 512, "period": 64 * math.pi},
        runner={"workers": 2},
        output_dir=str(tmp_path / "results"),
    )
