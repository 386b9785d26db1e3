"""Deterministic test data: packets, random shell data and the inflation indicator."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from fourlab.analysis import InflationDatum
from fourlab.spectral import SMOOTH, ComplexField, ResolutionError, SpectralGrid, make_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Gaussian:
    """``a exp(-(x - x0)^2 / (2 width^2)) exp(i k0 x)``."""

    a: float = 1.0
    x0: float = 0.0
    k0: float = 0.0
    width: float = 1.0


@dataclass(frozen=True)
class Sech:
    """``a sech((x - x0) / width) exp(i k0 x)``."""

    a: float = 1.0
    x0: float = 0.0
    k0: float = 0.0
    width: float = 1.0


@dataclass(frozen=True)
class RandomBand:
    """Random data with spectrum inside the open shell ``N/2 < |xi| < 2N``.

    A sum of ``packets`` Gaussian bumps of width ``N/8`` centred at
    ``+-N U(0.8, 1.6)`` with random complex weights, multiplied by the shell
    weight ``psi_N`` and normalized to unit ``L^2`` norm. ``stream`` selects an
    independent draw for the same seed.
    """

    N: float
    seed: int = 0
    stream: int = 0
    packets: int = 3


@dataclass(frozen=True)
class CoherentPacket:
    """Envelope of a Gaussian packet at frequency ``N`` kept coherent over ``[0, T]``.

    The width ``length = N sqrt(12 T)`` is the distance over which the free
    group spreads a packet at ``N`` in time ``T``. Only the envelope
    ``exp(-x^2 / (2 length^2))`` is realized, normalized to unit ``L^2``; the
    datum itself is ``exp(i N x)`` times it, so estimates take ``carrier=N``.
    """

    N: float
    T: float

    @property
    def length(self) -> float:
        return self.N * math.sqrt(12.0 * self.T)


def coherent_grid(packet: CoherentPacket, n: int = 256, widths: float = 32.0) -> SpectralGrid:
    """Envelope grid of period ``widths * packet.length``."""
    return make_grid(n, widths * packet.length)


TestField = Union[Gaussian, Sech, RandomBand, CoherentPacket, InflationDatum]


def _profile(kind: Union[Gaussian, Sech], grid: SpectralGrid) -> ComplexField:
    x = np.asarray(grid.points)
    z = (x - kind.x0) / kind.width
    envelope = np.exp(-0.5 * z * z) if isinstance(kind, Gaussian) else 1.0 / np.cosh(z)
    return ComplexField(grid, kind.a * envelope * np.exp(1j * kind.k0 * x))


def _random_band(kind: RandomBand, grid: SpectralGrid) -> ComplexField:
    if not 2.0 * kind.N < grid.max_wavenumber:
        raise ResolutionError(
            f"random_band N={kind.N:g} needs 2N below Nyquist {grid.max_wavenumber:g}"
        )
    rng = np.random.default_rng([kind.seed, kind.stream])
    xi = np.asarray(grid.wavenumbers)
    sigma = kind.N / 8.0
    spectrum = np.zeros(grid.n, dtype=np.complex128)
    for _ in range(kind.packets):
        center = rng.choice([-1.0, 1.0]) * kind.N * rng.uniform(0.8, 1.6)
        weight = complex(rng.standard_normal(), rng.standard_normal())
        spectrum += weight * np.exp(-0.5 * ((xi - center) / sigma) ** 2)
    spectrum *= SMOOTH.shell(np.abs(xi), kind.N) * grid.nyquist_mask
    field = ComplexField.from_spectrum(grid, spectrum)
    norm = field.l2_norm()
    if norm == 0.0:
        raise ValueError(f"random_band draw at N={kind.N:g} has no mass in its shell")
    return field * (1.0 / norm)


def _coherent(kind: CoherentPacket, grid: SpectralGrid) -> ComplexField:
    R = kind.length
    if grid.period < 24.0 * R:
        raise ResolutionError(
            f"coherent packet of length {R:.3g} needs a period of at least {24 * R:.3g}, "
            f"got {grid.period:.3g}"
        )
    if grid.max_wavenumber * R < 12.0:
        raise ResolutionError(
            f"coherent packet of length {R:.3g} is not resolved below Nyquist "
            f"{grid.max_wavenumber:.3g}"
        )
    field = _profile(Gaussian(width=R), grid)
    return field * (1.0 / field.l2_norm())


def inflation_band(datum: InflationDatum, grid: SpectralGrid) -> Tuple[int, int]:
    """Lattice indices ``j`` (wavenumber ``j dxi``) covering ``[N - w, N + w)``, half-open.

    Raises
    ------
    ResolutionError
        If the band is narrower than one lattice cell or reaches Nyquist.
    """
    w = datum.half_width
    if 2.0 * w < grid.dxi:
        raise ResolutionError(
            f"Inflation band of width {2 * w:.3g} at N={datum.N:g} is narrower than the "
            f"lattice spacing {grid.dxi:.3g}; use the simplex quadrature"
        )
    if datum.N + w >= grid.max_wavenumber:
        raise ResolutionError(f"Inflation band at N={datum.N:g} reaches Nyquist")
    lo = math.ceil((datum.N - w) / grid.dxi - 1e-9)
    hi = math.ceil((datum.N + w) / grid.dxi - 1e-9)
    logger.debug(
        "Inflation band [%g, %g) snapped to lattice [%g, %g)",
        datum.N - w,
        datum.N + w,
        lo * grid.dxi,
        hi * grid.dxi,
    )
    return lo, hi


def _inflation(datum: InflationDatum, grid: SpectralGrid) -> ComplexField:
    lo, hi = inflation_band(datum, grid)
    j = np.rint(np.asarray(grid.wavenumbers) / grid.dxi).astype(np.int64)
    spectrum = np.where((j >= lo) & (j < hi), datum.amplitude, 0.0).astype(np.complex128)
    return ComplexField.from_spectrum(grid, spectrum)


def make_test_field(kind: TestField, grid: SpectralGrid) -> ComplexField:
    """Realize *kind* on *grid*.

    Raises
    ------
    ResolutionError
        If the requested band does not fit on the grid.
    ValueError
        For an unsupported field kind.
    """
    if isinstance(kind, (Gaussian, Sech)):
        return _profile(kind, grid)
    if isinstance(kind, RandomBand):
        return _random_band(kind, grid)
    if isinstance(kind, CoherentPacket):
        return _coherent(kind, grid)
    if isinstance(kind, InflationDatum):
        return _inflation(kind, grid)
    raise ValueError(f"Unsupported test field: {kind!r}")
