"""Fourier multipliers, Littlewood-Paley projections and Sobolev norms."""

from __future__ import annotations

import math
from typing import List

import numpy as np
import scipy.fft as sfft

from .errors import ResolutionError
from .grid import ComplexField, SpectralGrid
from .types import SMOOTH, BumpProfile, DyadicShell, Projection, ProjectionKind, Symbol, is_dyadic


def apply_weights(f: ComplexField, weights: np.ndarray) -> ComplexField:
    """Multiply the coefficients of *f* by *weights* (FFT order)."""
    return ComplexField.from_coefficients(f.grid, f.coefficients() * weights)


def symbol_weights(grid: SpectralGrid, symbol: Symbol) -> np.ndarray:
    return symbol.weights(np.asarray(grid.wavenumbers)) * grid.nyquist_mask


def fourier_multiplier(f: ComplexField, symbol: Symbol) -> ComplexField:
    """Apply ``(i xi)^k``, ``|xi|^s`` or ``(1 + |xi|)^s`` to *f*.

    The homogeneous symbol sends the zero mode to 0 for every ``s`` and the
    Nyquist mode is always removed.
    """
    return apply_weights(f, symbol_weights(f.grid, symbol))


# ---------------------------------------------------------------------------
# Dyadic shells
# ---------------------------------------------------------------------------


def dyadic_shell(grid: SpectralGrid, N: float) -> DyadicShell:
    if not is_dyadic(N):
        raise ValueError(f"Shell scale must be a power of two, got {N!r}")
    return DyadicShell(N=N, resolvable=2.0 * N < grid.max_wavenumber)


def resolvable_shells(grid: SpectralGrid, lowest: float = 2.0) -> List[float]:
    """Dyadic ``N >= lowest`` whose shell ``N/2 < |xi| < 2N`` fits below Nyquist."""
    shells: List[float] = []
    N = float(lowest)
    while 2.0 * N < grid.max_wavenumber:
        shells.append(N)
        N *= 2.0
    return shells


def require_resolvable(grid: SpectralGrid, N: float) -> None:
    if not dyadic_shell(grid, N).resolvable:
        raise ResolutionError(
            f"Shell N={N:g} needs 2N < {grid.max_wavenumber:g} (Nyquist); refine the grid"
        )


def projection_weights(
    grid: SpectralGrid, projection: Projection, bump: BumpProfile = SMOOTH
) -> np.ndarray:
    xi = np.asarray(grid.wavenumbers)
    kind = projection.kind
    if kind is ProjectionKind.PLUS:
        weights = (xi >= 0.0).astype(np.float64)
    elif kind is ProjectionKind.MINUS:
        weights = (xi <= 0.0).astype(np.float64)
    else:
        N = float(projection.N)  # type: ignore[arg-type]
        require_resolvable(grid, N)
        r = np.abs(xi)
        if kind is ProjectionKind.SHELL:
            weights = bump.shell(r, N)
        elif kind is ProjectionKind.LOW:
            weights = bump(r / N)
        else:
            weights = 1.0 - bump(r / N)
    return weights * grid.nyquist_mask


def lp_project(f: ComplexField, projection: Projection, bump: BumpProfile = SMOOTH) -> ComplexField:
    """Apply ``P_N``, ``P_{<=N}``, ``P_{>N}``, ``P_+`` or ``P_-`` to *f*.

    Raises
    ------
    ResolutionError
        If a scale-dependent projection's support reaches the Nyquist mode.
    """
    return apply_weights(f, projection_weights(f.grid, projection, bump))


# ---------------------------------------------------------------------------
# Norms
# ---------------------------------------------------------------------------


def sobolev_norm(f: ComplexField, s: float, homogeneous: bool = False) -> float:
    """Quadrature of ``(1 + |xi|)^{2s} |f^|^2`` (or ``|xi|^{2s}``) over the lattice.

    The grid must resolve the essential support of ``f^``; nothing outside the
    lattice is accounted for. The homogeneous norm ignores the zero mode.
    """
    if not math.isfinite(s):
        raise ValueError(f"Sobolev index must be finite, got {s!r}")
    r = np.abs(np.asarray(f.grid.wavenumbers))
    if homogeneous:
        weights = np.zeros_like(r)
        nonzero = r > 0.0
        weights[nonzero] = r[nonzero] ** (2.0 * s)
    else:
        weights = (1.0 + r) ** (2.0 * s)
    power = np.abs(f.spectrum()) ** 2
    return math.sqrt(f.grid.dxi * float(np.sum(weights * power)))


def lp_norm(f: ComplexField, p: float) -> float:
    """Spatial ``L^p`` norm by the periodic trapezoid rule (``p = inf`` allowed)."""
    a = np.abs(f.values)
    if math.isinf(p):
        return float(a.max())
    return float((f.grid.dx * np.sum(a**p)) ** (1.0 / p))


def band_fraction(f: ComplexField, lo: float, hi: float) -> float:
    """Share of spectral mass with ``lo < |xi| < hi``."""
    power = np.abs(sfft.fft(f.values)) ** 2
    total = float(power.sum())
    if total == 0.0:
        return 1.0
    r = np.abs(np.asarray(f.grid.wavenumbers))
    return float(power[(r > lo) & (r < hi)].sum() / total)
