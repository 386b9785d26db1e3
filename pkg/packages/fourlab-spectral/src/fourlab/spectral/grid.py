"""Periodic spectral grids and complex fields sampled on them.

The Fourier convention is the continuum one restricted to the lattice::

    f^(xi_j) = dx / sqrt(2 pi) * sum_k f(x_k) exp(-i xi_j x_k)

so that ``sum_j |f^(xi_j)|^2 dxi = sum_k |f(x_k)|^2 dx`` (Parseval) and single
modes ``exp(i k x)`` on a period-``P`` grid have ``L^2`` norm ``sqrt(P)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np
import scipy.fft as sfft

from .errors import DecayError, ResolutionError

#: Largest padded transform the dealiasing and refinement helpers will build.
MAX_POINTS = 1 << 24


def is_power_of_two(n: int) -> bool:
    return isinstance(n, (int, np.integer)) and n > 0 and (n & (n - 1)) == 0


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


# ---------------------------------------------------------------------------
# Grid
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpectralGrid:
    """Uniform periodic grid ``x_j = -period/2 + j dx`` with ``n`` points.

    Wavenumbers are stored in FFT order; :meth:`lattice` returns them sorted.
    Cached arrays are read-only so a grid can be shared between workers.
    """

    n: int
    period: float

    def __post_init__(self) -> None:
        if not is_power_of_two(self.n) or self.n < 16:
            raise ValueError(f"Grid size must be a power of two >= 16, got {self.n!r}")
        if not (math.isfinite(self.period) and self.period > 0):
            raise ValueError(f"Grid period must be positive and finite, got {self.period!r}")

    @property
    def dx(self) -> float:
        return self.period / self.n

    @property
    def x0(self) -> float:
        return -0.5 * self.period

    @property
    def dxi(self) -> float:
        """Lattice spacing ``2 pi / period`` of the wavenumbers."""
        return 2.0 * math.pi / self.period

    @property
    def max_wavenumber(self) -> float:
        """Nyquist magnitude ``pi / dx``."""
        return math.pi / self.dx

    @property
    def nyquist_index(self) -> int:
        return self.n // 2

    @cached_property
    def points(self) -> np.ndarray:
        return _frozen(self.x0 + self.dx * np.arange(self.n))

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        return _frozen(2.0 * math.pi * sfft.fftfreq(self.n, d=self.dx))

    @cached_property
    def nyquist_mask(self) -> np.ndarray:
        """Multiply by this to zero the unpaired Nyquist mode."""
        mask = np.ones(self.n)
        mask[self.nyquist_index] = 0.0
        return _frozen(mask)

    @cached_property
    def shift(self) -> np.ndarray:
        """Phase ``exp(-i xi x0)`` relating raw FFT coefficients to the spectrum."""
        return _frozen(np.exp(-1j * self.wavenumbers * self.x0))

    def lattice(self) -> np.ndarray:
        """Wavenumbers ``2 pi j / period`` for ``j = -n/2, ..., n/2 - 1``."""
        return sfft.fftshift(self.wavenumbers)

    def refined(self, factor: int) -> SpectralGrid:
        """Same domain with ``factor`` times as many points."""
        return SpectralGrid(self.n * factor, self.period)


def make_grid(n: int, period: float) -> SpectralGrid:
    """Build a :class:`SpectralGrid`; equal inputs give equal grids."""
    return SpectralGrid(n, float(period))


# ---------------------------------------------------------------------------
# Spectral padding
# ---------------------------------------------------------------------------


def pad_coefficients(coeffs: np.ndarray, size: int) -> np.ndarray:
    """Zero-pad raw FFT coefficients (last axis) to *size* modes.

    The Nyquist mode is dropped and the result is scaled so that the inverse
    transform on the larger grid samples the same trigonometric polynomial.
    """
    n = coeffs.shape[-1]
    if size < n or size > MAX_POINTS:
        raise ResolutionError(f"Cannot pad {n} modes to {size}")
    half = n // 2
    out = np.zeros(coeffs.shape[:-1] + (size,), dtype=np.complex128)
    out[..., :half] = coeffs[..., :half]
    out[..., size - half + 1 :] = coeffs[..., half + 1 :]
    return out * (size / n)


def truncate_coefficients(coeffs: np.ndarray, size: int) -> np.ndarray:
    """Inverse of :func:`pad_coefficients`: keep the lowest *size* modes, Nyquist zeroed."""
    n = coeffs.shape[-1]
    half = size // 2
    out = np.zeros(coeffs.shape[:-1] + (size,), dtype=np.complex128)
    out[..., :half] = coeffs[..., :half]
    out[..., half + 1 :] = coeffs[..., n - half + 1 :]
    return out * (size / n)


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ComplexField:
    """Complex samples of a function on a :class:`SpectralGrid`."""

    grid: SpectralGrid
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.complex128, copy=True)
        if values.shape != (self.grid.n,):
            raise ValueError(
                f"Field needs {self.grid.n} samples, got array of shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("Field samples must be finite")
        object.__setattr__(self, "values", _frozen(values))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, grid: SpectralGrid) -> ComplexField:
        return cls(grid, np.zeros(grid.n, dtype=np.complex128))

    @classmethod
    def from_function(
        cls, grid: SpectralGrid, func: Callable[[np.ndarray], np.ndarray]
    ) -> ComplexField:
        return cls(grid, func(np.asarray(grid.points)))

    @classmethod
    def plane_wave(cls, grid: SpectralGrid, k: float, amplitude: complex = 1.0) -> ComplexField:
        """``amplitude * exp(i k x)``; *k* must lie on the grid's lattice."""
        j = k / grid.dxi
        if abs(j - round(j)) > 1e-9 or abs(k) >= grid.max_wavenumber:
            raise ResolutionError(f"Wavenumber {k!r} is not a resolved lattice point")
        return cls(grid, amplitude * np.exp(1j * k * grid.points))

    @classmethod
    def from_coefficients(cls, grid: SpectralGrid, coeffs: np.ndarray) -> ComplexField:
        return cls(grid, sfft.ifft(coeffs))

    @classmethod
    def from_spectrum(cls, grid: SpectralGrid, spectrum: np.ndarray) -> ComplexField:
        """Inverse of :meth:`spectrum` (FFT ordering)."""
        coeffs = np.asarray(spectrum) * (math.sqrt(2.0 * math.pi) / grid.dx) / grid.shift
        return cls.from_coefficients(grid, coeffs)

    # -- transforms ---------------------------------------------------------

    def coefficients(self) -> np.ndarray:
        """Raw (unnormalized) FFT coefficients."""
        return sfft.fft(self.values)

    def spectrum(self) -> np.ndarray:
        """Continuum-normalized Fourier transform on the lattice, FFT order."""
        return self.coefficients() * (self.grid.dx / math.sqrt(2.0 * math.pi)) * self.grid.shift

    def with_values(self, values: np.ndarray) -> ComplexField:
        return ComplexField(self.grid, values)

    def on_grid(self, grid: SpectralGrid) -> ComplexField:
        """Resample onto a refinement of the same domain by spectral padding."""
        if grid.period != self.grid.period or grid.n % self.grid.n:
            raise ValueError("Target grid must refine the same periodic domain")
        return ComplexField(grid, sfft.ifft(pad_coefficients(self.coefficients(), grid.n)))

    # -- norms --------------------------------------------------------------

    def l2_norm(self) -> float:
        return math.sqrt(self.grid.dx * float(np.vdot(self.values, self.values).real))

    def spectral_l2_norm(self) -> float:
        spec = self.spectrum()
        return math.sqrt(self.grid.dxi * float(np.vdot(spec, spec).real))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def boundary_ratio(self, margin: int = 8) -> float:
        """Largest amplitude within *margin* points of the domain edge over the peak."""
        peak = self.max_abs()
        if peak == 0.0:
            return 0.0
        edge = np.abs(np.concatenate([self.values[:margin], self.values[-margin:]]))
        return float(edge.max() / peak)

    def require_decay(self, tolerance: float = 1e-10, margin: int = 8) -> None:
        ratio = self.boundary_ratio(margin)
        if ratio > tolerance:
            raise DecayError(
                f"Field is not localized: edge/peak amplitude {ratio:.3e} exceeds {tolerance:.1e}"
            )

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: ComplexField) -> None:
        if other.grid != self.grid:
            raise ValueError("Fields live on different grids")

    def conj(self) -> ComplexField:
        return ComplexField(self.grid, np.conj(self.values))

    def __add__(self, other: ComplexField) -> ComplexField:
        self._check(other)
        return ComplexField(self.grid, self.values + other.values)

    def __sub__(self, other: ComplexField) -> ComplexField:
        self._check(other)
        return ComplexField(self.grid, self.values - other.values)

    def __neg__(self) -> ComplexField:
        return ComplexField(self.grid, -self.values)

    def __mul__(self, scalar: complex) -> ComplexField:
        return ComplexField(self.grid, complex(scalar) * self.values)

    __rmul__ = __mul__

    def __len__(self) -> int:
        return self.grid.n

    def __repr__(self) -> str:
        return (
            f"ComplexField(n={self.grid.n}, period={self.grid.period:g}, "
            f"|u|max={self.max_abs():.3g})"
        )
