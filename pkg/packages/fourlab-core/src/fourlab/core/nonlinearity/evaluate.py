"""Pseudospectral evaluation of a :class:`NonlinearitySpec` with zero-padding dealiasing."""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import Dict

import numpy as np
import scipy.fft as sfft

from fourlab.spectral import ComplexField, ResolutionError, SpectralGrid
from fourlab.spectral.grid import MAX_POINTS, pad_coefficients, truncate_coefficients

from .spec import NonlinearitySpec

logger = logging.getLogger(__name__)


def pad_factor(degree: int) -> int:
    """``ceil((degree + 1) / 2)``: the generalized 3/2 rule for products of *degree* factors."""
    if degree < 1:
        raise ValueError(f"Degree must be positive, got {degree!r}")
    return max(1, math.ceil((degree + 1) / 2))


class NonlinearityEvaluator:
    """Evaluates ``G(u)`` on a fixed grid.

    Derivatives are taken spectrally; each ``d^k u`` is zero-padded to
    ``pad_factor(l) * n`` modes before the pointwise products, and the sum is
    truncated back to ``n`` modes. For ``u`` with modes ``|j| < n/2`` this is
    exact for every monomial up to degree ``l``.
    """

    def __init__(self, spec: NonlinearitySpec, grid: SpectralGrid, dealias: bool = True):
        self.spec = spec
        self.grid = grid
        factor = pad_factor(spec.l) if dealias else 1
        self.size = factor * grid.n
        if self.size > MAX_POINTS:
            raise ResolutionError(
                f"Dealiasing degree {spec.l} on n={grid.n} needs {self.size} points "
                f"(limit {MAX_POINTS})"
            )
        xi = np.asarray(grid.wavenumbers)
        self._symbols: Dict[int, np.ndarray] = {
            k: (1j * xi) ** k * grid.nyquist_mask for k in spec.orders
        }
        logger.debug(
            "Evaluator for %d monomials on n=%d padded to %d", len(spec), grid.n, self.size
        )

    def coefficients(self, coeffs: np.ndarray) -> np.ndarray:
        """Raw FFT coefficients of ``G(u)`` from those of ``u`` (length ``n``)."""
        if self.spec.is_zero:
            return np.zeros(self.grid.n, dtype=np.complex128)
        derivs = {
            k: sfft.ifft(pad_coefficients(coeffs * symbol, self.size))
            for k, symbol in self._symbols.items()
        }
        conj = {k: np.conj(d) for k, d in derivs.items()}
        total = np.zeros(self.size, dtype=np.complex128)
        for t in self.spec.monomials:
            product = np.full(self.size, t.coeff, dtype=np.complex128)
            for k in t.u:
                product *= derivs[k]
            for k in t.ubar:
                product *= conj[k]
            total += product
        return truncate_coefficients(sfft.fft(total), self.grid.n)

    def __call__(self, u: ComplexField) -> ComplexField:
        if u.grid != self.grid:
            raise ValueError("Field and evaluator live on different grids")
        return ComplexField.from_coefficients(self.grid, self.coefficients(u.coefficients()))


@lru_cache(maxsize=64)
def evaluator_for(
    spec: NonlinearitySpec, grid: SpectralGrid, dealias: bool = True
) -> NonlinearityEvaluator:
    return NonlinearityEvaluator(spec, grid, dealias)


def evaluate_nonlinearity(
    spec: NonlinearitySpec, u: ComplexField, dealias: bool = True
) -> ComplexField:
    """``G(u)`` for the polynomial nonlinearity *spec*.

    Raises
    ------
    ResolutionError
        If the padded grid for the spec's top degree exceeds the size limit.
    """
    return evaluator_for(spec, u.grid, dealias)(u)
