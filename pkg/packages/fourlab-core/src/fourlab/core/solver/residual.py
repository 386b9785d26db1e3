from __future__ import annotations

import logging

import numpy as np

from fourlab.spectral import SpaceTimeTrace

from ..nonlinearity import evaluator_for
from .config import SolveConfig

logger = logging.getLogger(__name__)

#: Centered five-point stencil for the first derivative.
_STENCIL = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0


def pde_residual(trace: SpaceTimeTrace, cfg: SolveConfig) -> float:
    """Largest ``||i u_t + (nu d^4 + beta d^2) u - G(u)||_2`` over interior snapshots.

    ``u_t`` comes from the fourth-order centered difference, so the first and
    last two snapshots are skipped. The spatial terms are spectral.

    Raises
    ------
    ValueError
        If the trace has fewer than 5 snapshots.
    """
    if trace.count < 5:
        raise ValueError(f"pde_residual needs at least 5 snapshots, got {trace.count}")
    grid = trace.grid
    coeffs = trace.coefficients()
    omega = cfg.sym.dispersion(np.asarray(grid.wavenumbers)) * grid.nyquist_mask
    evaluate = evaluator_for(cfg.spec, grid, cfg.dealias).coefficients

    worst = 0.0
    for j in range(2, trace.count - 2):
        dudt = np.tensordot(_STENCIL, coeffs[j - 2 : j + 3], axes=1) / trace.dt
        residual = 1j * dudt + omega * coeffs[j] - evaluate(coeffs[j])
        # Parseval for raw FFT coefficients: ||f||_2^2 = dx / n * sum |f^_k|^2
        norm = float(np.sqrt(grid.dx / grid.n * np.sum(np.abs(residual) ** 2)))
        worst = max(worst, norm)
    logger.debug("PDE residual %.3e over %d interior snapshots", worst, trace.count - 4)
    return worst
