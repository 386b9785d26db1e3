"""Integrating-factor (Lawson) RK4 for ``i u_t + L u = G(u)``.

In Fourier variables ``u^' = i w u^ - i G^(u)`` with ``w = nu xi^4 - beta xi^2``.
The linear part is carried exactly by ``exp(i w h/2)`` factors and only the
nonlinearity is stepped, so the step size is limited by ``G`` alone.
"""

from __future__ import annotations

import logging
import math
from typing import Callable, List, Optional

import numpy as np
import scipy.fft as sfft

from fourlab.spectral import ComplexField, LinearSymbol, SpaceTimeTrace, SpectralGrid

from ..nonlinearity import NonlinearitySpec, evaluator_for
from .config import SolveConfig

logger = logging.getLogger(__name__)

StepCallback = Callable[[int, float], None]


class BlowUpError(RuntimeError):
    """The ``L^2`` norm left the allowed range or stopped being finite."""

    def __init__(self, message: str, step: int, time: float):
        super().__init__(message)
        self.step = step
        self.time = time


def suggest_dt(
    grid: SpectralGrid, spec: NonlinearitySpec, u0: ComplexField, safety: float = 0.5
) -> float:
    """``safety / (max|xi|^gamma * m * ||u0||_inf^(m-1))``; ``inf`` for zero data or ``G = 0``."""
    amplitude = u0.max_abs()
    if spec.is_zero or amplitude == 0.0:
        return math.inf
    rate = grid.max_wavenumber**spec.gamma * spec.m * amplitude ** (spec.m - 1)
    return safety / rate


def _rhs(evaluate: Callable[[np.ndarray], np.ndarray], coeffs: np.ndarray) -> np.ndarray:
    return -1j * evaluate(coeffs)


def simulate(
    u0: ComplexField,
    cfg: SolveConfig,
    on_step: Optional[StepCallback] = None,
) -> SpaceTimeTrace:
    """Integrate from ``u0`` to ``cfg.T`` and return every ``record_every``-th state.

    The first snapshot is ``u0`` itself.

    Raises
    ------
    BlowUpError
        When ``||u||_2`` exceeds ``cfg.blowup_factor`` times its initial value
        or becomes non-finite.
    ValueError
        If the number of steps is not a multiple of ``record_every``.
    """
    grid = u0.grid
    steps, h = cfg.steps, cfg.step
    if steps % cfg.record_every:
        raise ValueError(
            f"{steps} steps are not a multiple of record_every={cfg.record_every}"
        )
    suggested = suggest_dt(grid, cfg.spec, u0, cfg.dt_safety)
    if h > suggested:
        logger.warning("dt=%.3e exceeds the suggested step %.3e", h, suggested)

    evaluate = evaluator_for(cfg.spec, grid, cfg.dealias).coefficients
    omega = cfg.sym.dispersion(np.asarray(grid.wavenumbers))
    half = np.exp(0.5j * h * omega) * grid.nyquist_mask
    full = half * half

    coeffs = u0.coefficients() * grid.nyquist_mask
    norm0 = float(np.linalg.norm(coeffs))
    limit = cfg.blowup_factor * max(norm0, np.finfo(float).tiny)
    frames: List[np.ndarray] = [np.array(u0.values)]
    logger.info("Integrating %d steps of %.3e to T=%g", steps, h, cfg.T)

    for j in range(1, steps + 1):
        k1 = _rhs(evaluate, coeffs)
        k2 = _rhs(evaluate, half * (coeffs + 0.5 * h * k1))
        k3 = _rhs(evaluate, half * coeffs + 0.5 * h * k2)
        k4 = _rhs(evaluate, full * coeffs + h * half * k3)
        coeffs = full * coeffs + (h / 6.0) * (full * k1 + 2.0 * half * (k2 + k3) + k4)

        norm = float(np.linalg.norm(coeffs))
        if not math.isfinite(norm) or norm > limit:
            raise BlowUpError(
                f"L2 norm grew by {norm / max(norm0, 1e-300):.3e} at step {j} (t={j * h:.6g})",
                step=j,
                time=j * h,
            )
        if j % cfg.record_every == 0:
            frames.append(sfft.ifft(coeffs))
        if on_step is not None:
            on_step(j, j * h)

    return SpaceTimeTrace(grid, 0.0, h * cfg.record_every, np.asarray(frames))


def time_reversal_error(
    u0: ComplexField,
    sym: LinearSymbol,
    T: float,
    dt: float,
    spec: Optional[NonlinearitySpec] = None,
) -> float:
    """Relative ``L^2`` error after evolving to ``T`` and back.

    Running ``s -> u(T - s)`` forward is the same equation with ``L`` and
    ``G`` negated.
    """
    if spec is None:
        spec = NonlinearitySpec.zero()
    forward = simulate(u0, SolveConfig(spec=spec, sym=sym, T=T, dt=dt))
    backward_sym = LinearSymbol(-sym.nu, -sym.beta)
    back = simulate(
        forward[forward.count - 1],
        SolveConfig(spec=spec.scaled(-1.0), sym=backward_sym, T=T, dt=dt),
    )
    scale = u0.l2_norm() or 1.0
    return (back[back.count - 1] - u0).l2_norm() / scale
