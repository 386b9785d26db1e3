"""Ratios of measured left-hand sides to the right-hand sides of the linear estimates.

Linear estimates are measured on a free trace of the shell-projected datum
over a window that ends before the fastest wave packet can reach the edge
of the torus. The maximal function needs the whole window ``[0, T]``, so it
follows the packet in the frame moving with its group velocity instead.
Bilinear estimates use the exact whole-line space-time norm from
:mod:`fourlab.analysis.bilinear`.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.fft as sfft
from scipy.integrate import trapezoid

from fourlab.spectral import (
    FREE,
    SMOOTH,
    BumpProfile,
    ComplexField,
    LinearSymbol,
    Projection,
    ResolutionError,
    SpectralGrid,
    Symbol,
    fourier_multiplier,
    free_trace,
    lp_project,
    require_resolvable,
)

from .bilinear import bilinear_spacetime_norm
from .norms import DEFAULT_EPS, Outer, mixed_norm

logger = logging.getLogger(__name__)


class EstimateKind(str, Enum):
    STRICHARTZ = "strichartz"
    KATO = "kato"
    KENIG_RUIZ = "kenig_ruiz"
    MAXIMAL = "maximal"
    BILINEAR = "bilinear"
    REFINED_BILINEAR = "refined_bilinear"


LINEAR_KINDS = (
    EstimateKind.STRICHARTZ,
    EstimateKind.KATO,
    EstimateKind.KENIG_RUIZ,
    EstimateKind.MAXIMAL,
)


@dataclass(frozen=True)
class EstimateParams:
    """Scales and discretization of one estimate evaluation.

    ``N`` is the (first) shell. ``T`` bounds the time window of the linear
    kinds. Except for the maximal function it is further cut to
    ``wrap_fraction`` of the time the fastest shell frequency needs to cross
    half the torus.

    A non-zero ``carrier`` marks the datum as an envelope: the function the
    estimate sees is ``exp(i carrier x)`` times the datum, so the grid only has
    to resolve the envelope. Only the maximal function accepts envelopes.
    """

    N: float
    N2: Optional[float] = None
    L: Optional[float] = None
    sign: str = "-"
    q: float = 4.0
    r: float = math.inf
    eps: float = DEFAULT_EPS
    T: float = 0.5
    samples: int = 513
    wrap_fraction: float = 0.5
    enforce_preconditions: bool = True
    bump: BumpProfile = SMOOTH
    carrier: float = 0.0


def is_admissible(q: float, r: float, tol: float = 1e-12) -> bool:
    """``2/q + 1/r = 1/2`` with ``4 <= q <= inf`` and ``2 <= r <= inf``."""
    if not (4.0 <= q and 2.0 <= r):
        return False
    return abs(2.0 / q + 1.0 / r - 0.5) <= tol


def prewrap_horizon(
    grid: SpectralGrid, N: float, T: float, wrap_fraction: float = 0.5, sym: LinearSymbol = FREE
) -> float:
    """``min(T, wrap_fraction * (period/2) / v(2N))`` with ``v`` the group speed."""
    speed = float(sym.group_speed(2.0 * N))
    if speed == 0.0:
        return T
    return min(T, wrap_fraction * 0.5 * grid.period / speed)


def _linear_setup(kind: EstimateKind, params: EstimateParams):
    """Weight symbol and mixed-norm layout of each linear estimate."""
    if kind is EstimateKind.STRICHARTZ:
        if not is_admissible(params.q, params.r):
            raise ValueError(f"(q, r) = ({params.q}, {params.r}) is not an admissible pair")
        return Symbol.frac_homog(2.0 / params.q), Outer.TIME, params.q, params.r
    if kind is EstimateKind.KATO:
        return Symbol.frac_homog(1.5), Outer.SPACE, math.inf, 2.0
    if kind is EstimateKind.KENIG_RUIZ:
        return Symbol.frac_homog(-0.25), Outer.SPACE, 4.0, math.inf
    raise ValueError(f"{kind.value} is not measured on a truncated trace")


def _norm_of_projected(field: ComplexField) -> float:
    norm = field.l2_norm()
    if norm == 0.0:
        raise ValueError("Datum has no mass in the requested shell")
    return norm


def linear_ratio(kind: EstimateKind, params: EstimateParams, phi: ComplexField) -> float:
    symbol, outer, q, r = _linear_setup(kind, params)
    piece = lp_project(phi, Projection.shell(params.N), params.bump)
    denominator = _norm_of_projected(piece)
    horizon = prewrap_horizon(phi.grid, params.N, params.T, params.wrap_fraction)
    trace = free_trace(
        fourier_multiplier(piece, symbol), count=params.samples, dt=horizon / (params.samples - 1)
    )
    logger.debug("%s at N=%g over [0, %.3e]", kind.value, params.N, horizon)
    return mixed_norm(trace, outer, q, r) / denominator


# ---------------------------------------------------------------------------
# Maximal function
# ---------------------------------------------------------------------------

#: Edge-to-peak amplitude allowed for the packet in its co-moving window and
#: for an envelope spectrum at the band edge.
FRAME_TOLERANCE = 1e-8
#: Cap on the number of lab-frame points at which the supremum is sampled.
MAX_LAB_POINTS = 8192

_EDGE_MARGIN = 8
_CHUNK = 256


def _edge_ratio(amplitudes: np.ndarray) -> float:
    """Largest amplitude within a few entries of either end of the last axis, over the peak."""
    peak = float(amplitudes.max())
    if peak == 0.0:
        return 0.0
    head = float(amplitudes[..., :_EDGE_MARGIN].max())
    tail = float(amplitudes[..., -_EDGE_MARGIN:].max())
    return max(head, tail) / peak


def comoving_amplitudes(
    coeffs: np.ndarray,
    grid: SpectralGrid,
    T: float,
    samples: int,
    carrier: float = 0.0,
    sym: LinearSymbol = FREE,
) -> Tuple[np.ndarray, float]:
    """``|u(t_j, y + v t_j)|`` on ``samples`` times in ``[0, T]``, and the frame velocity ``v``.

    The frame moves with the group velocity at the spectral centroid of
    *coeffs* (FFT order, wavenumbers shifted by *carrier*).
    """
    eta = np.asarray(grid.wavenumbers)
    power = np.abs(coeffs) ** 2
    centre = float(np.sum(eta * power) / np.sum(power))
    xi0 = carrier + centre
    velocity = -float(sym.dispersion_slope(xi0))
    omega = sym.frame_dispersion(eta - centre, xi0)
    times = np.linspace(0.0, T, samples)
    frames = sfft.ifft(np.exp(1j * np.outer(times, omega)) * coeffs, axis=1)
    return np.abs(frames), velocity


def _sup_along_y_lines(amplitudes, y, xs, velocity, dt):
    # Fixed lattice y_i: the lab point xs is visited at t = (xs - y_i) / velocity.
    samples, n = amplitudes.shape
    s = (xs - y[None, :]) / (velocity * dt)
    inside = (s >= 0.0) & (s <= samples - 1)
    j = np.clip(np.floor(s).astype(np.int64), 0, samples - 2)
    frac = np.clip(s - j, 0.0, 1.0)
    i = np.arange(n)[None, :]
    values = (1.0 - frac) * amplitudes[j, i] + frac * amplitudes[j + 1, i]
    return np.where(inside, values, 0.0).max(axis=1)


def _sup_along_t_lines(amplitudes, y, dx, xs, velocity, times):
    # Fixed sample time t_j: the lab point xs sits at y = xs - velocity t_j.
    samples, n = amplitudes.shape
    s = (xs - velocity * times[None, :] - y[0]) / dx
    inside = (s >= 0.0) & (s <= n - 1)
    i = np.clip(np.floor(s).astype(np.int64), 0, n - 2)
    frac = np.clip(s - i, 0.0, 1.0)
    j = np.arange(samples)[None, :]
    values = (1.0 - frac) * amplitudes[j, i] + frac * amplitudes[j, i + 1]
    return np.where(inside, values, 0.0).max(axis=1)


def lab_supremum_norm(
    amplitudes: np.ndarray, grid: SpectralGrid, velocity: float, T: float
) -> float:
    """``|| sup_{0<=t<=T} |w(t, x - velocity t)| ||_{L^2_x(R)}`` from co-moving amplitudes.

    *amplitudes* holds ``|w(t_j, y_i)|`` on equispaced ``t_j`` and the grid
    points ``y_i``; ``w`` must vanish outside the window. The supremum at a
    lab point is sampled along both families of lattice lines through it
    (fixed ``y_i`` and fixed ``t_j``) with linear interpolation, so it is a
    lower bound of the continuum supremum.
    """
    samples = amplitudes.shape[0]
    y = np.asarray(grid.points)
    dx = grid.dx
    times = np.linspace(0.0, T, samples)
    travel = velocity * T
    if abs(travel) < dx:
        sup = amplitudes.max(axis=0)
        return math.sqrt(dx * float(np.sum(sup * sup)))
    lo = y[0] + min(0.0, travel)
    hi = y[-1] + max(0.0, travel)
    count = int(min(MAX_LAB_POINTS, max(grid.n, math.ceil((hi - lo) / dx) + 1)))
    xs = np.linspace(lo, hi, count)
    sup = np.empty(count)
    dt = times[1] - times[0]
    for start in range(0, count, _CHUNK):
        chunk = xs[start : start + _CHUNK, None]
        sup[start : start + _CHUNK] = np.maximum(
            _sup_along_y_lines(amplitudes, y, chunk, velocity, dt),
            _sup_along_t_lines(amplitudes, y, dx, chunk, velocity, times),
        )
    return math.sqrt(float(trapezoid(sup * sup, xs)))


def maximal_ratio(params: EstimateParams, phi: ComplexField, sym: LinearSymbol = FREE) -> float:
    """``||<D>^{-(1+eps)} e^{itL} P_N phi||_{L^2_x L^inf_t([0, T])}`` over ``||P_N phi||``.

    The solution is followed in the frame moving with its group velocity, so
    the torus only has to hold the dispersing packet and not its travel; the
    supremum is then taken in the lab frame on the whole line. With a
    ``carrier`` the datum is an envelope and the grid resolves only that.

    Raises
    ------
    ValueError
        If ``T`` is outside ``(0, 1]`` or the datum has no mass in the shell.
    ResolutionError
        If the shell does not fit the grid, an envelope spectrum reaches the
        band edge, or the packet reaches the edge of its co-moving window
        before ``T``.
    """
    N, T = params.N, params.T
    if not 0.0 < T <= 1.0:
        raise ValueError(f"The maximal function estimate needs 0 < T <= 1, got {T!r}")
    grid = phi.grid
    coeffs = phi.coefficients() * grid.nyquist_mask
    if params.carrier == 0.0:
        require_resolvable(grid, N)
    elif _edge_ratio(np.abs(sfft.fftshift(coeffs))) > FRAME_TOLERANCE:
        raise ResolutionError(
            f"maximal estimate at N={N:g}: the envelope spectrum reaches the band edge "
            f"{grid.max_wavenumber:g}; refine the grid"
        )
    xi = params.carrier + np.asarray(grid.wavenumbers)
    piece = coeffs * params.bump.shell(np.abs(xi), N)
    denominator = _norm_of_projected(ComplexField.from_coefficients(grid, piece))
    weighted = piece * Symbol.frac_inhomog(-(1.0 + params.eps)).weights(xi)
    amplitudes, velocity = comoving_amplitudes(
        weighted, grid, T, params.samples, params.carrier, sym
    )
    if _edge_ratio(amplitudes) > FRAME_TOLERANCE:
        raise ResolutionError(
            f"maximal estimate at N={N:g}: the packet reaches the edge of its co-moving "
            f"window before T={T:g}; use a longer period"
        )
    value = lab_supremum_norm(amplitudes, grid, velocity, T)
    logger.debug("maximal at N=%g: frame velocity %.3e over [0, %g]", N, velocity, T)
    return value / denominator


def bilinear_ratio(params: EstimateParams, f: ComplexField, g: ComplexField) -> float:
    N1, N2 = params.N, params.N2
    if N2 is None:
        raise ValueError("The bilinear estimate needs a second shell N2")
    if params.enforce_preconditions and N1 < 8.0 * N2:
        raise ValueError(f"Bilinear estimate needs N1 >= 8 N2, got N1={N1:g}, N2={N2:g}")
    pf = lp_project(f, Projection.shell(N1), params.bump)
    pg = lp_project(g, Projection.shell(N2), params.bump)
    value = bilinear_spacetime_norm(pf, pg)
    return value / (N1**-1.5 * _norm_of_projected(pf) * _norm_of_projected(pg))


def refined_bilinear_ratio(params: EstimateParams, f: ComplexField, g: ComplexField) -> float:
    N1, N2, L = params.N, params.N2, params.L
    if N2 is None or L is None:
        raise ValueError("The refined bilinear estimate needs N2 and L")
    if params.enforce_preconditions and (N1 < N2 or L > 2.0 * N2):
        raise ValueError(
            f"Refined bilinear estimate needs N1 >= N2 >= L/2, got N1={N1:g}, N2={N2:g}, L={L:g}"
        )
    if f.grid != g.grid:
        raise ValueError("The refined bilinear estimate needs both data on one grid")
    conjugate = params.sign in ("+", "plus")
    pf = lp_project(f, Projection.shell(N1), params.bump)
    pg = lp_project(g, Projection.shell(N2), params.bump)
    value = bilinear_spacetime_norm(pf, pg, conjugate_second=conjugate, L=L, bump=params.bump)
    return value / (N1**-1.0 * L**-0.5 * _norm_of_projected(pf) * _norm_of_projected(pg))


def estimate_ratio(
    kind: EstimateKind | str, params: EstimateParams, data: Sequence[ComplexField]
) -> float:
    """Measured left-hand side over the estimate's right-hand side.

    Linear kinds take one datum, bilinear kinds two.

    Raises
    ------
    ValueError
        For an unknown kind, the wrong number of data, a non-admissible
        Strichartz pair, or violated frequency-separation preconditions.
    ResolutionError
        If a shell does not fit the grid, or the maximal function's packet
        leaves its co-moving window.
    """
    kind = EstimateKind(kind)
    if params.carrier != 0.0 and kind is not EstimateKind.MAXIMAL:
        raise ValueError(f"{kind.value} does not take envelope data (carrier={params.carrier:g})")
    if kind in LINEAR_KINDS:
        if len(data) != 1:
            raise ValueError(f"{kind.value} takes one datum, got {len(data)}")
        if kind is EstimateKind.MAXIMAL:
            return maximal_ratio(params, data[0])
        return linear_ratio(kind, params, data[0])
    if len(data) != 2:
        raise ValueError(f"{kind.value} takes two data, got {len(data)}")
    if kind is EstimateKind.BILINEAR:
        return bilinear_ratio(params, data[0], data[1])
    return refined_bilinear_ratio(params, data[0], data[1])
