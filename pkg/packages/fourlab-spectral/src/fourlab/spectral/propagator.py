"""The free fourth-order group, space-time traces, Duhamel integrals and the kernel.

Time integrals are taken in the interaction picture: every forcing sample is
pulled back by the exact free group, integrated with composite Simpson
weights, and pushed forward again.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np
import scipy.fft as sfft
from scipy.integrate import cumulative_simpson, cumulative_trapezoid, quad, quad_vec, simpson
from scipy.interpolate import CubicSpline
from scipy.special import gamma

from .grid import ComplexField, SpectralGrid, _frozen
from .types import FREE, LinearSymbol

# ---------------------------------------------------------------------------
# Traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SpaceTimeTrace:
    """Snapshots ``u(t0 + j dt)`` on a common grid, stored as a ``(count, n)`` array."""

    grid: SpectralGrid
    t0: float
    dt: float
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.complex128, copy=True)
        if values.ndim != 2 or values.shape[1] != self.grid.n:
            raise ValueError(f"Trace needs shape (count, {self.grid.n}), got {values.shape}")
        if values.shape[0] < 2:
            raise ValueError("A trace needs at least 2 snapshots")
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise ValueError(f"Trace step must be positive, got {self.dt!r}")
        if not math.isfinite(self.t0):
            raise ValueError(f"Trace start must be finite, got {self.t0!r}")
        object.__setattr__(self, "values", _frozen(values))

    @classmethod
    def from_fields(cls, fields: Sequence[ComplexField], t0: float, dt: float) -> SpaceTimeTrace:
        if not fields:
            raise ValueError("A trace needs at least 2 snapshots")
        grid = fields[0].grid
        if any(f.grid != grid for f in fields):
            raise ValueError("All snapshots of a trace must share one grid")
        return cls(grid, t0, dt, np.stack([f.values for f in fields]))

    @property
    def count(self) -> int:
        return int(self.values.shape[0])

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.count)

    @property
    def t_final(self) -> float:
        return self.t0 + self.dt * (self.count - 1)

    @property
    def span(self) -> float:
        return self.dt * (self.count - 1)

    @property
    def fields(self) -> Tuple[ComplexField, ...]:
        return tuple(self[j] for j in range(self.count))

    def coefficients(self) -> np.ndarray:
        """Raw FFT coefficients of every snapshot (row-wise)."""
        return sfft.fft(self.values, axis=1)

    def with_values(self, values: np.ndarray) -> SpaceTimeTrace:
        return SpaceTimeTrace(self.grid, self.t0, self.dt, values)

    def boundary_ratio(self, margin: int = 8) -> float:
        peak = float(np.max(np.abs(self.values)))
        if peak == 0.0:
            return 0.0
        edge = np.abs(np.concatenate([self.values[:, :margin], self.values[:, -margin:]], axis=1))
        return float(edge.max() / peak)

    def __len__(self) -> int:
        return self.count

    def __getitem__(self, j: int) -> ComplexField:
        return ComplexField(self.grid, self.values[j])

    def __iter__(self) -> Iterator[ComplexField]:
        for j in range(self.count):
            yield self[j]


# ---------------------------------------------------------------------------
# Free group
# ---------------------------------------------------------------------------


def _dispersion(grid: SpectralGrid, sym: LinearSymbol) -> np.ndarray:
    return sym.dispersion(np.asarray(grid.wavenumbers))


def propagator_weights(grid: SpectralGrid, t: float, sym: LinearSymbol = FREE) -> np.ndarray:
    """``exp(i t (nu xi^4 - beta xi^2))`` in FFT order with the Nyquist mode removed."""
    if not math.isfinite(t):
        raise ValueError(f"Evolution time must be finite, got {t!r}")
    return np.exp(1j * t * _dispersion(grid, sym)) * grid.nyquist_mask


def free_evolve(f: ComplexField, t: float, sym: LinearSymbol = FREE) -> ComplexField:
    """Apply the free group ``exp(i t (nu d^4 + beta d^2))`` to *f*; unitary on L^2."""
    weights = propagator_weights(f.grid, t, sym)
    return ComplexField.from_coefficients(f.grid, f.coefficients() * weights)


def free_trace(
    f: ComplexField,
    count: int,
    dt: float,
    t0: float = 0.0,
    sym: LinearSymbol = FREE,
) -> SpaceTimeTrace:
    """Sample the free evolution of *f* at ``t0 + j dt`` for ``j < count``."""
    times = t0 + dt * np.arange(count)
    phases = np.exp(1j * np.outer(times, _dispersion(f.grid, sym))) * f.grid.nyquist_mask
    return SpaceTimeTrace(f.grid, t0, dt, sfft.ifft(phases * f.coefficients(), axis=1))


# ---------------------------------------------------------------------------
# Duhamel integral
# ---------------------------------------------------------------------------


def _pulled_back(forcing: SpaceTimeTrace, sym: LinearSymbol) -> np.ndarray:
    """Interaction-picture samples ``exp(-i t_j w) F^_j``."""
    omega = _dispersion(forcing.grid, sym)
    return np.exp(-1j * np.outer(forcing.times, omega)) * forcing.coefficients()


def duhamel_integral(forcing: SpaceTimeTrace, t: float, sym: LinearSymbol = FREE) -> ComplexField:
    """``I[F](t) = int_{t0}^{t} exp(i (t - s) L) F(s) ds`` from the trace start ``t0``.

    Lattice intervals use composite Simpson; a trailing partial interval is
    integrated from a cubic spline through the pulled-back samples.
    """
    grid = forcing.grid
    slack = 1e-9 * forcing.dt
    if not math.isfinite(t) or t < forcing.t0 - slack or t > forcing.t_final + slack:
        raise ValueError(
            f"Time {t!r} is outside the trace range [{forcing.t0:g}, {forcing.t_final:g}]"
        )
    t = min(max(t, forcing.t0), forcing.t_final)
    k = int(math.floor((t - forcing.t0) / forcing.dt + 1e-9))
    if k == 0 and t - forcing.t0 <= slack:
        return ComplexField.zeros(grid)

    g = _pulled_back(forcing, sym)
    if k == 0:
        total = np.zeros(grid.n, dtype=np.complex128)
    elif k == 1:
        total = 0.5 * forcing.dt * (g[0] + g[1])
    else:
        total = simpson(g[: k + 1], dx=forcing.dt, axis=0)

    t_k = forcing.t0 + k * forcing.dt
    if t - t_k > slack:
        stop = min(forcing.count, k + 3)
        start = max(0, stop - 4)
        spline = CubicSpline(forcing.times[start:stop], g[start:stop], axis=0)
        total = total + spline.integrate(t_k, t)

    weights = propagator_weights(grid, t, sym)
    return ComplexField.from_coefficients(grid, weights * total)


def _cumulative(g: np.ndarray, dx: float) -> np.ndarray:
    # cumulative_simpson fills a real buffer; complex input loses its imaginary part.
    rule = cumulative_simpson if g.shape[0] >= 3 else cumulative_trapezoid
    real = rule(g.real, dx=dx, axis=0, initial=0)
    imag = rule(g.imag, dx=dx, axis=0, initial=0)
    return real + 1j * imag


def duhamel_trace(forcing: SpaceTimeTrace, sym: LinearSymbol = FREE) -> SpaceTimeTrace:
    """``I[F]`` at every snapshot of *forcing*, by cumulative Simpson weights."""
    cumulative = _cumulative(_pulled_back(forcing, sym), forcing.dt)
    omega = _dispersion(forcing.grid, sym)
    phases = np.exp(1j * np.outer(forcing.times, omega)) * forcing.grid.nyquist_mask
    return forcing.with_values(sfft.ifft(phases * cumulative, axis=1))


# ---------------------------------------------------------------------------
# Fundamental solution
# ---------------------------------------------------------------------------

_NORM = 2.0 / math.sqrt(2.0 * math.pi)
#: Opening of the ray used for the tapered quadrature.
RAY_ANGLE = math.pi / 32.0


def kernel_at_origin(t: float) -> complex:
    """Closed form ``K(t, 0) = 2 Gamma(5/4) exp(i pi/8) / (sqrt(2 pi) |t|^{1/4})``."""
    if t == 0 or not math.isfinite(t):
        raise ValueError(f"Kernel needs a non-zero finite time, got {t!r}")
    value = _NORM * gamma(1.25) * complex(math.cos(math.pi / 8), math.sin(math.pi / 8))
    value /= abs(t) ** 0.25
    return value if t > 0 else value.conjugate()


def _ray_length(t: float, x_max: float, angle: float) -> float:
    decay = abs(t) * math.sin(4.0 * angle)
    length = (60.0 / decay) ** 0.25
    for _ in range(8):
        length = ((60.0 + x_max * length * math.sin(angle)) / decay) ** 0.25
    return length


def kernel_profile(
    t: float, xs: Sequence[float] | np.ndarray, cutoff: float, tol: float = 1e-13
) -> np.ndarray:
    """Values of ``K(t, x) = (2 pi)^{-1/2} int exp(i (x xi + t xi^4)) dxi`` at *xs*.

    The integrand carries the taper ``exp(-(xi / cutoff)^8)``. The tapered
    integral is even in ``xi`` and analytic, so it is evaluated along the ray
    ``xi = r exp(i RAY_ANGLE)`` where both the dispersive factor and the taper
    decay. Callers certify convergence by doubling *cutoff*
    (see :func:`certify_kernel`).
    """
    if t == 0 or not math.isfinite(t):
        raise ValueError(f"Kernel needs a non-zero finite time, got {t!r}")
    if not (math.isfinite(cutoff) and cutoff > 0):
        raise ValueError(f"Kernel cutoff must be positive, got {cutoff!r}")
    x = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    tau = abs(t)
    rot = complex(math.cos(RAY_ANGLE), math.sin(RAY_ANGLE))
    rot4 = rot**4
    rot8 = rot**8
    length = _ray_length(tau, float(np.max(np.abs(x))) if x.size else 0.0, RAY_ANGLE)

    def integrand(r: float) -> np.ndarray:
        value = np.cos(x * r * rot) * np.exp(1j * tau * r**4 * rot4 - (r / cutoff) ** 8 * rot8)
        return np.concatenate([value.real, value.imag])

    stacked, _ = quad_vec(integrand, 0.0, length, epsabs=tol, epsrel=tol, limit=4000)
    values = _NORM * rot * (stacked[: x.size] + 1j * stacked[x.size :])
    return values if t > 0 else np.conj(values)


def kernel_reference(t: float, xs: Sequence[float] | np.ndarray) -> np.ndarray:
    """Untapered ``K(t, x)`` from the steepest-descent ray ``xi = r exp(i pi/8)``.

    Along that ray ``exp(i t xi^4) = exp(-t r^4)``; each point is an
    independent adaptive quadrature.
    """
    if t == 0 or not math.isfinite(t):
        raise ValueError(f"Kernel needs a non-zero finite time, got {t!r}")
    tau = abs(t)
    rot = complex(math.cos(math.pi / 8), math.sin(math.pi / 8))
    out = np.empty(len(xs), dtype=np.complex128)
    for i, x in enumerate(np.asarray(xs, dtype=np.float64)):
        value, _ = quad(
            lambda r, x=x: np.cos(x * r * rot) * math.exp(-tau * r**4),
            0.0,
            np.inf,
            complex_func=True,
            epsabs=1e-14,
            epsrel=1e-13,
            limit=400,
        )
        out[i] = _NORM * rot * value
    return out if t > 0 else np.conj(out)


@dataclass(frozen=True)
class KernelCertificate:
    """Kernel values at the largest cutoff and the spread across two doublings."""

    t: float
    cutoff: float
    values: np.ndarray
    delta: float
    tolerance: float

    @property
    def converged(self) -> bool:
        return self.delta < self.tolerance


def certify_kernel(
    t: float, xs: Sequence[float] | np.ndarray, cutoff: float, tolerance: float = 1e-8
) -> KernelCertificate:
    """Evaluate at ``cutoff``, ``2 cutoff`` and ``4 cutoff`` and report the largest change."""
    runs = [kernel_profile(t, xs, cutoff * 2**j) for j in range(3)]
    delta = max(float(np.max(np.abs(runs[j + 1] - runs[j]))) for j in range(2))
    return KernelCertificate(
        t=t, cutoff=4 * cutoff, values=runs[-1], delta=delta, tolerance=tolerance
    )
