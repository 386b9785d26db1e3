"""Third Picard iterate of narrow-band data by quadrature over the frequency simplex.

For ``f^_N = a 1_{[N - w, N + w]}`` with ``a = N^{-s + 1/2}`` and ``w = 1/N`` the
third iterate ``A_3(t) = I[d^gamma (|e^{itd^4} f_N|^2 e^{itd^4} f_N)](t)`` has
the spectrum::

    A_3^(t, xi) = (i xi)^gamma a^3 / (2 pi) e^{i t xi^4}
                  * int_{xi1 - xi2 + xi3 = xi} (e^{i t W} - 1) / (i W) dxi1 dxi2

with ``W = xi1^4 - xi2^4 + xi3^4 - xi^4``. The band of width ``2/N`` cannot be
resolved by a grid at large ``N``, so each ``xi_i`` is sampled at ``M``
midpoints of the band and the time integral is taken in closed form.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from fourlab.spectral import is_dyadic

logger = logging.getLogger(__name__)

#: Midpoints per band.
DEFAULT_POINTS = 32
#: Snapshots on ``(0, horizon]`` for the time supremum.
DEFAULT_TIME_SAMPLES = 33


class InflationVariant(str, Enum):
    """``CUBIC``: ``d^gamma(|u|^2 u)``. ``DERIVATIVE_CUBED``: ``|d^gamma u|^2 d^gamma u``."""

    CUBIC = "cubic"
    DERIVATIVE_CUBED = "derivative_cubed"


@dataclass(frozen=True)
class InflationDatum:
    """Indicator datum ``N^{-s + 1/2} 1_{[N - 1/N, N + 1/N]}``."""

    N: float
    s: float
    gamma: int

    def __post_init__(self) -> None:
        if not is_dyadic(self.N) or self.N < 2.0:
            raise ValueError(f"Inflation frequency must be dyadic and >= 2, got {self.N!r}")
        if not math.isfinite(self.s):
            raise ValueError(f"Sobolev index must be finite, got {self.s!r}")
        if self.gamma not in (1, 2, 3):
            raise ValueError(f"Derivative order gamma must be 1, 2 or 3, got {self.gamma!r}")

    @property
    def half_width(self) -> float:
        return 1.0 / self.N

    @property
    def amplitude(self) -> float:
        return self.N ** (0.5 - self.s)


def inflation_rate(s: float, gamma: int, variant: InflationVariant | str = "cubic") -> float:
    """Growth exponent of ``sup_t ||A_3(t)||_{H^s}`` in ``N``."""
    variant = InflationVariant(variant)
    derivatives = gamma if variant is InflationVariant.CUBIC else 3 * gamma
    return -2.0 * s + derivatives - 1.0


def inflation_threshold(gamma: int, variant: InflationVariant | str = "cubic") -> float:
    """Regularity below which the rate is positive."""
    variant = InflationVariant(variant)
    derivatives = gamma if variant is InflationVariant.CUBIC else 3 * gamma
    return 0.5 * (derivatives - 1)


def _resonance(t: float, omega: np.ndarray) -> np.ndarray:
    """``int_0^t e^{i t' W} dt' = (e^{itW} - 1)/(iW)``, equal to ``t`` at ``W = 0``."""
    theta = t * omega
    return t * np.exp(0.5j * theta) * np.sinc(theta / (2.0 * math.pi))


def third_iterate_norms(
    datum: InflationDatum,
    times: Sequence[float],
    points: int = DEFAULT_POINTS,
    variant: InflationVariant | str = "cubic",
) -> np.ndarray:
    """``||A_3(t)||_{H^s}`` at each of *times*.

    The output frequencies ``xi1 - xi2 + xi3`` of the midpoint lattice fall on
    a lattice of the same spacing, so the sum over the simplex is a bincount.
    """
    variant = InflationVariant(variant)
    if points < 2:
        raise ValueError(f"Need at least 2 quadrature points per band, got {points!r}")
    N, w, gamma = datum.N, datum.half_width, datum.gamma
    h = 2.0 * w / points
    xi = N - w + (np.arange(points) + 0.5) * h
    x1 = xi[:, None, None]
    x2 = xi[None, :, None]
    x3 = xi[None, None, :]
    index = np.arange(points)
    out = (index[:, None, None] - index[None, :, None] + index[None, None, :]) + (points - 1)
    out = out.ravel()
    size = 3 * points - 2
    xi_out = N - w + (np.arange(size) - (points - 1) + 0.5) * h
    omega = (x1**4 - x2**4 + x3**4 - (x1 - x2 + x3) ** 4).ravel()

    if variant is InflationVariant.CUBIC:
        inner = np.ones_like(omega, dtype=np.complex128)
        outer = np.abs(xi_out) ** gamma
    else:
        d1 = (1j * x1) ** gamma
        d2 = np.conj((1j * x2) ** gamma)
        d3 = (1j * x3) ** gamma
        inner = (d1 * d2 * d3).ravel()
        outer = np.ones(size)

    scale = datum.amplitude**3 / (2.0 * math.pi) * h * h
    weight = (1.0 + np.abs(xi_out)) ** (2.0 * datum.s)
    norms = np.empty(len(times))
    for k, t in enumerate(times):
        summand = inner * _resonance(float(t), omega)
        total = np.bincount(out, weights=summand.real, minlength=size) + 1j * np.bincount(
            out, weights=summand.imag, minlength=size
        )
        spectrum = scale * outer * total
        norms[k] = math.sqrt(h * float(np.sum(weight * np.abs(spectrum) ** 2)))
    return norms


def sup_third_iterate(
    datum: InflationDatum,
    points: int = DEFAULT_POINTS,
    horizon: float = 1.0,
    time_samples: int = DEFAULT_TIME_SAMPLES,
    variant: InflationVariant | str = "cubic",
) -> float:
    """``max_{0 < t <= horizon} ||A_3(t)||_{H^s}`` over *time_samples* equispaced times."""
    if not (math.isfinite(horizon) and horizon > 0):
        raise ValueError(f"Horizon must be positive, got {horizon!r}")
    times = horizon * np.arange(1, time_samples + 1) / time_samples
    value = float(np.max(third_iterate_norms(datum, times, points, variant)))
    logger.debug(
        "A_3 sup at N=%g, s=%g, gamma=%d (M=%d): %.6e", datum.N, datum.s, datum.gamma, points, value
    )
    return value
