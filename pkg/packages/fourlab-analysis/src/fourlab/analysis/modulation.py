"""Dyadic modulation projections ``Q_A`` and Besov-type restriction norms.

A finite trace is first multiplied by a Tukey (raised-cosine) window that is
flat over the middle 80% of the time span. The windowed trace is transformed
in both variables and each space-time mode is labelled by its distance
``sigma = tau - w(xi)`` to the dispersion relation, wrapped into the
sampled band ``[-pi/dt, pi/dt)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Tuple, Union

import numpy as np
import scipy.fft as sfft
from scipy.signal.windows import tukey

from fourlab.spectral import (
    FREE,
    SMOOTH,
    BumpProfile,
    LinearSymbol,
    ResolutionError,
    SpaceTimeTrace,
    is_dyadic,
)

#: Tapered share of the window (0.2 leaves the middle 80% flat).
WINDOW_TAPER = 0.2
#: Modulations below ``FLOOR_FACTOR / span`` are dominated by window leakage.
FLOOR_FACTOR = 512.0


@dataclass(frozen=True)
class Project:
    """Action: return ``Q_A`` of the windowed trace."""

    A: float


@dataclass(frozen=True)
class XbqNorm:
    """Action: aggregate ``A^b ||Q_A u||_{L^2}`` in ``l^q`` over dyadic ``A``."""

    b: float
    q: float


ModulationAction = Union[Project, XbqNorm]


class ModulationSpectrum:
    """Windowed space-time transform of a trace and its modulation labels."""

    def __init__(
        self,
        trace: SpaceTimeTrace,
        sym: LinearSymbol = FREE,
        taper: float = WINDOW_TAPER,
        bump: BumpProfile = SMOOTH,
    ) -> None:
        self.trace = trace
        self.sym = sym
        self.bump = bump
        self.window = tukey(trace.count, alpha=taper)
        self.windowed = trace.with_values(trace.values * self.window[:, None])

    @cached_property
    def coefficients(self) -> np.ndarray:
        return sfft.fft2(self.windowed.values)

    @property
    def band(self) -> float:
        """Temporal Nyquist ``pi / dt``."""
        return math.pi / self.trace.dt

    @property
    def tau_spacing(self) -> float:
        return 2.0 * math.pi / (self.trace.count * self.trace.dt)

    @cached_property
    def sigma(self) -> np.ndarray:
        tr = self.trace
        tau = 2.0 * math.pi * sfft.fftfreq(tr.count, d=tr.dt)
        omega = self.sym.dispersion(np.asarray(tr.grid.wavenumbers))
        raw = tau[:, None] - omega[None, :]
        return np.mod(raw + self.band, 2.0 * self.band) - self.band

    # -- scales -----------------------------------------------------------

    def check(self, A: float) -> None:
        if not is_dyadic(A):
            raise ValueError(f"Modulation scale must be dyadic, got {A!r}")
        if A / 2.0 >= self.band or 2.0 * A < self.tau_spacing:
            raise ResolutionError(
                f"Modulation A={A:g} is not resolved: need {self.tau_spacing / 2:g} <= A "
                f"and A/2 < {self.band:g}"
            )

    def scales(self) -> Tuple[float, float]:
        """Lowest and highest dyadic ``A`` the sampled trace resolves."""
        lowest = 2.0 ** math.ceil(math.log2(self.tau_spacing / 2.0))
        highest = 2.0 ** math.ceil(math.log2(self.band))
        return lowest, highest

    def floor(self) -> float:
        """Smallest dyadic modulation clear of window leakage."""
        return 2.0 ** math.ceil(math.log2(FLOOR_FACTOR / (self.trace.span)))

    # -- projections ------------------------------------------------------

    def weights(self, A: Optional[float], low_cut: Optional[float] = None) -> np.ndarray:
        """``psi_A(|sigma|)``; ``A=None`` gives the low block ``phi(|sigma| / low_cut)``."""
        r = np.abs(self.sigma)
        if A is None:
            return self.bump(r / float(low_cut))  # type: ignore[arg-type]
        return self.bump.shell(r, A)

    def _invert(self, coeffs: np.ndarray) -> SpaceTimeTrace:
        return self.trace.with_values(sfft.ifft2(coeffs))

    def project(self, A: float) -> SpaceTimeTrace:
        self.check(A)
        return self._invert(self.coefficients * self.weights(A))

    def partition(self) -> List[Tuple[Optional[float], SpaceTimeTrace]]:
        """Low block below the lowest scale plus every dyadic ``Q_A``.

        The pieces sum to the windowed trace.
        """
        lowest, highest = self.scales()
        pieces: List[Tuple[Optional[float], SpaceTimeTrace]] = [
            (None, self._invert(self.coefficients * self.weights(None, low_cut=lowest)))
        ]
        A = 2.0 * lowest
        while A <= highest:
            pieces.append((A, self._invert(self.coefficients * self.weights(A))))
            A *= 2.0
        return pieces

    def projected_l2(self, A: float) -> float:
        """``||Q_A u||_{L^2_{t,x}}`` by Parseval on the 2-D coefficients."""
        self.check(A)
        tr = self.trace
        power = np.abs(self.coefficients * self.weights(A)) ** 2
        return math.sqrt(tr.dt * tr.grid.dx * float(power.sum()) / (tr.count * tr.grid.n))

    def xbq_norm(self, b: float, q: float) -> float:
        if not math.isfinite(b):
            raise ValueError(f"Modulation weight must be finite, got {b!r}")
        if math.isnan(q) or q < 1.0:
            raise ValueError(f"Summation exponent must be >= 1 or inf, got {q!r}")
        lowest, highest = self.scales()
        terms = []
        A = 2.0 * lowest
        while A <= highest:
            terms.append(A**b * self.projected_l2(A))
            A *= 2.0
        values = np.asarray(terms)
        if math.isinf(q):
            return float(values.max(initial=0.0))
        return float(np.sum(values**q) ** (1.0 / q))


def modulation_tools(
    trace: SpaceTimeTrace,
    action: ModulationAction,
    sym: LinearSymbol = FREE,
    bump: BumpProfile = SMOOTH,
) -> Union[SpaceTimeTrace, float]:
    """Dispatch a :class:`Project` or :class:`XbqNorm` action on *trace*."""
    spectrum = ModulationSpectrum(trace, sym=sym, bump=bump)
    if isinstance(action, Project):
        return spectrum.project(action.A)
    if isinstance(action, XbqNorm):
        return spectrum.xbq_norm(action.b, action.q)
    raise ValueError(f"Unsupported modulation action: {action!r}")
