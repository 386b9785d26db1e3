"""Value types shared by the spectral substrate.

Provides enums and frozen dataclasses for cutoff profiles, Fourier symbols,
frequency projections and the linear dispersion relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, auto
from typing import Optional

import numpy as np

# ---------------------------------------------------------------------------
# Cutoff profiles
# ---------------------------------------------------------------------------


class BumpKind(Enum):
    """Realization of the cutoff ``phi`` behind every Littlewood-Paley weight."""

    SMOOTH = auto()
    BRIDGE = auto()
    SHARP = auto()


def _smooth_step(s: np.ndarray) -> np.ndarray:
    """C-infinity step from 0 (s <= 0) to 1 (s >= 1)."""
    s = np.clip(s, 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore"):
        a = np.where(s > 0.0, np.exp(-1.0 / np.where(s > 0.0, s, 1.0)), 0.0)
        b = np.where(s < 1.0, np.exp(-1.0 / np.where(s < 1.0, 1.0 - s, 1.0)), 0.0)
    return a / (a + b)


@dataclass(frozen=True)
class BumpProfile:
    """Even cutoff with ``phi(r) = 1`` on ``|r| <= 1`` and ``phi(r) = 0`` on ``|r| >= 2``.

    ``SMOOTH`` joins the two plateaus with a ratio of ``exp(-1/s)`` factors and is
    C-infinity everywhere. ``BRIDGE`` uses ``exp(1 - 1/(1 - (|r| - 1)^2))`` on
    ``1 < |r| < 2``, which is only C^1 at ``|r| = 1``. ``SHARP`` is the indicator of
    ``|r| <= 1`` and exists for cross-checks.
    """

    kind: BumpKind = BumpKind.SMOOTH

    def __call__(self, r: np.ndarray | float) -> np.ndarray:
        a = np.abs(np.asarray(r, dtype=np.float64))
        if self.kind is BumpKind.SHARP:
            return (a <= 1.0).astype(np.float64)
        if self.kind is BumpKind.SMOOTH:
            return 1.0 - _smooth_step(a - 1.0)
        s = a - 1.0
        inside = (s > 0.0) & (s < 1.0)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            bridge = np.exp(1.0 - 1.0 / np.where(inside, 1.0 - s * s, 1.0))
        return np.where(a <= 1.0, 1.0, np.where(inside, bridge, 0.0))

    def shell(self, r: np.ndarray | float, N: float) -> np.ndarray:
        """Dyadic shell weight ``psi_N(r) = phi(r/N) - phi(2r/N)``."""
        r = np.asarray(r, dtype=np.float64)
        return self(r / N) - self(2.0 * r / N)


SMOOTH = BumpProfile(BumpKind.SMOOTH)
BRIDGE = BumpProfile(BumpKind.BRIDGE)
SHARP = BumpProfile(BumpKind.SHARP)


def is_dyadic(N: float) -> bool:
    """True when *N* is an exact (possibly negative) power of two."""
    if not (isinstance(N, (int, float)) and math.isfinite(N) and N > 0):
        return False
    mantissa, _ = math.frexp(N)
    return mantissa == 0.5


@dataclass(frozen=True)
class DyadicShell:
    """A dyadic frequency scale together with its resolvability on a grid."""

    N: float
    resolvable: bool


# ---------------------------------------------------------------------------
# Fourier symbols and projections
# ---------------------------------------------------------------------------


class SymbolKind(Enum):
    DERIV = auto()
    FRAC_HOMOG = auto()
    FRAC_INHOMOG = auto()


@dataclass(frozen=True)
class Symbol:
    """A Fourier multiplier symbol: ``(i xi)^k``, ``|xi|^s`` or ``(1 + |xi|)^s``."""

    kind: SymbolKind
    order: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.order):
            raise ValueError(f"Symbol order must be finite, got {self.order!r}")
        if self.kind is SymbolKind.DERIV and (self.order < 0 or self.order != int(self.order)):
            raise ValueError(f"Derivative order must be a non-negative integer: {self.order!r}")

    @classmethod
    def deriv(cls, k: int) -> Symbol:
        return cls(SymbolKind.DERIV, k)

    @classmethod
    def frac_homog(cls, s: float) -> Symbol:
        return cls(SymbolKind.FRAC_HOMOG, s)

    @classmethod
    def frac_inhomog(cls, s: float) -> Symbol:
        return cls(SymbolKind.FRAC_INHOMOG, s)

    def weights(self, xi: np.ndarray) -> np.ndarray:
        """Evaluate the symbol on the wavenumbers *xi* (Nyquist handling is the caller's)."""
        if self.kind is SymbolKind.DERIV:
            return (1j * xi) ** int(self.order)
        r = np.abs(xi)
        if self.kind is SymbolKind.FRAC_INHOMOG:
            return (1.0 + r) ** self.order
        out = np.zeros_like(r)
        nonzero = r > 0.0
        out[nonzero] = r[nonzero] ** self.order
        return out


class ProjectionKind(Enum):
    SHELL = auto()
    LOW = auto()
    HIGH = auto()
    PLUS = auto()
    MINUS = auto()


@dataclass(frozen=True)
class Projection:
    """A frequency projection: ``P_N``, ``P_{<=N}``, ``P_{>N}``, ``P_+`` or ``P_-``."""

    kind: ProjectionKind
    N: Optional[float] = None

    def __post_init__(self) -> None:
        needs_scale = self.kind in (ProjectionKind.SHELL, ProjectionKind.LOW, ProjectionKind.HIGH)
        if needs_scale and not is_dyadic(self.N if self.N is not None else -1.0):
            raise ValueError(
                f"{self.kind.name.lower()} projection needs a dyadic N, got {self.N!r}"
            )

    @classmethod
    def shell(cls, N: float) -> Projection:
        return cls(ProjectionKind.SHELL, N)

    @classmethod
    def low(cls, N: float) -> Projection:
        return cls(ProjectionKind.LOW, N)

    @classmethod
    def high(cls, N: float) -> Projection:
        return cls(ProjectionKind.HIGH, N)

    @classmethod
    def plus(cls) -> Projection:
        return cls(ProjectionKind.PLUS)

    @classmethod
    def minus(cls) -> Projection:
        return cls(ProjectionKind.MINUS)


# ---------------------------------------------------------------------------
# Linear dispersion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearSymbol:
    """Linear part ``nu * d_x^4 + beta * d_x^2`` of the evolution equation.

    The free group multiplies ``f^(xi)`` by ``exp(i t (nu xi^4 - beta xi^2))``.
    """

    nu: float = 1.0
    beta: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.nu) and math.isfinite(self.beta)):
            raise ValueError(f"Non-finite linear symbol: nu={self.nu!r}, beta={self.beta!r}")
        if self.nu == 0.0 and self.beta == 0.0:
            raise ValueError("Linear symbol needs nu or beta to be non-zero")

    def dispersion(self, xi: np.ndarray) -> np.ndarray:
        """Angular frequency ``nu xi^4 - beta xi^2`` of each mode."""
        xi2 = xi * xi
        return self.nu * xi2 * xi2 - self.beta * xi2

    def dispersion_slope(self, xi: np.ndarray | float) -> np.ndarray:
        """``d omega / d xi = 4 nu xi^3 - 2 beta xi``.

        A packet centred at ``xi`` travels with velocity ``-slope``.
        """
        xi = np.asarray(xi, dtype=np.float64)
        return 4.0 * self.nu * xi**3 - 2.0 * self.beta * xi

    def group_speed(self, xi: np.ndarray | float) -> np.ndarray:
        """Magnitude of the group velocity ``|4 nu xi^3 - 2 beta xi|``."""
        return np.abs(self.dispersion_slope(xi))

    def frame_dispersion(self, delta: np.ndarray, xi0: float) -> np.ndarray:
        """``omega(xi0 + delta) - omega(xi0) - omega'(xi0) delta``, expanded in *delta*.

        This is the dispersion seen from the frame moving with the packet at
        ``xi0``; the expansion keeps its digits when ``omega(xi0)`` is large.
        """
        d2 = delta * delta
        return self.nu * d2 * (6.0 * xi0 * xi0 + 4.0 * xi0 * delta + d2) - self.beta * d2


FREE = LinearSymbol(1.0, 0.0)
