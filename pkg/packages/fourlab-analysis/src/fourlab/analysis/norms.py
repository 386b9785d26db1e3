"""Mixed Lebesgue norms of space-time traces and the dyadic solution norms.

``L^infinity`` norms are grid maxima, i.e. lower bounds of the continuum
supremum; tests require them to be stable under refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Tuple, Union

import numpy as np
import scipy.fft as sfft

from fourlab.spectral import SpaceTimeTrace

DEFAULT_EPS = 0.01


class Outer(str, Enum):
    """Variable carried by the outer norm of a mixed norm."""

    TIME = "time"
    SPACE = "space"


def _check_exponent(p: float) -> float:
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise ValueError(f"Lebesgue exponent must be >= 1 or inf, got {p!r}")
    return p


def _time_weights(count: int, dt: float) -> np.ndarray:
    weights = np.full(count, dt)
    weights[0] = weights[-1] = 0.5 * dt
    return weights


def _reduce(a: np.ndarray, p: float, weights: np.ndarray, axis: int) -> np.ndarray:
    if math.isinf(p):
        return a.max(axis=axis)
    shape = [1, 1]
    shape[axis] = -1
    return (np.sum(weights.reshape(shape) * a**p, axis=axis)) ** (1.0 / p)


def mixed_norm(trace: SpaceTimeTrace, outer: Union[Outer, str], q: float, r: float) -> float:
    """``L^q_t L^r_x`` (``outer="time"``) or ``L^q_x L^r_t`` (``outer="space"``).

    Space uses the periodic trapezoid rule, time the trapezoid rule on the
    uniform snapshot lattice, and infinite exponents take the maximum.
    """
    outer = Outer(outer)
    q = _check_exponent(q)
    r = _check_exponent(r)
    a = np.abs(trace.values)
    w_t = _time_weights(trace.count, trace.dt)
    w_x = np.full(trace.grid.n, trace.grid.dx)
    if outer is Outer.TIME:
        inner = _reduce(a, r, w_x, axis=1)
        return float(_reduce(inner[None, :], q, w_t, axis=1)[0])
    inner = _reduce(a, r, w_t, axis=0)
    return float(_reduce(inner[None, :], q, w_x, axis=1)[0])


# ---------------------------------------------------------------------------
# Dyadic solution norms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class XnBreakdown:
    """The five Lebesgue components of the localized solution norm at scale ``N``."""

    N: float
    eps: float
    l_inf_t_l2x: float
    l4t_linfx: float
    l2x_linft: float
    l4x_linft: float
    linfx_l2t: float

    @property
    def weighted_total(self) -> float:
        N = self.N
        return (
            self.l_inf_t_l2x
            + N**0.5 * self.l4t_linfx
            + N ** (-(1.0 + self.eps)) * self.l2x_linft
            + N**-0.25 * self.l4x_linft
            + N**1.5 * self.linfx_l2t
        )


def shell_fraction(trace: SpaceTimeTrace, N: float) -> float:
    """Share of the trace's spectral mass on ``N/2 < |xi| < 2N``."""
    power = np.abs(sfft.fft(trace.values, axis=1)) ** 2
    total = float(power.sum())
    if total == 0.0:
        return 1.0
    r = np.abs(np.asarray(trace.grid.wavenumbers))
    inside = (r > 0.5 * N) & (r < 2.0 * N)
    return float(power[:, inside].sum() / total)


def xn_norm(
    trace: SpaceTimeTrace,
    N: float,
    eps: float = DEFAULT_EPS,
    check_localization: bool = True,
) -> XnBreakdown:
    """Lebesgue components of ``||u||_{X_N}`` for a shell-localized trace.

    Raises
    ------
    ValueError
        If less than 99% of the spectral mass lies in the shell of ``N``.
    """
    if not (math.isfinite(eps) and eps > 0):
        raise ValueError(f"eps must be positive, got {eps!r}")
    if check_localization:
        fraction = shell_fraction(trace, N)
        if fraction < 0.99:
            raise ValueError(
                f"Trace is not localized at N={N:g}: only {100 * fraction:.2f}% of mass in shell"
            )
    return XnBreakdown(
        N=N,
        eps=eps,
        l_inf_t_l2x=mixed_norm(trace, Outer.TIME, math.inf, 2),
        l4t_linfx=mixed_norm(trace, Outer.TIME, 4, math.inf),
        l2x_linft=mixed_norm(trace, Outer.SPACE, 2, math.inf),
        l4x_linft=mixed_norm(trace, Outer.SPACE, 4, math.inf),
        linfx_l2t=mixed_norm(trace, Outer.SPACE, math.inf, 2),
    )


def xs_norm(
    traces_by_shell: Union[Mapping[float, SpaceTimeTrace], Iterable[Tuple[float, SpaceTimeTrace]]],
    s: float,
    eps: float = DEFAULT_EPS,
) -> float:
    """``sqrt(||P_{<=1} u||_{X_1}^2 + sum_N N^{2s} ||P_N u||_{X_N}^2)``.

    Key ``1`` holds the low-frequency block; every other key is a dyadic shell
    ``N >= 2`` carrying the already projected trace.
    """
    if isinstance(traces_by_shell, Mapping):
        items = list(traces_by_shell.items())
    else:
        items = list(traces_by_shell)
    seen = set()
    total = 0.0
    for N, trace in items:
        N = float(N)
        mantissa, _ = math.frexp(N)
        if N < 1.0 or mantissa != 0.5:
            raise ValueError(f"Shell keys must be dyadic and >= 1, got {N!r}")
        if N in seen:
            raise ValueError(f"Overlapping shell set: N={N:g} given twice")
        seen.add(N)
        low = N == 1.0
        part = xn_norm(trace, N, eps, check_localization=not low).weighted_total
        total += (1.0 if low else N ** (2.0 * s)) * part**2
    return math.sqrt(total)
