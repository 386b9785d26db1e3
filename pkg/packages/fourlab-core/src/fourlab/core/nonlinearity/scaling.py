"""Scaling-critical and minimal regularity indices, spec classification and the scaling map.

The equation ``i u_t + d^4 u = G`` with ``G`` of degree ``m`` and ``gamma``
derivatives is invariant under ``u(t, x) -> theta^a u(theta^4 t, theta x)``
with ``a = (4 - gamma) / (m - 1)``; ``H^{s_c}`` with ``s_c = 1/2 - a`` is the
invariant homogeneous Sobolev space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from fourlab.spectral import ComplexField, DecayError, ResolutionError, is_dyadic

from .spec import GAMMAS, NonlinearitySpec


class Thresholds(NamedTuple):
    s_c: Fraction
    s0: Fraction


def _check(gamma: int, m: int) -> None:
    if gamma not in GAMMAS:
        raise ValueError(f"Derivative order gamma must be 1, 2 or 3, got {gamma!r}")
    if int(m) != m or m < 3:
        raise ValueError(f"Degree m must be an integer >= 3, got {m!r}")


def scaling_exponent(gamma: int, m: int) -> Fraction:
    """Amplitude exponent ``(4 - gamma) / (m - 1)`` of the scaling map."""
    _check(gamma, m)
    return Fraction(4 - gamma, int(m) - 1)


def regularity_thresholds(gamma: int, m: int) -> Thresholds:
    """``(s_c, s_0)``: the scaling-critical index and the minimal regularity exponent.

    For ``gamma`` in {1, 2} and ``m >= 5`` the minimal exponent is ``s_c``
    approached from above; see :func:`threshold_is_open`.
    """
    s_c = Fraction(1, 2) - scaling_exponent(gamma, m)
    if gamma == 3:
        s0 = Fraction(1) if m == 3 else Fraction(1, 2)
    elif m == 3:
        s0 = Fraction(gamma - 1, 2)
    elif m == 4:
        s0 = Fraction(2 * gamma - 3, 6)
    else:
        s0 = s_c
    return Thresholds(s_c, s0)


def threshold_is_open(gamma: int, m: int) -> bool:
    """True when ``s_0`` is only reached as ``s_c + eps``."""
    _check(gamma, m)
    return gamma in (1, 2) and m >= 5


class WellposednessForm(str, Enum):
    GENERAL = "general"
    BOUNDED_DERIVATIVE = "bounded_derivative"
    SCALE_INVARIANT = "scale_invariant"
    GAUGE = "gauge"


def wellposedness_threshold(gamma: int, m: int, form: WellposednessForm | str) -> Fraction:
    """Lowest Sobolev index with small-data local well-posedness for each nonlinearity form."""
    _check(gamma, m)
    try:
        form = WellposednessForm(form)
    except ValueError:
        raise ValueError(f"Unsupported nonlinearity form: {form!r}") from None
    s_c, s0 = regularity_thresholds(gamma, m)
    if form is WellposednessForm.GENERAL:
        return Fraction(3 * gamma - 1, 2)
    if form is WellposednessForm.BOUNDED_DERIVATIVE:
        return Fraction(gamma - 1, 2)
    if form is WellposednessForm.SCALE_INVARIANT:
        return max(s0, Fraction(0))
    if (gamma == 3 and m >= 5) or (gamma in (1, 2) and m >= 4):
        return s_c
    return s0


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpecProfile:
    gamma: int
    m: int
    l: int  # noqa: E741
    scale_invariant: bool
    gauge_invariant: bool
    thresholds: Optional[Thresholds] = None


def classify_spec(spec: NonlinearitySpec) -> SpecProfile:
    """Report scale and gauge invariance of *spec*, with ``(s_c, s_0)`` when scale-invariant.

    Scale-invariant: one degree ``m = l`` and ``gamma`` derivatives in every
    monomial. Gauge-invariant: one more ``u`` than ``u-bar`` factor in every
    monomial.
    """
    terms = spec.monomials
    scale_inv = bool(terms) and spec.m == spec.l and all(t.total_order == spec.gamma for t in terms)
    gauge_inv = all(len(t.u) == len(t.ubar) + 1 for t in terms)
    thresholds = regularity_thresholds(spec.gamma, spec.m) if scale_inv else None
    return SpecProfile(spec.gamma, spec.m, spec.l, scale_inv, gauge_inv, thresholds)


# ---------------------------------------------------------------------------
# Scaling map
# ---------------------------------------------------------------------------


def scale_field(
    u: ComplexField, theta: float, gamma: int, m: int, tolerance: float = 1e-10
) -> ComplexField:
    """``theta^a u(theta x)`` on the same grid, for dyadic ``theta``.

    ``theta > 1`` samples ``u`` at every ``theta``-th point around the centre
    and fills the rest with zeros; ``theta < 1`` reads ``u`` off its spectral
    interpolation on a grid ``1/theta`` times finer. Both are exact for a
    field that vanishes at the domain edge.

    Raises
    ------
    ResolutionError
        If compressing would push spectral mass past Nyquist.
    DecayError
        If *u* is not localized enough for the dilation to stay in the domain.
    """
    if theta <= 0.0 or not is_dyadic(theta):
        raise ValueError(f"Scaling parameter must be a power of two, got {theta!r}")
    a = float(scaling_exponent(gamma, m))
    if theta == 1.0:
        return u * 1.0
    grid = u.grid
    n = grid.n
    u.require_decay(tolerance)
    if theta > 1.0:
        r = int(theta)
        cutoff = grid.max_wavenumber / theta
        power = np.abs(u.coefficients()) ** 2
        total = float(power.sum())
        outside = float(power[np.abs(np.asarray(grid.wavenumbers)) >= cutoff].sum())
        if total > 0.0 and outside > tolerance**2 * total:
            raise ResolutionError(
                f"Compressing by {theta:g} pushes {math.sqrt(outside / total):.2e} of the "
                "spectrum past Nyquist; refine the grid"
            )
        index = r * np.arange(n) - (r - 1) * (n // 2)
        inside = (index >= 0) & (index < n)
        values = np.zeros(n, dtype=np.complex128)
        values[inside] = u.values[index[inside]]
    else:
        r = int(round(1.0 / theta))
        x = np.asarray(grid.points)
        far = np.abs(u.values[np.abs(x) >= grid.period / (2 * r)])
        if far.size and float(far.max()) > tolerance * u.max_abs():
            raise DecayError(f"Field does not fit in the domain after stretching by {1 / theta:g}")
        fine = u.on_grid(grid.refined(r)).values
        values = fine[np.arange(n) + (r - 1) * (n // 2)]
    return ComplexField(grid, theta**a * values)
