"""Recursion operator of the derivative NLS hierarchy and its first two flows.

With ``U = (u, u-bar)``::

    D1 (v, w) = (v_x, -w_x)
    D2 (v, w) = -U(x) int_x^inf (u-bar v_y + u w_y) dy
    Lambda    = (i/2) (D1 + i D2)

so ``-2i Lambda = D1 + i D2``. The n-th flow is
``i u_t + d_x {(-2i Lambda)^(2n-1) U}_1 = 0``: ``n = 1`` is the derivative
NLS and ``n = 2`` the fourth-order equation with the septic nonlinearity of
:class:`~fourlab.core.nonlinearity.DnlsHierarchyN2`.

The tail integral runs to the right edge of the periodic domain instead of
infinity, so every input must vanish there to working precision.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.fft as sfft

from fourlab.spectral import ComplexField, SpectralGrid, Symbol, fourier_multiplier

from .nonlinearity import DnlsHierarchyN2, build_spec, evaluate_nonlinearity

logger = logging.getLogger(__name__)

#: Edge-to-peak amplitude below which a field counts as vanishing at the boundary.
DECAY_TOLERANCE = 1e-10


@dataclass(frozen=True)
class PairField:
    """A pair ``(first, second)`` on one grid; built from ``u`` it is ``(u, u-bar)``."""

    first: ComplexField
    second: ComplexField

    def __post_init__(self) -> None:
        if self.first.grid != self.second.grid:
            raise ValueError("Pair components live on different grids")

    @classmethod
    def from_field(cls, u: ComplexField) -> PairField:
        return cls(u, u.conj())

    @property
    def grid(self) -> SpectralGrid:
        return self.first.grid

    def __add__(self, other: PairField) -> PairField:
        return PairField(self.first + other.first, self.second + other.second)

    def __mul__(self, scalar: complex) -> PairField:
        return PairField(self.first * scalar, self.second * scalar)

    __rmul__ = __mul__

    def require_decay(self, tolerance: float = DECAY_TOLERANCE) -> None:
        self.first.require_decay(tolerance)
        self.second.require_decay(tolerance)


def _dx(f: ComplexField) -> ComplexField:
    return fourier_multiplier(f, Symbol.deriv(1))


def tail_integral(g: ComplexField) -> ComplexField:
    """``int_x^{X_max} g(y) dy`` on every grid point.

    The mean-free part of *g* is integrated spectrally, the mean linearly,
    and the constant is fixed so the integral vanishes at the right edge.
    """
    grid = g.grid
    coeffs = g.coefficients()
    mean = coeffs[0] / grid.n
    xi = np.asarray(grid.wavenumbers)
    anti = np.zeros_like(coeffs)
    nonzero = xi != 0.0
    anti[nonzero] = coeffs[nonzero] / (1j * xi[nonzero]) * grid.nyquist_mask[nonzero]
    primitive = sfft.ifft(anti)
    x = np.asarray(grid.points)
    right = grid.x0 + grid.period
    return ComplexField(grid, primitive[0] - primitive + mean * (right - x))


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------


def d1_apply(V: PairField) -> PairField:
    return PairField(_dx(V.first), -_dx(V.second))


def _d2(U: PairField, V: PairField) -> PairField:
    integrand = U.first.conj().values * _dx(V.first).values
    integrand = integrand + U.second.conj().values * _dx(V.second).values
    tail = tail_integral(V.first.with_values(integrand)).values
    return PairField(
        U.first.with_values(-U.first.values * tail),
        U.second.with_values(-U.second.values * tail),
    )


def d2_apply(U: PairField, V: PairField) -> PairField:
    """``-U(x) int_x^inf U(y)^* V_y(y) dy``.

    Raises
    ------
    DecayError
        If ``U`` or ``V`` does not vanish at the domain edge.
    """
    U.require_decay()
    V.require_decay()
    return _d2(U, V)


def _minus_2i_lambda(U: PairField, V: PairField) -> PairField:
    return d1_apply(V) + _d2(U, V) * 1j


def recursion_apply(U: PairField, V: PairField) -> PairField:
    """``Lambda V = (i/2)(D1 V + i D2(U) V)``."""
    U.require_decay()
    V.require_decay()
    return _minus_2i_lambda(U, V) * 0.5j


def hierarchy_rhs(u: ComplexField, n: int) -> ComplexField:
    """First component of ``d_x {(-2i Lambda)^(2n-1) U}`` with ``U = (u, u-bar)``.

    Raises
    ------
    ValueError
        For ``n`` other than 1 or 2.
    DecayError
        If *u* does not vanish at the domain edge.
    """
    if n not in (1, 2):
        raise ValueError(f"Only the first two hierarchy flows are supported, got n={n!r}")
    U = PairField.from_field(u)
    U.require_decay()
    V = U
    for _ in range(2 * n - 1):
        V = _minus_2i_lambda(U, V)
    return _dx(V.first)


def hierarchy_vs_explicit(u: ComplexField, cubic: str = "recursion") -> float:
    """Relative ``L^2`` gap between the second flow's nonlinearity and the expanded spec.

    The second flow reads ``i u_t + d^4 u + NL(u) = 0`` with
    ``NL = hierarchy_rhs(u, 2) - d^4 u``, so its right-hand side in the form
    ``i u_t + d^4 u = G`` is ``G = -NL``. The same bookkeeping turns the first
    flow into ``i u_t + d^2 u = -i d(|u|^2 u)``.
    """
    explicit = evaluate_nonlinearity(build_spec(DnlsHierarchyN2(cubic)), u)
    nl = hierarchy_rhs(u, 2) - fourier_multiplier(u, Symbol.deriv(4))
    scale = explicit.l2_norm()
    if scale == 0.0:
        return nl.l2_norm()
    gap = (explicit + nl).l2_norm() / scale
    logger.debug("hierarchy gap %.3e (cubic=%s)", gap, cubic)
    return gap
