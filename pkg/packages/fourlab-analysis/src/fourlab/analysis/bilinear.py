"""Frequency-restricted products and their space-time ``L^2`` norms.

:func:`rl_bilinear` is the direct double sum over frequency pairs. The
space-time norm of a product of two free solutions is evaluated exactly over
``t in R`` through Plancherel: for fixed output frequency the map from the
first input frequency to the output temporal frequency has Jacobian
``4 |xi1^3 - xi2^3|``, which turns the ``L^2_{t,x}`` norm into a weighted
double sum over the two input spectra.
"""

from __future__ import annotations

import math
from typing import List, Optional

import numpy as np

from fourlab.spectral import (
    SMOOTH,
    BumpProfile,
    ComplexField,
    ResolutionError,
    SpectralGrid,
    is_dyadic,
)

#: Rows of the frequency-pair matrix handled per block.
CHUNK_ROWS = 256


def _sign(sign: str) -> float:
    if sign in ("-", "−", "minus"):
        return -1.0
    if sign in ("+", "plus"):
        return 1.0
    raise ValueError(f"Unsupported sign: {sign!r}")


def _check_scale(grid: SpectralGrid, L: float) -> None:
    if not is_dyadic(L):
        raise ValueError(f"Bilinear scale must be dyadic, got {L!r}")
    if L / 2.0 >= 2.0 * grid.max_wavenumber:
        raise ResolutionError(f"Bilinear scale L={L:g} exceeds every frequency pair on the grid")


def rl_bilinear(
    f: ComplexField,
    g: ComplexField,
    L: float,
    sign: str = "-",
    bump: BumpProfile = SMOOTH,
) -> ComplexField:
    """``R_L^{+-}(f, g)``: the product ``f g`` restricted to pairs with ``|xi1 +- xi2| ~ L``.

    The output frequency ``xi1 + xi2`` wraps around the lattice exactly like
    the pointwise product on the grid does, so summing over all dyadic ``L``
    reproduces ``f * g`` apart from the pairs where the mask argument is 0.
    """
    if f.grid != g.grid:
        raise ValueError("rl_bilinear needs both factors on one grid")
    grid = f.grid
    _check_scale(grid, L)
    s = _sign(sign)
    n = grid.n
    xi = np.asarray(grid.wavenumbers)
    a = f.coefficients()
    b = g.coefficients()
    rows = np.flatnonzero(a)
    cols = np.flatnonzero(b)
    out_re = np.zeros(n)
    out_im = np.zeros(n)
    for start in range(0, rows.size, CHUNK_ROWS):
        i = rows[start : start + CHUNK_ROWS]
        mask = bump.shell(np.abs(xi[i][:, None] + s * xi[cols][None, :]), L)
        terms = mask * a[i][:, None] * b[cols][None, :]
        target = (i[:, None] + cols[None, :]) % n
        out_re += np.bincount(target.ravel(), weights=terms.real.ravel(), minlength=n)
        out_im += np.bincount(target.ravel(), weights=terms.imag.ravel(), minlength=n)
    return ComplexField.from_coefficients(grid, (out_re + 1j * out_im) / n)


def partition_scales(grid: SpectralGrid) -> List[float]:
    """Dyadic ``L`` from the lattice spacing up to the largest pair separation."""
    lowest = 2.0 ** math.floor(math.log2(grid.dxi))
    highest = 2.0 ** math.ceil(math.log2(2.0 * grid.max_wavenumber))
    scales = []
    L = lowest
    while L <= highest:
        scales.append(L)
        L *= 2.0
    return scales


def diagonal_part(f: ComplexField, g: ComplexField, sign: str = "-") -> ComplexField:
    """Pairs with ``xi1 +- xi2 = 0``: the part of ``f g`` no dyadic mask reaches."""
    s = _sign(sign)
    xi = np.asarray(f.grid.wavenumbers)
    a = f.coefficients()
    b = g.coefficients()
    n = f.grid.n
    out = np.zeros(n, dtype=np.complex128)
    for i in np.flatnonzero(a):
        j = np.flatnonzero(np.abs(xi[i] + s * xi) < 0.5 * f.grid.dxi)
        out[(i + j) % n] += a[i] * b[j]
    return ComplexField.from_coefficients(f.grid, out / n)


# ---------------------------------------------------------------------------
# Space-time L^2 of products of free solutions
# ---------------------------------------------------------------------------


def _support(spectrum: np.ndarray, rel: float) -> np.ndarray:
    peak = float(np.max(np.abs(spectrum), initial=0.0))
    if peak == 0.0:
        return np.empty(0, dtype=np.intp)
    return np.flatnonzero(np.abs(spectrum) > rel * peak)


def bilinear_spacetime_norm(
    f: ComplexField,
    g: ComplexField,
    conjugate_second: bool = False,
    L: Optional[float] = None,
    bump: BumpProfile = SMOOTH,
    support_tol: float = 1e-16,
) -> float:
    """``|| e^{it d^4} f * e^{it d^4} g ||_{L^2(R x R)}`` for the pure quartic group.

    With ``conjugate_second`` the second factor is conjugated. With *L* the
    pair ``(xi1, xi2)`` is weighted by ``psi_L(|xi1 - xi2|)``, which is
    ``R_L^-`` for the plain product and ``R_L^+`` against the conjugate.

    Factors on different grids are allowed only when their spectra are
    disjoint; on a common lattice the plain product picks up the exchange
    term ``A(xi1, xi2) conj(A(xi2, xi1))`` and the exact diagonal is skipped.
    """
    fs = f.spectrum()
    gs = g.spectrum()
    xf = np.asarray(f.grid.wavenumbers)
    xg = np.asarray(g.grid.wavenumbers)
    same = f.grid == g.grid
    exchange = same and not conjugate_second
    rows = _support(fs, support_tol)
    cols = _support(gs, support_tol)
    if rows.size == 0 or cols.size == 0:
        return 0.0
    if L is not None:
        _check_scale(f.grid, L)

    total = 0.0
    x2 = xg[cols][None, :]
    for start in range(0, rows.size, CHUNK_ROWS):
        i = rows[start : start + CHUNK_ROWS]
        x1 = xf[i][:, None]
        jac = 4.0 * np.abs(x1**3 - x2**3)
        weight = np.ones_like(jac) if L is None else bump.shell(np.abs(x1 - x2), L)
        amp = weight * fs[i][:, None] * gs[cols][None, :]
        num = np.abs(amp) ** 2
        if exchange:
            swapped = weight * fs[cols][None, :] * gs[i][:, None]
            num = num + (amp * np.conj(swapped)).real
        valid = jac > 0.0
        total += float(np.sum(np.where(valid, num / np.where(valid, jac, 1.0), 0.0)))
    return math.sqrt(max(total, 0.0) * f.grid.dxi * g.grid.dxi)
