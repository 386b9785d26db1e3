"""fourlab.spectral -- periodic spectral substrate for fourth-order dispersive equations.

Grids, complex fields, Fourier multipliers, Littlewood-Paley projections and
the free group ``exp(i t d_x^4)``. Every object is immutable once built, so
grids, profiles and fields can be shared between worker threads.

Example::

    from fourlab.spectral import ComplexField, Projection, free_evolve, lp_project, make_grid

    grid = make_grid(1024, 64 * np.pi)
    u = ComplexField.from_function(grid, lambda x: np.exp(-x**2))
    v = free_evolve(lp_project(u, Projection.shell(4)), t=0.1)
"""

from __future__ import annotations

from .errors import DecayError, ResolutionError
from .grid import (
    ComplexField,
    SpectralGrid,
    is_power_of_two,
    make_grid,
    pad_coefficients,
    truncate_coefficients,
)
from .multipliers import (
    apply_weights,
    band_fraction,
    dyadic_shell,
    fourier_multiplier,
    lp_norm,
    lp_project,
    projection_weights,
    require_resolvable,
    resolvable_shells,
    sobolev_norm,
    symbol_weights,
)
from .propagator import (
    KernelCertificate,
    SpaceTimeTrace,
    certify_kernel,
    duhamel_integral,
    duhamel_trace,
    free_evolve,
    free_trace,
    kernel_at_origin,
    kernel_profile,
    kernel_reference,
    propagator_weights,
)
from .types import (
    FREE,
    BRIDGE,
    SHARP,
    SMOOTH,
    BumpKind,
    BumpProfile,
    DyadicShell,
    LinearSymbol,
    Projection,
    ProjectionKind,
    Symbol,
    SymbolKind,
    is_dyadic,
)

__all__ = [
    # Errors
    "DecayError",
    "ResolutionError",
    # Grid and fields
    "ComplexField",
    "SpectralGrid",
    "is_power_of_two",
    "make_grid",
    "pad_coefficients",
    "truncate_coefficients",
    # Symbols and profiles
    "BumpKind",
    "BRIDGE",
    "BumpProfile",
    "DyadicShell",
    "FREE",
    "LinearSymbol",
    "Projection",
    "ProjectionKind",
    "SHARP",
    "SMOOTH",
    "Symbol",
    "SymbolKind",
    "is_dyadic",
    # Multipliers
    "apply_weights",
    "band_fraction",
    "dyadic_shell",
    "fourier_multiplier",
    "lp_norm",
    "lp_project",
    "projection_weights",
    "require_resolvable",
    "resolvable_shells",
    "sobolev_norm",
    "symbol_weights",
    # Propagator
    "KernelCertificate",
    "SpaceTimeTrace",
    "certify_kernel",
    "duhamel_integral",
    "duhamel_trace",
    "free_evolve",
    "free_trace",
    "kernel_at_origin",
    "kernel_profile",
    "kernel_reference",
    "propagator_weights",
]
