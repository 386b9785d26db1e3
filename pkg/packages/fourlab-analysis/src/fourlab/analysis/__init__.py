"""fourlab.analysis -- space-time norms and estimate ratios on fourlab traces."""

from __future__ import annotations

from .bilinear import (
    bilinear_spacetime_norm,
    diagonal_part,
    partition_scales,
    rl_bilinear,
)
from .estimates import (
    LINEAR_KINDS,
    EstimateKind,
    EstimateParams,
    comoving_amplitudes,
    estimate_ratio,
    is_admissible,
    lab_supremum_norm,
    maximal_ratio,
    prewrap_horizon,
)
from .inflation import (
    InflationDatum,
    InflationVariant,
    inflation_rate,
    inflation_threshold,
    sup_third_iterate,
    third_iterate_norms,
)
from .modulation import (
    ModulationAction,
    ModulationSpectrum,
    Project,
    XbqNorm,
    modulation_tools,
)
from .norms import DEFAULT_EPS, Outer, XnBreakdown, mixed_norm, shell_fraction, xn_norm, xs_norm

__all__ = [
    # Norms
    "DEFAULT_EPS",
    "Outer",
    "XnBreakdown",
    "mixed_norm",
    "shell_fraction",
    "xn_norm",
    "xs_norm",
    # Modulation
    "ModulationAction",
    "ModulationSpectrum",
    "Project",
    "XbqNorm",
    "modulation_tools",
    # Bilinear
    "bilinear_spacetime_norm",
    "diagonal_part",
    "partition_scales",
    "rl_bilinear",
    # Estimates
    "LINEAR_KINDS",
    "EstimateKind",
    "EstimateParams",
    "comoving_amplitudes",
    "estimate_ratio",
    "is_admissible",
    "lab_supremum_norm",
    "maximal_ratio",
    "prewrap_horizon",
    # Norm inflation
    "InflationDatum",
    "InflationVariant",
    "inflation_rate",
    "inflation_threshold",
    "sup_third_iterate",
    "third_iterate_norms",
]
