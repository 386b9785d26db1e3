"""Time stepping, Picard iteration, conserved quantities and residual certification."""

from __future__ import annotations

from .config import BLOWUP_FACTOR, SolveConfig
from .integrator import BlowUpError, simulate, suggest_dt, time_reversal_error
from .invariants import DriftReport, Invariants, drift_report, invariants
from .picard import PicardReport, picard_sequence, picard_step, sup_l2
from .residual import pde_residual
from .trace_io import read_trace, write_trace

__all__ = [
    # Configuration
    "BLOWUP_FACTOR",
    "SolveConfig",
    # Integration
    "BlowUpError",
    "simulate",
    "suggest_dt",
    "time_reversal_error",
    # Fixed point
    "PicardReport",
    "picard_sequence",
    "picard_step",
    "sup_l2",
    # Diagnostics
    "DriftReport",
    "Invariants",
    "drift_report",
    "invariants",
    "pde_residual",
    # Persistence
    "read_trace",
    "write_trace",
]
