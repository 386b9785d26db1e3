"""Experiment harness: test data, kinds, the sweep runner and result storage."""

from __future__ import annotations

from .fields import (
    CoherentPacket,
    Gaussian,
    RandomBand,
    Sech,
    TestField,
    coherent_grid,
    inflation_band,
    make_test_field,
)
from .fitting import SlopeFit, fit_slope, geometric_mean, within_factor
from .kinds import KindRunner, Measurement, Summary, create_kind, spectral_packet
from .runner import AsyncExperimentRunner, run_experiment
from .storage import (
    POINTS_JSONL,
    RESULTS_CSV,
    SUMMARY_JSON,
    TRACE_DIR,
    ResultStore,
    format_number,
)
from .telemetry import SweepLogger

__all__ = [
    # Test data
    "CoherentPacket",
    "Gaussian",
    "RandomBand",
    "Sech",
    "TestField",
    "coherent_grid",
    "inflation_band",
    "make_test_field",
    "spectral_packet",
    # Fitting
    "SlopeFit",
    "fit_slope",
    "geometric_mean",
    "within_factor",
    # Kinds
    "KindRunner",
    "Measurement",
    "Summary",
    "create_kind",
    # Running
    "AsyncExperimentRunner",
    "SweepLogger",
    "run_experiment",
    # Storage
    "POINTS_JSONL",
    "RESULTS_CSV",
    "SUMMARY_JSON",
    "TRACE_DIR",
    "ResultStore",
    "format_number",
]
