"""fourlab.core -- nonlinearities, hierarchy flows, solvers and the experiment harness."""

from __future__ import annotations

from fourlab.core.experiments import AsyncExperimentRunner, run_experiment
from fourlab.core.nonlinearity import NonlinearitySpec, build_spec, create_builtin
from fourlab.core.solver import SolveConfig, simulate
from fourlab.core.types.config import LabConfig, load_config
from fourlab.core.types.experiment import ExperimentConfig, ExperimentKind, ResultRecord

__all__ = [
    "AsyncExperimentRunner",
    "run_experiment",
    "NonlinearitySpec",
    "build_spec",
    "create_builtin",
    "SolveConfig",
    "simulate",
    "LabConfig",
    "load_config",
    "ExperimentConfig",
    "ExperimentKind",
    "ResultRecord",
]
