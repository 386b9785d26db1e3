from __future__ import annotations

from fourlab.core.types.config import (
    AnalysisConfig,
    GridConfig,
    InflationConfig,
    LabConfig,
    RunnerConfig,
    SolverSettings,
    load_config,
)
from fourlab.core.types.experiment import (
    PARAMETER_MODELS,
    BilinearSweepParams,
    Column,
    ConservationDriftParams,
    EstimateEntry,
    ExperimentConfig,
    ExperimentKind,
    HierarchyEquivalenceParams,
    KernelDecayParams,
    KindParams,
    LinearEstimateParams,
    NonlinearityRef,
    NormInflationParams,
    PicardConvergenceParams,
    PointRecord,
    RefinedBilinearParams,
    ResultRecord,
    ScalingInvarianceParams,
    ThresholdsParams,
)

__all__ = [
    # config
    "AnalysisConfig",
    "GridConfig",
    "InflationConfig",
    "LabConfig",
    "RunnerConfig",
    "SolverSettings",
    "load_config",
    # experiment
    "PARAMETER_MODELS",
    "BilinearSweepParams",
    "Column",
    "ConservationDriftParams",
    "EstimateEntry",
    "ExperimentConfig",
    "ExperimentKind",
    "HierarchyEquivalenceParams",
    "KernelDecayParams",
    "KindParams",
    "LinearEstimateParams",
    "NonlinearityRef",
    "NormInflationParams",
    "PicardConvergenceParams",
    "PointRecord",
    "RefinedBilinearParams",
    "ResultRecord",
    "ScalingInvarianceParams",
    "ThresholdsParams",
]
