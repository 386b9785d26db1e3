"""Experiment documents: kinds, kind-specific parameters and result records."""

from __future__ import annotations

import math
from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Tuple, Type

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from fourlab.spectral import is_dyadic

from ..nonlinearity import NonlinearitySpec, build_spec, create_builtin


class ExperimentKind(str, Enum):
    CONSERVATION_DRIFT = "conservation_drift"
    SCALING_INVARIANCE = "scaling_invariance"
    NORM_INFLATION = "norm_inflation"
    BILINEAR_SWEEP = "bilinear_sweep"
    REFINED_BILINEAR_SWEEP = "refined_bilinear_sweep"
    LINEAR_ESTIMATE_SWEEP = "linear_estimate_sweep"
    HIERARCHY_EQUIVALENCE = "hierarchy_equivalence"
    PICARD_CONVERGENCE = "picard_convergence"
    KERNEL_DECAY = "kernel_decay"
    THRESHOLDS = "thresholds"


def _dyadic_list(values: List[float], name: str, minimum: int = 3) -> List[float]:
    if len(values) < minimum:
        raise ValueError(f"{name} needs at least {minimum} entries, got {len(values)}")
    for v in values:
        if not is_dyadic(v):
            raise ValueError(f"{name} entries must be powers of two, got {v!r}")
    return sorted(float(v) for v in values)


class KindParams(BaseModel):
    model_config = ConfigDict(extra="forbid", ser_json_inf_nan="constants")


class NonlinearityRef(KindParams):
    """A builtin nonlinearity by config name, e.g. ``{"name": "dnls", "params": {}}``."""

    name: str
    params: Dict[str, Any] = Field(default_factory=dict)

    def build(self) -> NonlinearitySpec:
        return build_spec(create_builtin(self.name, **dict(self.params)))


# ---------------------------------------------------------------------------
# Kind parameters
# ---------------------------------------------------------------------------


class ConservationDriftParams(KindParams):
    """Fukumoto-Moffatt run from a Gaussian packet, integrable and perturbed."""

    n: int = 2048
    period: float = 64 * math.pi
    amplitude: float = Field(default=0.3, gt=0.0, le=0.5)
    width: float = Field(default=2.0, gt=0.0)
    carrier: float = 0.5
    T: float = Field(default=0.1, gt=0.0)
    dt: float = Field(default=1e-3, gt=0.0)
    nu: float = -1.0
    mu: float = 0.5
    control_perturbation: float = Field(default=0.2, gt=0.0)
    phi0_tolerance: float = 1e-8
    phi1_tolerance: float = 1e-6
    phi2_tolerance: float = 1e-4
    control_factor: float = Field(default=10.0, gt=1.0)

    @model_validator(mode="after")
    def _integrable(self) -> "ConservationDriftParams":
        if not math.isclose(2.0 * self.mu, -self.nu, rel_tol=1e-12):
            raise ValueError(
                f"Need 2 mu = -nu for the reference run, got mu={self.mu}, nu={self.nu}"
            )
        return self


class ScalingInvarianceParams(KindParams):
    cases: List[Tuple[int, int]] = [(1, 5), (2, 4), (3, 5)]
    thetas: List[float] = [0.5, 2.0]
    general_s: List[float] = [0.0, 1.0]
    n: Optional[int] = None
    period: Optional[float] = None
    width: float = Field(default=1.0, gt=0.0)
    carrier: float = 8.0
    tolerance: float = 1e-6

    @field_validator("thetas")
    @classmethod
    def _dyadic(cls, values: List[float]) -> List[float]:
        return _dyadic_list(values, "thetas", minimum=1)


class NormInflationParams(KindParams):
    gamma: int = Field(default=1, ge=1, le=3)
    s: float = -0.25
    Ns: List[float] = [16.0, 32.0, 64.0, 128.0, 256.0]
    variant: Literal["cubic", "derivative_cubed"] = "cubic"
    horizon: float = Field(default=1.0, gt=0.0)
    points: Optional[int] = Field(default=None, ge=2)
    refine_points: Optional[int] = Field(default=None, ge=2)
    time_samples: Optional[int] = Field(default=None, ge=1)
    control_s: Optional[float] = None
    slope_tolerance: float = 0.15
    control_slope_max: float = 0.1
    refinement_tolerance: float = 0.02

    @field_validator("Ns")
    @classmethod
    def _dyadic(cls, values: List[float]) -> List[float]:
        return _dyadic_list(values, "Ns")


class BilinearSweepParams(KindParams):
    N1s: List[float] = [8.0, 16.0, 32.0, 64.0, 128.0, 256.0, 512.0]
    N2: float = 2.0
    seeds: int = Field(default=10, ge=1)
    n: int = 2048
    base_period: float = 512 * math.pi
    enforce_preconditions: bool = False
    bound_factor: Optional[float] = Field(default=None, gt=1.0)
    slope_tolerance: float = 0.1

    @field_validator("N1s")
    @classmethod
    def _dyadic(cls, values: List[float]) -> List[float]:
        return _dyadic_list(values, "N1s")


class RefinedBilinearParams(KindParams):
    N1: float = 32.0
    N2: float = 16.0
    Ls: List[float] = [2.0, 4.0, 8.0, 16.0]
    signs: List[Literal["+", "-"]] = ["-", "+"]
    center: float = 24.0
    n: int = 16384
    period: float = 128 * math.pi
    slope_tolerance: float = 0.1

    @field_validator("Ls")
    @classmethod
    def _dyadic(cls, values: List[float]) -> List[float]:
        return _dyadic_list(values, "Ls")


class EstimateEntry(KindParams):
    kind: Literal["strichartz", "kato", "kenig_ruiz", "maximal"]
    q: float = 4.0
    r: float = math.inf

    @property
    def label(self) -> str:
        if self.kind == "strichartz":
            return f"strichartz_q{self.q:g}_r{self.r:g}"
        return self.kind


class LinearEstimateParams(KindParams):
    Ns: List[float] = [2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0]
    estimates: List[EstimateEntry] = [
        EstimateEntry(kind="strichartz", q=4.0, r=math.inf),
        EstimateEntry(kind="strichartz", q=8.0, r=4.0),
        EstimateEntry(kind="kato"),
        EstimateEntry(kind="kenig_ruiz"),
        EstimateEntry(kind="maximal"),
    ]
    n: int = 2048
    base_period: float = 512 * math.pi
    samples: int = Field(default=257, ge=3)
    T: float = Field(default=0.5, gt=0.0)
    bound_factor: Optional[float] = Field(default=None, gt=1.0)

    @field_validator("Ns")
    @classmethod
    def _dyadic(cls, values: List[float]) -> List[float]:
        return _dyadic_list(values, "Ns")


class HierarchyEquivalenceParams(KindParams):
    n: int = 4096
    period: float = 128 * math.pi
    amplitude: float = Field(default=0.5, gt=0.0)
    width: float = Field(default=2.0, gt=0.0)
    carrier: float = 1.0
    cubic: Literal["recursion", "displayed"] = "recursion"
    n1_tolerance: float = 1e-8
    n2_tolerance: float = 1e-6


class PicardConvergenceParams(KindParams):
    nonlinearity: NonlinearityRef = NonlinearityRef(
        name="gauge_power", params={"gamma": 1, "coeffs": [0.0, 0.0, 1.0, 0.0]}
    )
    h1_norm: float = Field(default=0.01, gt=0.0)
    width: float = Field(default=2.0, gt=0.0)
    carrier: float = 1.0
    n: Optional[int] = None
    period: Optional[float] = None
    T: float = Field(default=0.05, gt=0.0)
    dt: float = Field(default=1e-3, gt=0.0)
    kmax: int = Field(default=4, ge=2)
    ratio_bound: float = 0.5
    match_tolerance: float = 1e-6
    residual_factor: float = Field(default=10.0, gt=0.0)


class KernelDecayParams(KindParams):
    times: List[float] = [1.0, 2.0, 4.0, 8.0]
    x_max: float = Field(default=12.0, gt=0.0)
    samples: int = Field(default=481, ge=3)
    cutoff: float = Field(default=40.0, gt=0.0)
    certify_cutoff: float = Field(default=16.0, gt=0.0)
    certify_points: int = Field(default=9, ge=1)
    expected_slope: float = -0.25
    slope_tolerance: float = 0.05
    stability_tolerance: float = 1e-8

    @field_validator("times")
    @classmethod
    def _positive(cls, values: List[float]) -> List[float]:
        if len(values) < 3 or any(not t > 0.0 for t in values):
            raise ValueError(f"times needs at least 3 positive entries, got {values!r}")
        return sorted(values)


class ThresholdsParams(KindParams):
    gammas: List[int] = [1, 2, 3]
    ms: List[int] = [3, 4, 5, 6, 7]


PARAMETER_MODELS: Dict[ExperimentKind, Type[KindParams]] = {
    ExperimentKind.CONSERVATION_DRIFT: ConservationDriftParams,
    ExperimentKind.SCALING_INVARIANCE: ScalingInvarianceParams,
    ExperimentKind.NORM_INFLATION: NormInflationParams,
    ExperimentKind.BILINEAR_SWEEP: BilinearSweepParams,
    ExperimentKind.REFINED_BILINEAR_SWEEP: RefinedBilinearParams,
    ExperimentKind.LINEAR_ESTIMATE_SWEEP: LinearEstimateParams,
    ExperimentKind.HIERARCHY_EQUIVALENCE: HierarchyEquivalenceParams,
    ExperimentKind.PICARD_CONVERGENCE: PicardConvergenceParams,
    ExperimentKind.KERNEL_DECAY: KernelDecayParams,
    ExperimentKind.THRESHOLDS: ThresholdsParams,
}


# ---------------------------------------------------------------------------
# Run documents
# ---------------------------------------------------------------------------


class ExperimentConfig(BaseModel):
    """One experiment run: kind, kind-specific parameters, seed and output directory.

    ``parameters`` is validated against the kind's model, which rejects
    unknown keys.
    """

    model_config = ConfigDict(extra="forbid")

    kind: ExperimentKind
    parameters: Dict[str, Any] = Field(default_factory=dict)
    seed: int = Field(default=0, ge=0, lt=2**64)
    out_dir: Optional[str] = None

    @model_validator(mode="after")
    def _parameters_match_kind(self) -> "ExperimentConfig":
        self.parsed_parameters()
        return self

    def parsed_parameters(self) -> KindParams:
        return PARAMETER_MODELS[self.kind].model_validate(self.parameters)


class Column(BaseModel):
    """A results.csv column and its units."""

    name: str
    units: str


class PointRecord(BaseModel):
    model_config = ConfigDict(ser_json_inf_nan="constants")

    index: int
    point: Dict[str, Any]
    values: Dict[str, float]
    wall_ms: float = 0.0


class ResultRecord(BaseModel):
    """Outcome of one experiment run.

    ``passed`` reflects the numeric tolerances, ``valid`` the validity
    diagnostics; a record is only a success when both hold.
    """

    model_config = ConfigDict(ser_json_inf_nan="constants")

    kind: ExperimentKind
    config: Dict[str, Any]
    columns: List[Column]
    points: List[PointRecord] = Field(default_factory=list)
    slope: Optional[float] = None
    residual: Optional[float] = None
    passed: bool = False
    valid: bool = True
    diagnostics: Dict[str, Any] = Field(default_factory=dict)
    wall_ms: float = 0.0

    @property
    def succeeded(self) -> bool:
        return self.passed and self.valid

    def summary(self) -> Dict[str, Any]:
        return {
            "config": self.config,
            "slope": self.slope,
            "residual": self.residual,
            "pass": self.passed,
            "valid": self.valid,
            "diagnostics": self.diagnostics,
            "wall_ms": self.wall_ms,
        }
