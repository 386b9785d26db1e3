from __future__ import annotations

import math
import sys
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class GridConfig(BaseModel):
    """Default grid for experiments that do not pin their own."""

    n: int = 4096
    period: float = 64 * math.pi


class AnalysisConfig(BaseModel):
    """Norm and estimate settings."""

    eps: float = Field(default=0.01, gt=0.0)
    bound_factor: float = Field(default=4.0, gt=1.0)


class SolverSettings(BaseModel):
    """Integrator safeguards."""

    blowup_factor: float = Field(default=1e6, gt=1.0)
    dt_safety: float = Field(default=0.5, gt=0.0)


class InflationConfig(BaseModel):
    """Simplex quadrature for the norm-inflation experiments."""

    points: int = Field(default=32, ge=2)
    refine_points: int = Field(default=64, ge=2)
    time_samples: int = Field(default=33, ge=1)


class RunnerConfig(BaseModel):
    """Sweep execution."""

    workers: int = Field(default=4, ge=1)


class LabConfig(BaseModel):
    """Top-level fourlab configuration."""

    grid: GridConfig = GridConfig()
    analysis: AnalysisConfig = AnalysisConfig()
    solver: SolverSettings = SolverSettings()
    inflation: InflationConfig = InflationConfig()
    runner: RunnerConfig = RunnerConfig()
    verbose: bool = False
    output_dir: str = "fourlab-results"

    @model_validator(mode="after")
    def _refinement_is_finer(self) -> "LabConfig":
        if self.inflation.refine_points <= self.inflation.points:
            raise ValueError(
                f"inflation.refine_points={self.inflation.refine_points} must exceed "
                f"inflation.points={self.inflation.points}"
            )
        return self


def load_config(path: Optional[str] = None) -> LabConfig:
    """Load configuration from a fourlab.toml file, falling back to defaults.

    Uses ``tomllib`` on Python 3.11+ and ``tomli`` on older versions.
    """

    if sys.version_info >= (3, 11):
        import tomllib
    else:
        try:
            import tomli as tomllib  # type: ignore[no-redef]
        except ImportError:
            if path is None:
                return LabConfig()
            raise

    config_path = Path(path) if path else Path("fourlab.toml")

    if not config_path.exists():
        return LabConfig()

    with open(config_path, "rb") as f:
        raw = tomllib.load(f)

    return LabConfig(**raw)
