from __future__ import annotations

from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, field_serializer, field_validator, model_validator

from fourlab.spectral import FREE, LinearSymbol

from ..nonlinearity import NonlinearitySpec, spec_to_dict

#: Relative L^2 growth at which a run is declared blown up.
BLOWUP_FACTOR = 1e6
#: Safety factor of the suggested step; larger steps only log a warning.
DT_SAFETY = 0.5


class SolveConfig(BaseModel):
    """Time-stepping setup for ``i u_t + (nu d^4 + beta d^2) u = G(u)``.

    ``dt`` is the requested step; the integrator shrinks it slightly so that
    a whole number of steps lands on ``T``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    spec: NonlinearitySpec
    T: float
    dt: float
    sym: LinearSymbol = FREE
    record_every: int = 1
    blowup_factor: float = BLOWUP_FACTOR
    dt_safety: float = DT_SAFETY
    dealias: bool = True

    @field_validator("T", "dt", "blowup_factor", "dt_safety")
    @classmethod
    def _positive(cls, value: float) -> float:
        if not value > 0.0 or value == float("inf"):
            raise ValueError(f"must be positive and finite, got {value!r}")
        return value

    @field_validator("record_every")
    @classmethod
    def _stride(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"record_every must be >= 1, got {value!r}")
        return value

    @model_validator(mode="after")
    def _step_fits(self) -> "SolveConfig":
        if self.dt > self.T:
            raise ValueError(f"dt={self.dt!r} exceeds the final time T={self.T!r}")
        return self

    @property
    def steps(self) -> int:
        """Number of integrator steps: ``round(T / dt)``, at least one."""
        return max(1, round(self.T / self.dt))

    @property
    def step(self) -> float:
        return self.T / self.steps

    @field_serializer("spec")
    def _dump_spec(self, spec: NonlinearitySpec) -> Dict[str, Any]:
        return spec_to_dict(spec)

    @field_serializer("sym")
    def _dump_sym(self, sym: LinearSymbol) -> Dict[str, float]:
        return {"nu": sym.nu, "beta": sym.beta}
