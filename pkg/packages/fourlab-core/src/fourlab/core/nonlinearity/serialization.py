"""JSON form of a nonlinearity spec.

Shape::

    {"gamma": 3,
     "monomials": [{"coeff": [re, im], "u": [k, ...], "ubar": [k, ...]}, ...]}

``m`` and ``l`` are optional and only needed for the zero nonlinearity.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError

from .monomial import Monomial
from .spec import NonlinearitySpec


class MonomialModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    coeff: Tuple[float, float]
    u: List[int] = []
    ubar: List[int] = []


class SpecModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    gamma: int
    monomials: List[MonomialModel]
    m: Optional[int] = None
    l: Optional[int] = None  # noqa: E741


def spec_to_dict(spec: NonlinearitySpec) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "gamma": spec.gamma,
        "monomials": [
            {"coeff": [t.coeff.real, t.coeff.imag], "u": list(t.u), "ubar": list(t.ubar)}
            for t in spec.monomials
        ],
    }
    if spec.is_zero:
        data.update(m=spec.m, l=spec.l)
    return data


def spec_from_dict(data: Dict[str, Any]) -> NonlinearitySpec:
    """Validate and rebuild a spec; raises ``ValueError`` on any mismatch."""
    try:
        model = SpecModel.model_validate(data)
    except ValidationError as exc:
        raise ValueError(f"Nonlinearity does not match the spec schema: {exc}") from exc
    monomials = [Monomial(complex(*t.coeff), tuple(t.u), tuple(t.ubar)) for t in model.monomials]
    if not any(t.coeff != 0 for t in monomials):
        return NonlinearitySpec.zero(model.gamma, model.m or 3, model.l)
    spec = NonlinearitySpec.from_monomials(monomials, gamma=model.gamma)
    if (model.m is not None and model.m != spec.m) or (model.l is not None and model.l != spec.l):
        raise ValueError(f"Declared degrees ({model.m}, {model.l}) disagree with the monomials")
    return spec


def spec_to_json(spec: NonlinearitySpec, indent: Optional[int] = None) -> str:
    return json.dumps(spec_to_dict(spec), indent=indent)


def spec_from_json(content: str) -> NonlinearitySpec:
    try:
        data = json.loads(content)
    except json.JSONDecodeError as exc:
        raise ValueError(f"Nonlinearity spec is not valid JSON: {exc}") from exc
    return spec_from_dict(data)
