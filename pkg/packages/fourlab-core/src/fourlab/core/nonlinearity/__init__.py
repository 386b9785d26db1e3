"""Polynomial derivative nonlinearities: representation, builtins, evaluation and scaling."""

from __future__ import annotations

from .builtins import (
    Builtin,
    Dnls,
    DnlsHierarchyN2,
    FukumotoMoffatt,
    GaugePower,
    General,
    PurePower,
    build_spec,
    create_builtin,
    gauge_cubic,
)
from .evaluate import NonlinearityEvaluator, evaluate_nonlinearity, evaluator_for, pad_factor
from .monomial import Monomial, canonical, differentiate, multiply
from .scaling import (
    SpecProfile,
    Thresholds,
    WellposednessForm,
    classify_spec,
    regularity_thresholds,
    scale_field,
    scaling_exponent,
    threshold_is_open,
    wellposedness_threshold,
)
from .serialization import spec_from_dict, spec_from_json, spec_to_dict, spec_to_json
from .spec import NonlinearitySpec

__all__ = [
    # Representation
    "Monomial",
    "NonlinearitySpec",
    "canonical",
    "differentiate",
    "multiply",
    # Builtins
    "Builtin",
    "Dnls",
    "DnlsHierarchyN2",
    "FukumotoMoffatt",
    "GaugePower",
    "General",
    "PurePower",
    "build_spec",
    "create_builtin",
    "gauge_cubic",
    # Evaluation
    "NonlinearityEvaluator",
    "evaluate_nonlinearity",
    "evaluator_for",
    "pad_factor",
    # Scaling
    "SpecProfile",
    "Thresholds",
    "WellposednessForm",
    "classify_spec",
    "regularity_thresholds",
    "scale_field",
    "scaling_exponent",
    "threshold_is_open",
    "wellposedness_threshold",
    # Serialization
    "spec_from_dict",
    "spec_from_json",
    "spec_to_dict",
    "spec_to_json",
]
