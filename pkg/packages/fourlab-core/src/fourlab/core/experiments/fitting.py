from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np


class SlopeFit(NamedTuple):
    slope: float
    residual: float
    intercept: float


def fit_slope(xs: Sequence[float], ys: Sequence[float]) -> SlopeFit:
    """Least-squares line through ``(log x, log y)``; residual is the RMS log-residual.

    Raises
    ------
    ValueError
        With fewer than 3 points, mismatched lengths or non-positive entries.
    """
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"xs and ys must be matching 1-d sequences, got {x.shape} and {y.shape}")
    if x.size < 3:
        raise ValueError(f"A slope fit needs at least 3 points, got {x.size}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y)) and np.all(x > 0) and np.all(y > 0)):
        raise ValueError("A slope fit needs positive finite xs and ys")
    lx, ly = np.log(x), np.log(y)
    slope, intercept = np.polyfit(lx, ly, 1)
    residual = math.sqrt(float(np.mean((ly - (slope * lx + intercept)) ** 2)))
    return SlopeFit(float(slope), residual, float(intercept))


def geometric_mean(values: Sequence[float]) -> float:
    return float(np.exp(np.mean(np.log(np.asarray(values, dtype=np.float64)))))


def within_factor(values: Sequence[float], factor: float) -> bool:
    """Every value lies within *factor* of the geometric mean."""
    centre = geometric_mean(values)
    return all(centre / factor <= v <= centre * factor for v in values)
