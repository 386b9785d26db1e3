"""Picard iteration of the Duhamel map ``Psi[u](t) = e^{itL} u0 - i I[G(u)](t)``."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
import scipy.fft as sfft

from fourlab.spectral import ComplexField, SpaceTimeTrace, duhamel_trace, free_trace

from ..nonlinearity import evaluator_for
from .config import SolveConfig

logger = logging.getLogger(__name__)


@dataclass
class PicardReport:
    """Iterates ``u^(0) .. u^(kmax)``, their sup-in-time L2 differences and the ratios."""

    iterates: List[SpaceTimeTrace] = field(default_factory=list)
    diff_norms: List[float] = field(default_factory=list)
    ratios: List[float] = field(default_factory=list)

    @property
    def limit(self) -> SpaceTimeTrace:
        return self.iterates[-1]

    @property
    def diverged(self) -> bool:
        """Two consecutive ratios above one."""
        return any(a > 1.0 and b > 1.0 for a, b in zip(self.ratios, self.ratios[1:]))

    def contracting(self, bound: float = 0.5) -> bool:
        return all(r < bound for r in self.ratios)


def sup_l2(a: SpaceTimeTrace, b: SpaceTimeTrace) -> float:
    """``max_j ||a_j - b_j||_{L^2}`` over common snapshots."""
    diff = a.values - b.values
    return float(np.sqrt(a.grid.dx * np.max(np.sum(np.abs(diff) ** 2, axis=1))))


def picard_step(u0: ComplexField, current: SpaceTimeTrace, cfg: SolveConfig) -> SpaceTimeTrace:
    """``Psi[u]`` at every snapshot of *current*."""
    evaluate = evaluator_for(cfg.spec, u0.grid, cfg.dealias).coefficients
    forcing = np.array([sfft.ifft(evaluate(row)) for row in current.coefficients()])
    duhamel = duhamel_trace(current.with_values(forcing), cfg.sym)
    free = free_trace(u0, current.count, current.dt, sym=cfg.sym)
    return free.with_values(free.values - 1j * duhamel.values)


def picard_sequence(
    u0: ComplexField,
    cfg: SolveConfig,
    kmax: int,
    atol: Optional[float] = None,
) -> PicardReport:
    """Iterate the Duhamel map from the free evolution ``kmax`` times.

    Snapshots are taken every ``cfg.step`` on ``[0, T]``. A ratio whose
    denominator is at most *atol* (default ``1e-14 ||u0||_2``) is reported as
    0: the iteration has reached round-off. Divergence is recorded on the
    report, never raised.
    """
    if kmax < 2:
        raise ValueError(f"kmax must be >= 2, got {kmax!r}")
    if atol is None:
        atol = 1e-14 * u0.l2_norm()
    current = free_trace(u0, cfg.steps + 1, cfg.step, sym=cfg.sym)
    report = PicardReport(iterates=[current])
    for k in range(kmax):
        nxt = picard_step(u0, current, cfg)
        diff = sup_l2(nxt, current)
        if report.diff_norms:
            prev = report.diff_norms[-1]
            report.ratios.append(diff / prev if prev > atol else 0.0)
        report.diff_norms.append(diff)
        report.iterates.append(nxt)
        logger.debug("Picard iterate %d: diff %.3e", k + 1, diff)
        current = nxt
    if report.diverged:
        logger.warning("Picard iteration diverged: ratios %s", report.ratios)
    return report
