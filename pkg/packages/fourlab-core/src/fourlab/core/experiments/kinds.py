"""Experiment kinds: sweep points, a pure per-point measurement and the summary.

Each kind lists its sweep points, measures one point at a time (points are
independent and may run in worker threads) and reduces the finished points
to a slope, a pass flag and validity diagnostics.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import (
    Any,
    ClassVar,
    Dict,
    List,
    Optional,
    Protocol,
    Sequence,
    Tuple,
    runtime_checkable,
)

import numpy as np

from fourlab.analysis import (
    EstimateParams,
    InflationDatum,
    estimate_ratio,
    inflation_rate,
    inflation_threshold,
    sup_third_iterate,
)
from fourlab.spectral import (
    ComplexField,
    LinearSymbol,
    SpaceTimeTrace,
    SpectralGrid,
    Symbol,
    certify_kernel,
    fourier_multiplier,
    free_trace,
    kernel_profile,
    make_grid,
    sobolev_norm,
)

from ..hierarchy import hierarchy_rhs, hierarchy_vs_explicit
from ..nonlinearity import (
    Dnls,
    FukumotoMoffatt,
    NonlinearitySpec,
    WellposednessForm,
    build_spec,
    evaluate_nonlinearity,
    regularity_thresholds,
    scale_field,
    scaling_exponent,
    threshold_is_open,
    wellposedness_threshold,
)
from ..solver import (
    SolveConfig,
    drift_report,
    pde_residual,
    picard_sequence,
    simulate,
    sup_l2,
)
from ..types.config import LabConfig
from ..types.experiment import (
    BilinearSweepParams,
    Column,
    ConservationDriftParams,
    ExperimentConfig,
    ExperimentKind,
    HierarchyEquivalenceParams,
    KernelDecayParams,
    KindParams,
    LinearEstimateParams,
    NormInflationParams,
    PicardConvergenceParams,
    PointRecord,
    RefinedBilinearParams,
    ScalingInvarianceParams,
    ThresholdsParams,
)
from .fields import CoherentPacket, Gaussian, RandomBand, coherent_grid, make_test_field
from .fitting import fit_slope, geometric_mean, within_factor

logger = logging.getLogger(__name__)

Point = Dict[str, Any]

#: Edge-to-peak amplitude above which a trace counts as having wrapped around.
BOUNDARY_TOLERANCE = 1e-8


@dataclass
class Measurement:
    """Values of one sweep point; ``traces`` are written only with ``--dump-traces``."""

    values: Dict[str, float]
    traces: Dict[str, Tuple[SpaceTimeTrace, SolveConfig]] = field(default_factory=dict)


@dataclass
class Summary:
    passed: bool
    valid: bool = True
    slope: Optional[float] = None
    residual: Optional[float] = None
    diagnostics: Dict[str, Any] = field(default_factory=dict)


@runtime_checkable
class KindRunner(Protocol):
    """What the sweep runner needs from an experiment kind."""

    kind: ClassVar[ExperimentKind]
    columns: ClassVar[Tuple[Column, ...]]

    def points(self) -> List[Point]:
        """Sweep coordinates in sweep order."""
        ...

    def measure(self, point: Point) -> Measurement:
        """Evaluate one point; must not touch shared state."""
        ...

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        """Reduce the finished points (in sweep order)."""
        ...


def _grid(n: Optional[int], period: Optional[float], lab: LabConfig) -> SpectralGrid:
    return make_grid(n if n is not None else lab.grid.n, period or lab.grid.period)


def _values(records: Sequence[PointRecord], key: str) -> List[float]:
    return [r.values[key] for r in records]


# ---------------------------------------------------------------------------
# Conservation
# ---------------------------------------------------------------------------


class ConservationDriftKind:
    """Invariant drift for the integrable Fukumoto-Moffatt flow and a perturbed control."""

    kind = ExperimentKind.CONSERVATION_DRIFT
    columns = (
        Column(name="phi0_drift", units="relative"),
        Column(name="phi1_drift", units="relative"),
        Column(name="phi2_drift", units="relative (complex modulus)"),
        Column(name="phi2_imag", units="relative to |phi2(0)|"),
        Column(name="boundary", units="edge/peak amplitude"),
    )

    def __init__(self, params: ConservationDriftParams, lab: LabConfig, seed: int = 0):
        self.params = params
        self.lab = lab

    def points(self) -> List[Point]:
        p = self.params
        return [
            {"case": "integrable", "mu": p.mu},
            {"case": "control", "mu": p.mu * (1.0 + p.control_perturbation)},
        ]

    def measure(self, point: Point) -> Measurement:
        p = self.params
        grid = make_grid(p.n, p.period)
        u0 = make_test_field(Gaussian(p.amplitude, 0.0, p.carrier, p.width), grid)
        cfg = SolveConfig(
            spec=build_spec(FukumotoMoffatt(mu=point["mu"], nu=p.nu)),
            sym=LinearSymbol(p.nu, 1.0),
            T=p.T,
            dt=p.dt,
            blowup_factor=self.lab.solver.blowup_factor,
            dt_safety=self.lab.solver.dt_safety,
        )
        trace = simulate(u0, cfg)
        report = drift_report(trace)
        values = {
            "phi0_drift": report.phi0_drift,
            "phi1_drift": report.phi1_drift,
            "phi2_drift": report.phi2_drift,
            "phi2_imag": report.phi2_imag,
            "boundary": trace.boundary_ratio(),
        }
        return Measurement(values, {point["case"]: (trace, cfg)})

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        p = self.params
        ref, control = records[0].values, records[1].values
        separation = control["phi1_drift"] / max(ref["phi1_drift"], np.finfo(float).tiny)
        passed = (
            ref["phi0_drift"] <= p.phi0_tolerance
            and ref["phi1_drift"] <= p.phi1_tolerance
            and ref["phi2_drift"] <= p.phi2_tolerance
            and separation >= p.control_factor
        )
        boundary = max(_values(records, "boundary"))
        return Summary(
            passed=passed,
            valid=boundary <= BOUNDARY_TOLERANCE,
            diagnostics={"control_separation": separation, "boundary": boundary},
        )


# ---------------------------------------------------------------------------
# Scaling
# ---------------------------------------------------------------------------


class ScalingInvarianceKind:
    """Critical homogeneous norm under ``u -> theta^a u(theta x)``."""

    kind = ExperimentKind.SCALING_INVARIANCE
    columns = (
        Column(name="s_c", units="Sobolev index"),
        Column(name="critical_ratio", units="||u_theta|| / ||u|| in H^{s_c}"),
        Column(name="general_deviation", units="relative"),
    )

    def __init__(self, params: ScalingInvarianceParams, lab: LabConfig, seed: int = 0):
        self.params = params
        self.lab = lab

    def points(self) -> List[Point]:
        return [
            {"gamma": gamma, "m": m, "theta": theta}
            for gamma, m in self.params.cases
            for theta in self.params.thetas
        ]

    def measure(self, point: Point) -> Measurement:
        p = self.params
        gamma, m, theta = point["gamma"], point["m"], point["theta"]
        grid = _grid(p.n, p.period, self.lab)
        u = make_test_field(Gaussian(1.0, 0.0, p.carrier, p.width), grid)
        v = scale_field(u, theta, gamma, m)
        s_c = float(regularity_thresholds(gamma, m).s_c)
        a = float(scaling_exponent(gamma, m))
        ratio = sobolev_norm(v, s_c, homogeneous=True) / sobolev_norm(u, s_c, homogeneous=True)
        deviation = 0.0
        for s in p.general_s:
            measured = sobolev_norm(v, s, homogeneous=True) / sobolev_norm(u, s, homogeneous=True)
            deviation = max(deviation, abs(measured / theta ** (a - 0.5 + s) - 1.0))
        return Measurement({"s_c": s_c, "critical_ratio": ratio, "general_deviation": deviation})

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        tol = self.params.tolerance
        worst_ratio = max(abs(r.values["critical_ratio"] - 1.0) for r in records)
        worst_general = max(_values(records, "general_deviation"))
        return Summary(
            passed=worst_ratio <= tol and worst_general <= tol,
            diagnostics={"worst_ratio_error": worst_ratio, "worst_general_error": worst_general},
        )


# ---------------------------------------------------------------------------
# Norm inflation
# ---------------------------------------------------------------------------


class NormInflationKind:
    """Growth of the third Picard iterate of narrow-band data in ``N``."""

    kind = ExperimentKind.NORM_INFLATION
    columns = (
        Column(name="sup_norm", units="H^s norm"),
        Column(name="sup_norm_refined", units="H^s norm"),
        Column(name="control_sup_norm", units="H^s norm"),
    )

    def __init__(self, params: NormInflationParams, lab: LabConfig, seed: int = 0):
        self.params = params
        self.points_per_band = params.points or lab.inflation.points
        self.refine_points = params.refine_points or lab.inflation.refine_points
        self.time_samples = params.time_samples or lab.inflation.time_samples
        if params.control_s is None:
            self.control_s = inflation_threshold(params.gamma, params.variant) + 0.25
        else:
            self.control_s = params.control_s

    def points(self) -> List[Point]:
        return [{"N": N} for N in self.params.Ns]

    def _sup(self, N: float, s: float, points: int) -> float:
        p = self.params
        return sup_third_iterate(
            InflationDatum(N, s, p.gamma),
            points=points,
            horizon=p.horizon,
            time_samples=self.time_samples,
            variant=p.variant,
        )

    def measure(self, point: Point) -> Measurement:
        N, s = point["N"], self.params.s
        return Measurement(
            {
                "sup_norm": self._sup(N, s, self.points_per_band),
                "sup_norm_refined": self._sup(N, s, self.refine_points),
                "control_sup_norm": self._sup(N, self.control_s, self.points_per_band),
            }
        )

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        p = self.params
        Ns = [r.point["N"] for r in records]
        fit = fit_slope(Ns, _values(records, "sup_norm"))
        refined = fit_slope(Ns, _values(records, "sup_norm_refined"))
        control = fit_slope(Ns, _values(records, "control_sup_norm"))
        expected = inflation_rate(p.s, p.gamma, p.variant)
        delta = abs(refined.slope - fit.slope)
        return Summary(
            passed=abs(fit.slope - expected) <= p.slope_tolerance
            and control.slope <= p.control_slope_max,
            valid=delta < p.refinement_tolerance,
            slope=fit.slope,
            residual=fit.residual,
            diagnostics={
                "expected_slope": expected,
                "refined_slope": refined.slope,
                "refinement_delta": delta,
                "control_s": self.control_s,
                "control_slope": control.slope,
                "control_expected": inflation_rate(self.control_s, p.gamma, p.variant),
            },
        )


# ---------------------------------------------------------------------------
# Estimates
# ---------------------------------------------------------------------------


def _shell_grid(n: int, base_period: float, N: float) -> SpectralGrid:
    """Grid whose period shrinks like ``1/N``, so data at every scale look alike."""
    return make_grid(n, base_period / N)


class BilinearSweepKind:
    """Bilinear estimate ratio over frequency-separated random shell data."""

    kind = ExperimentKind.BILINEAR_SWEEP
    columns = (Column(name="ratio", units="LHS / (N1^{-3/2} ||P_N1 f|| ||P_N2 g||)"),)

    def __init__(self, params: BilinearSweepParams, lab: LabConfig, seed: int = 0):
        self.params = params
        self.seed = seed
        self.bound_factor = params.bound_factor or lab.analysis.bound_factor

    def points(self) -> List[Point]:
        p = self.params
        return [{"N1": N1, "N2": p.N2, "draw": k} for N1 in p.N1s for k in range(p.seeds)]

    def measure(self, point: Point) -> Measurement:
        p = self.params
        N1, N2, k = point["N1"], point["N2"], point["draw"]
        f = make_test_field(
            RandomBand(N1, self.seed, stream=2 * k), _shell_grid(p.n, p.base_period, N1)
        )
        g = make_test_field(
            RandomBand(N2, self.seed, stream=2 * k + 1), _shell_grid(p.n, p.base_period, N2)
        )
        params = EstimateParams(N=N1, N2=N2, enforce_preconditions=p.enforce_preconditions)
        return Measurement({"ratio": estimate_ratio("bilinear", params, [f, g])})

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        p = self.params
        ratios = _values(records, "ratio")
        by_scale: Dict[float, List[float]] = defaultdict(list)
        for r in records:
            by_scale[r.point["N1"]].append(r.values["ratio"])
        scales = sorted(by_scale)
        fit = fit_slope(scales, [geometric_mean(by_scale[N]) for N in scales])
        bounded = within_factor(ratios, self.bound_factor)
        return Summary(
            passed=bounded and abs(fit.slope) <= p.slope_tolerance,
            slope=fit.slope,
            residual=fit.residual,
            diagnostics={
                "geometric_mean": geometric_mean(ratios),
                "spread": max(ratios) / min(ratios),
                "bound_factor": self.bound_factor,
                "within_bound": bounded,
            },
        )


def spectral_packet(grid: SpectralGrid, center: float, width: float) -> ComplexField:
    """Gaussian spectrum ``exp(-(xi - center)^2 / (2 width^2))``."""
    xi = np.asarray(grid.wavenumbers)
    spectrum = np.exp(-0.5 * ((xi - center) / width) ** 2) * grid.nyquist_mask
    return ComplexField.from_spectrum(grid, spectrum.astype(np.complex128))


class RefinedBilinearKind:
    """Refined bilinear ratio against ``N1^{-1} L^{-1/2}`` as the pair separation ``L`` varies."""

    kind = ExperimentKind.REFINED_BILINEAR_SWEEP
    columns = (Column(name="ratio", units="LHS / (N1^{-1} L^{-1/2} ||P_N1 f|| ||P_N2 g||)"),)

    def __init__(self, params: RefinedBilinearParams, lab: LabConfig, seed: int = 0):
        self.params = params

    def points(self) -> List[Point]:
        return [{"sign": sign, "L": L} for sign in self.params.signs for L in self.params.Ls]

    def measure(self, point: Point) -> Measurement:
        p = self.params
        L = point["L"]
        grid = make_grid(p.n, p.period)
        f = spectral_packet(grid, p.center + 0.5 * L, L / 8.0)
        g = spectral_packet(grid, p.center - 0.5 * L, L / 8.0)
        params = EstimateParams(N=p.N1, N2=p.N2, L=L, sign=point["sign"])
        return Measurement({"ratio": estimate_ratio("refined_bilinear", params, [f, g])})

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        fits = {}
        for sign in self.params.signs:
            rows = [r for r in records if r.point["sign"] == sign]
            fits[sign] = fit_slope([r.point["L"] for r in rows], _values(rows, "ratio"))
        steepest = max(fits.values(), key=lambda f: abs(f.slope))
        return Summary(
            passed=all(abs(f.slope) <= self.params.slope_tolerance for f in fits.values()),
            slope=steepest.slope,
            residual=steepest.residual,
            diagnostics={f"slope_{sign}": f.slope for sign, f in fits.items()},
        )


class LinearEstimateKind:
    """Strichartz, Kato, Kenig-Ruiz and maximal-function ratios across shells."""

    kind = ExperimentKind.LINEAR_ESTIMATE_SWEEP
    columns = (Column(name="ratio", units="LHS / ||P_N phi||_2"),)

    def __init__(self, params: LinearEstimateParams, lab: LabConfig, seed: int = 0):
        self.params = params
        self.lab = lab
        self.seed = seed
        self.bound_factor = params.bound_factor or lab.analysis.bound_factor

    def points(self) -> List[Point]:
        return [
            {"estimate": entry.label, "entry": i, "N": N}
            for i, entry in enumerate(self.params.estimates)
            for N in self.params.Ns
        ]

    def measure(self, point: Point) -> Measurement:
        p = self.params
        entry = p.estimates[point["entry"]]
        N = point["N"]
        carrier = 0.0
        if entry.kind == "maximal":
            packet = CoherentPacket(N, p.T)
            phi = make_test_field(packet, coherent_grid(packet))
            carrier = N
        else:
            band = RandomBand(N, self.seed, stream=p.Ns.index(N))
            phi = make_test_field(band, _shell_grid(p.n, p.base_period, N))
        params = EstimateParams(
            N=N,
            q=entry.q,
            r=entry.r,
            eps=self.lab.analysis.eps,
            T=p.T,
            samples=p.samples,
            carrier=carrier,
        )
        return Measurement({"ratio": estimate_ratio(entry.kind, params, [phi])})

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        diagnostics: Dict[str, Any] = {"bound_factor": self.bound_factor}
        passed = True
        for entry in self.params.estimates:
            ratios = [r.values["ratio"] for r in records if r.point["estimate"] == entry.label]
            spread = max(ratios) / min(ratios)
            diagnostics[f"spread_{entry.label}"] = spread
            diagnostics[f"slope_{entry.label}"] = fit_slope(self.params.Ns, ratios).slope
            passed = passed and spread <= self.bound_factor
        return Summary(passed=passed, diagnostics=diagnostics)


# ---------------------------------------------------------------------------
# Hierarchy
# ---------------------------------------------------------------------------


class HierarchyEquivalenceKind:
    """The first two hierarchy flows against their expanded nonlinearities."""

    kind = ExperimentKind.HIERARCHY_EQUIVALENCE
    columns = (
        Column(name="relative_gap", units="relative L2"),
        Column(name="boundary", units="edge/peak amplitude"),
    )

    def __init__(self, params: HierarchyEquivalenceParams, lab: LabConfig, seed: int = 0):
        self.params = params

    def points(self) -> List[Point]:
        return [{"flow": 1}, {"flow": 2}]

    def measure(self, point: Point) -> Measurement:
        p = self.params
        grid = make_grid(p.n, p.period)
        u = make_test_field(Gaussian(p.amplitude, 0.0, p.carrier, p.width), grid)
        if point["flow"] == 1:
            # i u_t + u_xx = -i (|u|^2 u)_x, so the flow's x-derivative term is u_xx - G
            explicit = fourier_multiplier(u, Symbol.deriv(2)) - evaluate_nonlinearity(
                build_spec(Dnls()), u
            )
            gap = (hierarchy_rhs(u, 1) - explicit).l2_norm() / explicit.l2_norm()
        else:
            gap = hierarchy_vs_explicit(u, p.cubic)
        return Measurement({"relative_gap": gap, "boundary": u.boundary_ratio()})

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        p = self.params
        gaps = {r.point["flow"]: r.values["relative_gap"] for r in records}
        boundary = max(_values(records, "boundary"))
        return Summary(
            passed=gaps[1] <= p.n1_tolerance and gaps[2] <= p.n2_tolerance,
            valid=boundary <= 1e-10,
            diagnostics={"gap_n1": gaps[1], "gap_n2": gaps[2], "boundary": boundary},
        )


# ---------------------------------------------------------------------------
# Picard iteration
# ---------------------------------------------------------------------------


class PicardConvergenceKind:
    """Small-data contraction of the Duhamel map, checked against the time stepper."""

    kind = ExperimentKind.PICARD_CONVERGENCE
    columns = (
        Column(name="first_ratio", units="1"),
        Column(name="max_ratio", units="1"),
        Column(name="match", units="sup_t L2 distance"),
        Column(name="residual", units="L2"),
        Column(name="residual_floor", units="L2"),
        Column(name="diverged", units="bool"),
    )

    def __init__(self, params: PicardConvergenceParams, lab: LabConfig, seed: int = 0):
        self.params = params
        self.lab = lab

    def points(self) -> List[Point]:
        return [{"T": self.params.T, "h1_norm": self.params.h1_norm}]

    def measure(self, point: Point) -> Measurement:
        p = self.params
        grid = _grid(p.n, p.period, self.lab)
        profile = make_test_field(Gaussian(1.0, 0.0, p.carrier, p.width), grid)
        u0 = profile * (point["h1_norm"] / sobolev_norm(profile, 1.0))
        spec = p.nonlinearity.build()
        cfg = SolveConfig(
            spec=spec,
            T=point["T"],
            dt=p.dt,
            blowup_factor=self.lab.solver.blowup_factor,
            dt_safety=self.lab.solver.dt_safety,
        )
        report = picard_sequence(u0, cfg, p.kmax)
        reference = simulate(u0, cfg)
        linear = cfg.model_copy(update={"spec": NonlinearitySpec.zero(spec.gamma, spec.m, spec.l)})
        floor = pde_residual(free_trace(u0, cfg.steps + 1, cfg.step, sym=cfg.sym), linear)
        values = {
            "first_ratio": report.ratios[0],
            "max_ratio": max(report.ratios),
            "match": sup_l2(report.limit, reference),
            "residual": pde_residual(report.limit, cfg),
            "residual_floor": floor,
            "diverged": float(report.diverged),
        }
        return Measurement(values, {"picard": (report.limit, cfg), "reference": (reference, cfg)})

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        p = self.params
        v = records[0].values
        floor = max(v["residual_floor"], np.finfo(float).eps * p.h1_norm)
        return Summary(
            passed=v["max_ratio"] < p.ratio_bound
            and v["match"] <= p.match_tolerance
            and v["residual"] <= p.residual_factor * floor,
            valid=not v["diverged"],
            diagnostics={"residual_over_floor": v["residual"] / floor},
        )


# ---------------------------------------------------------------------------
# Kernel
# ---------------------------------------------------------------------------


class KernelDecayKind:
    """Self-similar decay ``|K(t, .)| ~ t^{-1/4}`` of the fundamental solution."""

    kind = ExperimentKind.KERNEL_DECAY
    columns = (
        Column(name="sup_abs", units="|K| max over window"),
        Column(name="certificate_delta", units="absolute"),
        Column(name="collapse_deviation", units="absolute"),
    )

    def __init__(self, params: KernelDecayParams, lab: LabConfig, seed: int = 0):
        self.params = params

    def points(self) -> List[Point]:
        return [{"t": t} for t in self.params.times]

    def measure(self, point: Point) -> Measurement:
        p, t = self.params, point["t"]
        xs = np.linspace(-p.x_max, p.x_max, p.samples)
        sup = float(np.max(np.abs(kernel_profile(t, xs, p.cutoff))))
        cert = certify_kernel(t, np.linspace(-4.0, 4.0, p.certify_points), p.certify_cutoff)
        ys = np.linspace(-4.0, 4.0, 17)
        scaled = t**0.25 * np.abs(kernel_profile(t, ys * t**0.25, p.cutoff))
        collapse = float(np.max(np.abs(scaled - np.abs(kernel_profile(1.0, ys, p.cutoff)))))
        return Measurement(
            {"sup_abs": sup, "certificate_delta": cert.delta, "collapse_deviation": collapse}
        )

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        p = self.params
        fit = fit_slope([r.point["t"] for r in records], _values(records, "sup_abs"))
        collapse = max(_values(records, "collapse_deviation"))
        delta = max(_values(records, "certificate_delta"))
        return Summary(
            passed=abs(fit.slope - p.expected_slope) <= p.slope_tolerance
            and collapse <= p.stability_tolerance,
            valid=delta <= p.stability_tolerance,
            slope=fit.slope,
            residual=fit.residual,
            diagnostics={"collapse_deviation": collapse, "certificate_delta": delta},
        )


# ---------------------------------------------------------------------------
# Threshold table
# ---------------------------------------------------------------------------


class ThresholdsKind:
    """``s_c``, ``s_0`` and the well-posedness thresholds over ``(gamma, m)``."""

    kind = ExperimentKind.THRESHOLDS
    columns = (
        Column(name="s_c", units="Sobolev index"),
        Column(name="s0", units="Sobolev index"),
        Column(name="s0_open", units="bool"),
        *(Column(name=f"wp_{form.value}", units="Sobolev index") for form in WellposednessForm),
    )

    def __init__(self, params: ThresholdsParams, lab: LabConfig, seed: int = 0):
        self.params = params

    def points(self) -> List[Point]:
        return [{"gamma": g, "m": m} for g in self.params.gammas for m in self.params.ms]

    def measure(self, point: Point) -> Measurement:
        gamma, m = point["gamma"], point["m"]
        s_c, s0 = regularity_thresholds(gamma, m)
        values = {"s_c": float(s_c), "s0": float(s0), "s0_open": float(threshold_is_open(gamma, m))}
        for form in WellposednessForm:
            values[f"wp_{form.value}"] = float(wellposedness_threshold(gamma, m, form))
        return Measurement(values)

    def summarize(self, records: Sequence[PointRecord]) -> Summary:
        return Summary(passed=True)


# ---------------------------------------------------------------------------
# Factory
# ---------------------------------------------------------------------------

_KINDS = {
    ExperimentKind.CONSERVATION_DRIFT: ConservationDriftKind,
    ExperimentKind.SCALING_INVARIANCE: ScalingInvarianceKind,
    ExperimentKind.NORM_INFLATION: NormInflationKind,
    ExperimentKind.BILINEAR_SWEEP: BilinearSweepKind,
    ExperimentKind.REFINED_BILINEAR_SWEEP: RefinedBilinearKind,
    ExperimentKind.LINEAR_ESTIMATE_SWEEP: LinearEstimateKind,
    ExperimentKind.HIERARCHY_EQUIVALENCE: HierarchyEquivalenceKind,
    ExperimentKind.PICARD_CONVERGENCE: PicardConvergenceKind,
    ExperimentKind.KERNEL_DECAY: KernelDecayKind,
    ExperimentKind.THRESHOLDS: ThresholdsKind,
}


def create_kind(cfg: ExperimentConfig, lab: Optional[LabConfig] = None) -> KindRunner:
    """Factory that returns the runner for *cfg.kind* with validated parameters."""
    params: KindParams = cfg.parsed_parameters()
    try:
        factory = _KINDS[cfg.kind]
    except KeyError:
        raise ValueError(f"Unsupported experiment kind: {cfg.kind!r}") from None
    return factory(params, lab or LabConfig(), cfg.seed)  # type: ignore[arg-type]
