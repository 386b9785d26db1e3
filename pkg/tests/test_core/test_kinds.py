"""Tests for experiment kinds: sweep points, measurements and summaries."""

from __future__ import annotations

import pytest

from fourlab.core.experiments import KindRunner, create_kind, run_experiment
from fourlab.core.types import ExperimentConfig, ExperimentKind, LabConfig, PointRecord


def _kind(kind: str, **parameters):
    return create_kind(ExperimentConfig(kind=kind, parameters=parameters), LabConfig())


def _records(points, values_for):
    return [PointRecord(index=i, point=p, values=values_for(p)) for i, p in enumerate(points)]


class TestCreateKind:
    @pytest.mark.parametrize("kind", list(ExperimentKind))
    def test_every_kind_builds(self, kind):
        runner = create_kind(ExperimentConfig(kind=kind))
        assert isinstance(runner, KindRunner)
        assert runner.kind is kind
        assert runner.points()
        assert len({c.name for c in runner.columns}) == len(runner.columns)

    def test_point_counts(self):
        assert len(_kind("bilinear_sweep").points()) == 7 * 10
        assert len(_kind("linear_estimate_sweep").points()) == 5 * 8
        assert len(_kind("refined_bilinear_sweep").points()) == 2 * 4
        assert len(_kind("thresholds").points()) == 3 * 5

    def test_lab_defaults_fill_unset_parameters(self):
        lab = LabConfig(
            analysis={"bound_factor": 6.0}, inflation={"points": 8, "refine_points": 16}
        )
        bilinear = create_kind(ExperimentConfig(kind="bilinear_sweep"), lab)
        inflation = create_kind(ExperimentConfig(kind="norm_inflation"), lab)
        assert bilinear.bound_factor == 6.0
        assert inflation.points_per_band == 8
        assert inflation.control_s == pytest.approx(0.25)


class TestThresholdsKind:
    def test_cubic_dnls_row(self):
        values = _kind("thresholds").measure({"gamma": 1, "m": 3}).values
        assert values["s_c"] == -1.0
        assert values["s0"] == 0.0
        assert values["s0_open"] == 0.0
        assert values["wp_general"] == 1.0
        assert values["wp_gauge"] == 0.0

    def test_open_threshold_flag(self):
        values = _kind("thresholds").measure({"gamma": 1, "m": 5}).values
        assert values["s0_open"] == 1.0


class TestSummaries:
    def test_conservation_separates_control(self):
        kind = _kind("conservation_drift")
        ref = {"phi0_drift": 1e-13, "phi1_drift": 1e-11, "phi2_drift": 1e-9, "boundary": 1e-12}
        records = [
            PointRecord(index=0, point={"case": "integrable"}, values=ref),
            PointRecord(index=1, point={"case": "control"}, values={**ref, "phi1_drift": 1e-5}),
        ]
        summary = kind.summarize(records)
        assert summary.passed and summary.valid
        assert summary.diagnostics["control_separation"] == pytest.approx(1e6)

    def test_conservation_flags_wraparound(self):
        kind = _kind("conservation_drift")
        ref = {"phi0_drift": 1e-13, "phi1_drift": 1e-11, "phi2_drift": 1e-9, "boundary": 1e-4}
        records = [
            PointRecord(index=0, point={"case": "integrable"}, values=ref),
            PointRecord(index=1, point={"case": "control"}, values={**ref, "phi1_drift": 1e-5}),
        ]
        assert not kind.summarize(records).valid

    def test_norm_inflation_rate(self):
        kind = _kind("norm_inflation")
        records = _records(
            kind.points(),
            lambda p: {
                "sup_norm": p["N"] ** 0.5,
                "sup_norm_refined": p["N"] ** 0.5,
                "control_sup_norm": 1.0,
            },
        )
        summary = kind.summarize(records)
        assert summary.slope == pytest.approx(0.5)
        assert summary.diagnostics["expected_slope"] == pytest.approx(0.5)
        assert summary.passed and summary.valid

    def test_norm_inflation_refinement_mismatch_is_invalid(self):
        kind = _kind("norm_inflation")
        records = _records(
            kind.points(),
            lambda p: {
                "sup_norm": p["N"] ** 0.5,
                "sup_norm_refined": p["N"] ** 0.6,
                "control_sup_norm": 1.0,
            },
        )
        assert not kind.summarize(records).valid

    def test_bilinear_flat_ratios_pass(self):
        kind = _kind("bilinear_sweep", N1s=[8, 16, 32], seeds=2)
        records = _records(kind.points(), lambda p: {"ratio": 1.0 + 0.2 * p["draw"]})
        summary = kind.summarize(records)
        assert summary.slope == pytest.approx(0.0, abs=1e-12)
        assert summary.passed

    def test_bilinear_growing_ratios_fail(self):
        kind = _kind("bilinear_sweep", N1s=[8, 16, 32], seeds=2)
        records = _records(kind.points(), lambda p: {"ratio": p["N1"] ** 0.5})
        summary = kind.summarize(records)
        assert summary.slope == pytest.approx(0.5)
        assert not summary.passed

    def test_refined_bilinear_slopes_per_sign(self):
        kind = _kind("refined_bilinear_sweep")
        records = _records(
            kind.points(), lambda p: {"ratio": p["L"] ** (0.3 if p["sign"] == "+" else 0.0)}
        )
        summary = kind.summarize(records)
        assert summary.diagnostics["slope_-"] == pytest.approx(0.0, abs=1e-12)
        assert summary.slope == pytest.approx(0.3)
        assert not summary.passed

    def test_linear_estimates_spread(self):
        kind = _kind("linear_estimate_sweep")
        flat = kind.summarize(_records(kind.points(), lambda p: {"ratio": 2.0}))
        assert flat.passed
        growing = kind.summarize(
            _records(
                kind.points(),
                lambda p: {"ratio": p["N"] if p["estimate"] == "kato" else 2.0},
            )
        )
        assert not growing.passed
        assert growing.diagnostics["spread_kato"] == pytest.approx(128.0)
        assert growing.diagnostics["slope_kato"] == pytest.approx(1.0)

    def test_picard_divergence_is_invalid(self):
        kind = _kind("picard_convergence")
        values = {
            "first_ratio": 0.01,
            "max_ratio": 0.02,
            "match": 1e-9,
            "residual": 1e-8,
            "residual_floor": 1e-8,
            "diverged": 0.0,
        }
        good = kind.summarize(_records(kind.points(), lambda p: values))
        assert good.passed and good.valid
        bad = kind.summarize(_records(kind.points(), lambda p: {**values, "diverged": 1.0}))
        assert not bad.valid

    def test_kernel_decay_slope(self):
        kind = _kind("kernel_decay")
        records = _records(
            kind.points(),
            lambda p: {
                "sup_abs": 0.3 * p["t"] ** -0.25,
                "certificate_delta": 1e-12,
                "collapse_deviation": 1e-10,
            },
        )
        summary = kind.summarize(records)
        assert summary.slope == pytest.approx(-0.25)
        assert summary.passed and summary.valid


class TestMeasurements:
    def test_hierarchy_flows(self):
        kind = _kind("hierarchy_equivalence")
        flow1 = kind.measure({"flow": 1}).values
        assert flow1["relative_gap"] < 1e-8
        assert flow1["boundary"] < 1e-10

    def test_linear_shells_draw_independent_data(self):
        kind = _kind("linear_estimate_sweep", Ns=[4.0, 8.0])
        points = [p for p in kind.points() if p["estimate"] == "kato"]
        ratios = [kind.measure(p).values["ratio"] for p in points]
        # one datum rescaled across shells would give equal Kato ratios
        assert abs(ratios[0] - ratios[1]) > 1e-6 * ratios[0]

    def test_maximal_point_uses_coherent_packet(self):
        kind = _kind("linear_estimate_sweep", Ns=[2.0, 256.0])
        points = [p for p in kind.points() if p["estimate"] == "maximal"]
        values = [kind.measure(p).values["ratio"] for p in points]
        assert all(0.0 < v < 10.0 for v in values)
        assert max(values) / min(values) < 4.0

    def test_conservation_returns_trace(self):
        kind = _kind("conservation_drift", n=512, T=0.004, dt=1e-3)
        measurement = kind.measure(kind.points()[0])
        trace, cfg = measurement.traces["integrable"]
        assert trace.count == cfg.steps + 1 == 5
        assert measurement.values["phi0_drift"] < 1e-10

    @pytest.mark.slow
    def test_scaling_invariance(self):
        kind = _kind("scaling_invariance")
        records = [
            PointRecord(index=i, point=p, values=kind.measure(p).values)
            for i, p in enumerate(kind.points())
        ]
        assert kind.summarize(records).passed

    @pytest.mark.slow
    def test_picard_convergence(self):
        kind = _kind("picard_convergence")
        (point,) = kind.points()
        measurement = kind.measure(point)
        assert set(measurement.traces) == {"picard", "reference"}
        summary = kind.summarize([PointRecord(index=0, point=point, values=measurement.values)])
        assert summary.passed and summary.valid


@pytest.mark.slow
class TestDefaultSweeps:
    """Every acceptance sweep passes end to end with its default parameters."""

    @staticmethod
    def _run(tmp_path, kind, **parameters):
        cfg = ExperimentConfig(kind=kind, parameters=parameters)
        return run_experiment(cfg, LabConfig(output_dir=str(tmp_path)))

    @pytest.mark.parametrize(
        "kind",
        ["linear_estimate_sweep", "bilinear_sweep", "refined_bilinear_sweep", "kernel_decay"],
    )
    def test_sweep_passes(self, tmp_path, kind):
        record = self._run(tmp_path, kind)
        assert record.passed and record.valid

    @pytest.mark.parametrize("gamma,s", [(1, -0.25), (2, 0.0), (3, 0.5)])
    def test_norm_inflation_passes(self, tmp_path, gamma, s):
        record = self._run(tmp_path, "norm_inflation", gamma=gamma, s=s)
        assert record.passed and record.valid
