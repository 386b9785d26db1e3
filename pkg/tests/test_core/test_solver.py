"""Tests for the time stepper, Picard iteration, invariants, residuals and trace files."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest

from fourlab.core.nonlinearity import FukumotoMoffatt, NonlinearitySpec, build_spec, gauge_cubic
from fourlab.core.solver import (
    BlowUpError,
    PicardReport,
    SolveConfig,
    drift_report,
    invariants,
    pde_residual,
    picard_sequence,
    read_trace,
    simulate,
    suggest_dt,
    sup_l2,
    time_reversal_error,
    write_trace,
)
from fourlab.spectral import FREE, LinearSymbol, free_evolve, free_trace


def _final_error(a, b) -> float:
    return (a[a.count - 1] - b[b.count - 1]).l2_norm()


class TestSolveConfig:
    def test_steps_land_on_T(self):
        cfg = SolveConfig(spec=gauge_cubic(1), T=0.1, dt=0.03)
        assert cfg.steps == 3
        assert cfg.step == pytest.approx(0.1 / 3)

    def test_dt_must_not_exceed_T(self):
        with pytest.raises(ValueError, match="exceeds the final time"):
            SolveConfig(spec=gauge_cubic(1), T=0.1, dt=0.2)

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            SolveConfig(spec=gauge_cubic(1), T=0.0, dt=0.1)
        with pytest.raises(ValueError):
            SolveConfig(spec=gauge_cubic(1), T=0.1, dt=0.01, dt_safety=0.0)

    def test_dumps_spec_and_symbol(self):
        cfg = SolveConfig(spec=gauge_cubic(1), sym=LinearSymbol(-1.0, 1.0), T=0.1, dt=0.01)
        data = json.loads(cfg.model_dump_json())
        assert data["sym"] == {"nu": -1.0, "beta": 1.0}
        assert data["spec"]["gamma"] == 1


class TestSimulate:
    def test_linear_run_matches_free_group(self, packet):
        cfg = SolveConfig(spec=NonlinearitySpec.zero(), T=0.5, dt=0.05)
        trace = simulate(packet, cfg)
        assert trace.count == cfg.steps + 1
        expected = free_evolve(packet, 0.5)
        assert (trace[trace.count - 1] - expected).l2_norm() < 1e-12

    def test_first_snapshot_is_initial_datum(self, packet):
        trace = simulate(packet, SolveConfig(spec=gauge_cubic(1), T=0.01, dt=0.005))
        np.testing.assert_array_equal(trace[0].values, packet.values)

    def test_fourth_order_step_halving(self, make_packet, solver_grid):
        u0 = make_packet(solver_grid, a=1.0)
        runs = [
            simulate(u0, SolveConfig(spec=gauge_cubic(1), T=0.05, dt=dt))
            for dt in (0.005, 0.0025, 0.00125)
        ]
        coarse = _final_error(runs[0], runs[1])
        fine = _final_error(runs[1], runs[2])
        assert coarse / fine > 8.0

    def test_record_every(self, packet):
        cfg = SolveConfig(spec=gauge_cubic(1), T=0.04, dt=0.01, record_every=2)
        trace = simulate(packet, cfg)
        assert trace.count == 3
        assert trace.dt == pytest.approx(0.02)

    def test_record_every_must_divide_steps(self, packet):
        cfg = SolveConfig(spec=gauge_cubic(1), T=0.03, dt=0.01, record_every=2)
        with pytest.raises(ValueError, match="record_every"):
            simulate(packet, cfg)

    def test_blow_up_reports_step(self, packet):
        cfg = SolveConfig(spec=gauge_cubic(1), T=0.02, dt=0.01, blowup_factor=0.5)
        with pytest.raises(BlowUpError) as info:
            simulate(packet, cfg)
        assert info.value.step == 1
        assert info.value.time == pytest.approx(0.01)

    def test_on_step_callback(self, packet):
        seen = []
        simulate(
            packet,
            SolveConfig(spec=gauge_cubic(1), T=0.03, dt=0.01),
            on_step=lambda j, t: seen.append(j),
        )
        assert seen == [1, 2, 3]

    def test_suggest_dt(self, packet):
        assert suggest_dt(packet.grid, NonlinearitySpec.zero(), packet) == math.inf
        expected = 0.5 / (packet.grid.max_wavenumber * 3 * packet.max_abs() ** 2)
        assert suggest_dt(packet.grid, gauge_cubic(1), packet) == pytest.approx(expected)

    def test_time_reversal(self, packet):
        assert time_reversal_error(packet, LinearSymbol(-1.0, 1.0), T=0.2, dt=0.02) < 1e-12


class TestPicard:
    @pytest.fixture()
    def cfg(self):
        return SolveConfig(spec=gauge_cubic(1), T=0.05, dt=1e-3)

    def test_small_data_contracts(self, small_packet, cfg):
        report = picard_sequence(small_packet, cfg, kmax=4)
        assert len(report.iterates) == 5
        assert len(report.ratios) == 3
        assert report.contracting(0.5)
        assert not report.diverged

    def test_limit_matches_time_stepper(self, small_packet, cfg):
        report = picard_sequence(small_packet, cfg, kmax=4)
        assert sup_l2(report.limit, simulate(small_packet, cfg)) < 1e-6

    def test_zero_nonlinearity_is_free_evolution(self, small_packet):
        cfg = SolveConfig(spec=NonlinearitySpec.zero(), T=0.01, dt=1e-3)
        report = picard_sequence(small_packet, cfg, kmax=2)
        assert report.diff_norms == [0.0, 0.0]
        assert report.ratios == [0.0]

    def test_kmax_at_least_two(self, small_packet, cfg):
        with pytest.raises(ValueError, match="kmax"):
            picard_sequence(small_packet, cfg, kmax=1)

    def test_divergence_flag(self):
        assert PicardReport(ratios=[0.5, 2.0, 3.0]).diverged
        assert not PicardReport(ratios=[2.0, 0.5, 2.0]).diverged


class TestInvariants:
    def test_mass_of_gaussian(self, make_packet, solver_grid):
        a, w = 0.5, 2.0
        phi0, _, _ = invariants(make_packet(solver_grid, a=a, width=w, k0=0.0))
        assert phi0 == pytest.approx(0.5 * a**2 * w * math.sqrt(math.pi), rel=1e-12)

    def test_energy_of_gaussian(self, make_packet, solver_grid):
        a, w = 0.5, 2.0
        _, phi1, _ = invariants(make_packet(solver_grid, a=a, width=w, k0=0.0))
        expected = a**2 * math.sqrt(math.pi) / (4 * w) - a**4 * w * math.sqrt(math.pi / 2) / 8
        assert phi1 == pytest.approx(expected, rel=1e-10)

    def test_phi2_is_real_for_real_data(self, make_packet, solver_grid):
        _, _, phi2 = invariants(make_packet(solver_grid, k0=0.0))
        assert abs(phi2.imag) < 1e-14 * abs(phi2)

    def test_mass_drift_of_free_evolution(self, packet):
        trace = free_trace(packet, count=6, dt=0.1, sym=FREE)
        report = drift_report(trace)
        assert report.phi0.shape == (6,)
        assert report.phi0_drift < 1e-12

    @pytest.mark.slow
    def test_integrable_flow_conserves(self, make_packet, fine_grid):
        u0 = make_packet(fine_grid, a=0.3, width=2.0, k0=0.5)
        cfg = SolveConfig(
            spec=build_spec(FukumotoMoffatt(mu=0.5, nu=-1.0)),
            sym=LinearSymbol(-1.0, 1.0),
            T=0.1,
            dt=1e-3,
        )
        report = drift_report(simulate(u0, cfg))
        assert report.phi0_drift < 1e-8
        assert report.phi1_drift < 1e-6
        assert report.phi2_drift < 1e-4


class TestResidual:
    def test_free_trace_solves_linear_equation(self, packet):
        cfg = SolveConfig(spec=NonlinearitySpec.zero(), T=1e-3, dt=1e-4)
        trace = free_trace(packet, count=11, dt=1e-4)
        assert pde_residual(trace, cfg) < 1e-6

    def test_detects_missing_nonlinearity(self, packet):
        cfg = SolveConfig(spec=gauge_cubic(1), T=1e-3, dt=1e-4)
        trace = free_trace(packet, count=11, dt=1e-4)
        assert pde_residual(trace, cfg) > 1e-3

    def test_needs_five_snapshots(self, packet):
        cfg = SolveConfig(spec=gauge_cubic(1), T=1e-3, dt=1e-4)
        with pytest.raises(ValueError, match="at least 5"):
            pde_residual(free_trace(packet, count=4, dt=1e-4), cfg)


class TestTraceFiles:
    def test_round_trip_with_sidecar(self, tmp_path, packet):
        cfg = SolveConfig(spec=gauge_cubic(1), T=0.02, dt=0.01)
        trace = simulate(packet, cfg)
        path = write_trace(tmp_path / "run.bin", trace, cfg)
        loaded, sidecar = read_trace(path)
        np.testing.assert_array_equal(loaded.values, trace.values)
        assert loaded.grid == trace.grid
        assert (loaded.t0, loaded.dt) == (trace.t0, trace.dt)
        assert sidecar["T"] == 0.02

    def test_without_sidecar(self, tmp_path, packet):
        path = write_trace(tmp_path / "free.bin", free_trace(packet, count=3, dt=0.1))
        _, sidecar = read_trace(path)
        assert sidecar is None

    def test_bad_magic(self, tmp_path, packet):
        path = write_trace(tmp_path / "x.bin", free_trace(packet, count=2, dt=0.1))
        raw = bytearray(path.read_bytes())
        raw[:4] = b"NOPE"
        path.write_bytes(bytes(raw))
        with pytest.raises(ValueError, match="not a trace file"):
            read_trace(path)

    def test_truncated(self, tmp_path, packet):
        path = write_trace(tmp_path / "x.bin", free_trace(packet, count=2, dt=0.1))
        path.write_bytes(path.read_bytes()[:-16])
        with pytest.raises(ValueError, match="expected"):
            read_trace(path)
