"""Tests for fourlab.toml loading and LabConfig construction."""

from __future__ import annotations

import math

import pytest

from fourlab.core.types.config import (
    AnalysisConfig,
    InflationConfig,
    LabConfig,
    RunnerConfig,
    SolverSettings,
    load_config,
)


class TestLoadConfig:
    def test_nonexistent_file_returns_defaults(self):
        config = load_config("/nonexistent/path/fourlab.toml")
        assert config.grid.n == 4096
        assert config.grid.period == pytest.approx(64 * math.pi)

    def test_none_path_returns_defaults(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        config = load_config(None)
        assert isinstance(config, LabConfig)
        assert config.output_dir == "fourlab-results"

    def test_none_path_reads_working_directory(self, tmp_path, monkeypatch):
        (tmp_path / "fourlab.toml").write_text("[runner]\nworkers = 7\n")
        monkeypatch.chdir(tmp_path)
        assert load_config(None).runner.workers == 7

    def test_load_full_toml(self, tmp_path):
        toml_file = tmp_path / "fourlab.toml"
        toml_file.write_text(
            'verbose = true\n'
            'output_dir = "/tmp/lab"\n'
            '\n'
            '[grid]\n'
            'n = 1024\n'
            'period = 100.0\n'
            '\n'
            '[analysis]\n'
            'eps = 0.05\n'
            'bound_factor = 8.0\n'
            '\n'
            '[solver]\n'
            'blowup_factor = 1e3\n'
            '\n'
            '[inflation]\n'
            'points = 16\n'
            'refine_points = 48\n'
            'time_samples = 9\n'
            '\n'
            '[runner]\n'
            'workers = 2\n'
        )
        config = load_config(str(toml_file))
        assert config.verbose is True
        assert config.output_dir == "/tmp/lab"
        assert config.grid.n == 1024
        assert config.grid.period == 100.0
        assert config.analysis.eps == 0.05
        assert config.analysis.bound_factor == 8.0
        assert config.solver.blowup_factor == 1e3
        assert config.inflation.points == 16
        assert config.inflation.refine_points == 48
        assert config.inflation.time_samples == 9
        assert config.runner.workers == 2

    def test_load_partial_toml(self, tmp_path):
        """Only [analysis]; other sections keep their defaults."""
        toml_file = tmp_path / "fourlab.toml"
        toml_file.write_text("[analysis]\neps = 0.02\n")
        config = load_config(str(toml_file))
        assert config.analysis.eps == 0.02
        assert config.analysis.bound_factor == 4.0
        assert config.inflation.points == 32
        assert config.runner.workers == 4

    def test_load_empty_toml(self, tmp_path):
        toml_file = tmp_path / "fourlab.toml"
        toml_file.write_text("")
        config = load_config(str(toml_file))
        assert config.solver.blowup_factor == 1e6

    def test_invalid_value_raises(self, tmp_path):
        toml_file = tmp_path / "fourlab.toml"
        toml_file.write_text("[runner]\nworkers = 0\n")
        with pytest.raises(ValueError):
            load_config(str(toml_file))


class TestLabConfig:
    def test_refinement_must_be_finer(self):
        with pytest.raises(ValueError, match="refine_points"):
            LabConfig(inflation=InflationConfig(points=64, refine_points=64))

    def test_section_defaults(self):
        assert AnalysisConfig().eps == 0.01
        assert SolverSettings().dt_safety == 0.5
        assert RunnerConfig().workers == 4

    def test_bound_factor_above_one(self):
        with pytest.raises(ValueError):
            AnalysisConfig(bound_factor=1.0)
