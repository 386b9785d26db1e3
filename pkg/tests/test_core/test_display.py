"""Tests for ConsoleReporter."""

from __future__ import annotations

import io

from rich.console import Console

from fourlab.core.display import ConsoleReporter
from fourlab.core.events import SweepEvent, SweepEventType
from fourlab.core.types import Column, ExperimentKind, PointRecord, ResultRecord


def _reporter(verbose: bool = False):
    buffer = io.StringIO()
    console = Console(file=buffer, width=120, color_system=None)
    return ConsoleReporter(console=console, verbose=verbose), buffer


def _record(**kwargs) -> ResultRecord:
    return ResultRecord(
        kind=ExperimentKind.KERNEL_DECAY,
        config={},
        columns=[Column(name="sup_abs", units="|K|")],
        points=[PointRecord(index=0, point={"t": 2.0}, values={"sup_abs": 0.123456789})],
        slope=-0.25,
        **kwargs,
    )


class TestConsoleReporter:
    def test_point_end_line(self):
        reporter, buffer = _reporter()
        reporter.on_event(
            SweepEvent(SweepEventType.POINT_END, index=3, point={"N": 16.0}, duration=0.5)
        )
        text = buffer.getvalue()
        assert "N=16" in text
        assert "0.50s" in text

    def test_point_start_only_when_verbose(self):
        quiet, quiet_buffer = _reporter()
        quiet.on_event(SweepEvent(SweepEventType.POINT_START, index=0))
        assert quiet_buffer.getvalue() == ""

        loud, loud_buffer = _reporter(verbose=True)
        loud.on_event(SweepEvent(SweepEventType.POINT_START, index=0))
        assert "start 0" in loud_buffer.getvalue()

    def test_report_pass(self):
        reporter, buffer = _reporter()
        reporter.report(_record(passed=True))
        text = buffer.getvalue()
        assert "PASS" in text
        assert "0.123457" in text
        assert "-0.25" in text

    def test_report_invalid(self):
        reporter, buffer = _reporter()
        reporter.report(_record(passed=True, valid=False, diagnostics={"boundary": 1e-3}))
        text = buffer.getvalue()
        assert "PASS (invalid)" in text
        assert "boundary" in text
