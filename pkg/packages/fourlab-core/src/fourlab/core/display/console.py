"""Rich terminal reporting for experiment sweeps."""

from __future__ import annotations

import math
from typing import Any, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from fourlab.core.events import SweepEvent, SweepEventType
from fourlab.core.types.experiment import ResultRecord


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return str(value)
        return f"{value:.6g}"
    return str(value)


class ConsoleReporter:
    """Streams finished points to stderr and prints a closing table and verdict.

    Pass :meth:`on_event` as the runner's event callback.
    """

    def __init__(self, console: Optional[Console] = None, verbose: bool = False):
        self._console = console or Console(stderr=True)
        self._verbose = verbose

    def on_event(self, event: SweepEvent) -> None:
        if event.event_type is SweepEventType.POINT_END:
            coords = " ".join(f"{k}={_fmt(v)}" for k, v in event.point.items())
            line = Text(f"  [{event.index:>3}] ", style="dim")
            line.append(coords, style="cyan")
            line.append(f"  {event.duration:.2f}s", style="dim")
            self._console.print(line)
        elif event.event_type is SweepEventType.POINT_START and self._verbose:
            self._console.print(f"  [dim]start {event.index}[/dim]")

    def report(self, record: ResultRecord) -> None:
        table = Table(title=record.kind.value, header_style="bold")
        keys = list(record.points[0].point) if record.points else []
        for key in keys:
            table.add_column(key, style="cyan")
        for column in record.columns:
            table.add_column(column.name, justify="right")
        for p in record.points:
            table.add_row(
                *(_fmt(p.point.get(k, "")) for k in keys),
                *(_fmt(p.values.get(c.name, math.nan)) for c in record.columns),
            )
        self._console.print(table)

        lines = [
            f"slope     {_fmt(record.slope) if record.slope is not None else '-'}",
            f"residual  {_fmt(record.residual) if record.residual is not None else '-'}",
        ]
        lines += [f"{k}  {_fmt(v)}" for k, v in record.diagnostics.items()]
        verdict = "PASS" if record.passed else "FAIL"
        if not record.valid:
            verdict += " (invalid)"
        style = "green" if record.succeeded else "red"
        self._console.print(
            Panel(
                "\n".join(lines),
                title=f"[bold {style}]{verdict}[/bold {style}]",
                subtitle=f"[dim]{record.wall_ms / 1e3:.1f}s[/dim]",
                border_style=style,
            )
        )
