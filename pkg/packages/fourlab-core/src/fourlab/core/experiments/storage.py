"""Directory-backed storage for experiment results."""

from __future__ import annotations

import csv
import json
import logging
import math
from pathlib import Path
from typing import Any, Iterable, Optional

from fourlab.core.solver import SolveConfig, write_trace
from fourlab.core.types.experiment import ResultRecord
from fourlab.spectral import SpaceTimeTrace

logger = logging.getLogger(__name__)

RESULTS_CSV = "results.csv"
SUMMARY_JSON = "summary.json"
POINTS_JSONL = "points.jsonl"
TRACE_DIR = "traces"


def format_number(value: Any) -> str:
    """Decimal with 15 significant digits; ``inf``/``nan`` spelled out."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, float)):
        x = float(value)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return f"{x:.15g}"
    return str(value)


class ResultStore:
    """Writes ``results.csv``, ``summary.json`` and trace binaries under one directory."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    @property
    def points_log(self) -> Path:
        return self.directory / POINTS_JSONL

    def reset(self) -> None:
        """Remove the files of a previous run so the directory holds one run only."""
        for name in (RESULTS_CSV, SUMMARY_JSON, POINTS_JSONL):
            path = self.directory / name
            if path.exists():
                path.unlink()

    def write_results(self, record: ResultRecord) -> Path:
        """One header row, then one row per sweep point in sweep order.

        The second header line carries the units of every column.
        """
        point_keys = _ordered_keys(p.point for p in record.points)
        value_keys = [c.name for c in record.columns]
        units = {c.name: c.units for c in record.columns}
        path = self.directory / RESULTS_CSV
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["index", *point_keys, *value_keys])
            writer.writerow(["#units", *("" for _ in point_keys), *(units[k] for k in value_keys)])
            for p in sorted(record.points, key=lambda p: p.index):
                writer.writerow(
                    [
                        p.index,
                        *(format_number(p.point.get(k, "")) for k in point_keys),
                        *(format_number(p.values.get(k, math.nan)) for k in value_keys),
                    ]
                )
        return path

    def write_summary(self, record: ResultRecord) -> Path:
        path = self.directory / SUMMARY_JSON
        path.write_text(json.dumps(record.summary(), indent=2, sort_keys=True, default=str))
        return path

    def save(self, record: ResultRecord) -> None:
        self.write_results(record)
        self.write_summary(record)
        logger.info("Wrote %s and %s to %s", RESULTS_CSV, SUMMARY_JSON, self.directory)

    def save_trace(
        self, name: str, trace: SpaceTimeTrace, cfg: Optional[SolveConfig] = None
    ) -> Optional[Path]:
        try:
            return write_trace(self.directory / TRACE_DIR / f"{name}.bin", trace, cfg)
        except OSError:
            logger.warning("Failed to write trace: %s", name, exc_info=True)
            return None

    def load_summary(self) -> Optional[dict]:
        path = self.directory / SUMMARY_JSON
        if not path.exists():
            return None
        try:
            return json.loads(path.read_text())
        except (json.JSONDecodeError, OSError):
            logger.warning("Failed to read summary: %s", path)
            return None


def _ordered_keys(dicts: Iterable[dict]) -> list[str]:
    keys: list[str] = []
    for d in dicts:
        for k in d:
            if k not in keys:
                keys.append(k)
    return keys
