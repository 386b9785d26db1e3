"""Per-point telemetry logger for experiment sweeps."""

from __future__ import annotations

import logging
import threading
import time
from pathlib import Path
from typing import Any, Dict, Optional

from fourlab.core.types.experiment import PointRecord

logger = logging.getLogger(__name__)


class SweepLogger:
    """Tracks per-point timings for a sweep.

    Optionally writes each finished point as a JSONL line to *log_path*.
    Points may finish out of order when they run in parallel; the JSONL file
    follows completion order, the returned records carry their sweep index.
    """

    def __init__(self, log_path: Optional[Path] = None):
        self._log_path = log_path
        if log_path is not None:
            log_path.parent.mkdir(parents=True, exist_ok=True)
        self._records: list[PointRecord] = []
        self._starts: Dict[int, float] = {}
        self._lock = threading.Lock()

    @property
    def records(self) -> list[PointRecord]:
        """Finished points in sweep order."""
        with self._lock:
            return sorted(self._records, key=lambda r: r.index)

    def begin_point(self, index: int) -> None:
        with self._lock:
            self._starts[index] = time.monotonic()

    def end_point(self, index: int, point: Dict[str, Any], values: Dict[str, float]) -> PointRecord:
        """Record a finished point and return its model."""
        with self._lock:
            start = self._starts.pop(index, time.monotonic())
            record = PointRecord(
                index=index,
                point=dict(point),
                values=dict(values),
                wall_ms=1e3 * (time.monotonic() - start),
            )
            self._records.append(record)
            self._write_jsonl(record)
        return record

    def _write_jsonl(self, record: PointRecord) -> None:
        if self._log_path is None:
            return
        try:
            with open(self._log_path, "a") as f:
                f.write(record.model_dump_json() + "\n")
        except Exception:
            logger.warning("Failed to write sweep log entry", exc_info=True)
