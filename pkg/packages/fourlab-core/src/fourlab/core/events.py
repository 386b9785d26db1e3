"""Sweep event system for observable experiment runs."""

from __future__ import annotations

from enum import Enum
from typing import Any, Callable, Dict, Optional


class SweepEventType(Enum):
    """Types of events emitted while an experiment sweeps its points."""

    POINT_START = "point_start"
    POINT_END = "point_end"
    DIAGNOSTIC = "diagnostic"
    RECORD = "record"


class SweepEvent:
    """Lightweight event emitted around sweep points and at the end of a run."""

    __slots__ = (
        "event_type",
        "kind",
        "index",
        "point",
        "values",
        "duration",
        "metadata",
    )

    def __init__(
        self,
        event_type: SweepEventType,
        kind: str = "",
        index: int = -1,
        point: Optional[Dict[str, Any]] = None,
        values: Optional[Dict[str, float]] = None,
        duration: float = 0.0,
        metadata: Optional[Dict[str, Any]] = None,
    ):
        self.event_type = event_type
        self.kind = kind
        self.index = index
        self.point = point or {}
        self.values = values or {}
        self.duration = duration
        self.metadata = metadata or {}


SweepEventCallback = Callable[[SweepEvent], None]
