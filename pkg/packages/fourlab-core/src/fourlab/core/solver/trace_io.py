"""Binary trace files with a JSON sidecar holding the solve configuration.

Layout (little-endian)::

    magic   4 bytes  b"FLTR"
    version u4
    n       u8
    period  f8
    t0      f8
    dt      f8
    count   u8
    data    count * n complex128, row-major

The sidecar lives next to the binary with a ``.json`` suffix.
"""

from __future__ import annotations

import json
import logging
import struct
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import numpy as np

from fourlab.spectral import SpaceTimeTrace, make_grid

from .config import SolveConfig

logger = logging.getLogger(__name__)

MAGIC = b"FLTR"
VERSION = 1
_HEADER = struct.Struct("<4sIQdddQ")


def sidecar_path(path: Path) -> Path:
    return path.with_suffix(".json")


def write_trace(path: Path | str, trace: SpaceTimeTrace, cfg: Optional[SolveConfig] = None) -> Path:
    """Write *trace* to *path* and, when *cfg* is given, its sidecar."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = _HEADER.pack(
        MAGIC,
        VERSION,
        trace.grid.n,
        trace.grid.period,
        trace.t0,
        trace.dt,
        trace.count,
    )
    data = np.ascontiguousarray(trace.values, dtype="<c16")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(data.tobytes(order="C"))
    if cfg is not None:
        sidecar_path(path).write_text(cfg.model_dump_json(indent=2))
    logger.debug("Wrote %d x %d trace to %s", trace.count, trace.grid.n, path)
    return path


def read_trace(path: Path | str) -> Tuple[SpaceTimeTrace, Optional[Dict[str, Any]]]:
    """Read a trace and its sidecar (``None`` when absent).

    The sidecar is returned as the plain JSON document.

    Raises
    ------
    ValueError
        If the file is not a trace file, has an unknown version or is truncated.
    """
    path = Path(path)
    raw = path.read_bytes()
    if len(raw) < _HEADER.size:
        raise ValueError(f"{path} is too short for a trace header")
    magic, version, n, period, t0, dt, count = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise ValueError(f"{path} is not a trace file (magic {magic!r})")
    if version != VERSION:
        raise ValueError(f"Unsupported trace version: {version!r}")
    expected = _HEADER.size + 16 * n * count
    if len(raw) != expected:
        raise ValueError(f"{path} holds {len(raw)} bytes, expected {expected}")
    values = np.frombuffer(raw, dtype="<c16", offset=_HEADER.size).reshape(count, n)
    trace = SpaceTimeTrace(make_grid(int(n), period), t0, dt, values)

    sidecar = sidecar_path(path)
    config = json.loads(sidecar.read_text()) if sidecar.exists() else None
    return trace, config
