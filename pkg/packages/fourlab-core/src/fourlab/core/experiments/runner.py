"""Experiment runner: sweeps points in worker threads and writes the result directory."""

from __future__ import annotations

import asyncio
import logging
import time
from pathlib import Path
from typing import Any, Dict, List, Optional

from fourlab.spectral import ResolutionError

from ..events import SweepEvent, SweepEventCallback, SweepEventType
from ..types.config import LabConfig
from ..types.experiment import ExperimentConfig, ResultRecord
from .kinds import KindRunner, Point, create_kind
from .storage import ResultStore
from .telemetry import SweepLogger

logger = logging.getLogger(__name__)


class AsyncExperimentRunner:
    """Runs one experiment; sweep points are independent and measured concurrently.

    At most ``workers`` points are in flight at once. Results are collected
    in sweep order whatever order the points finish in.
    """

    def __init__(
        self,
        cfg: ExperimentConfig,
        lab: Optional[LabConfig] = None,
        event_callback: Optional[SweepEventCallback] = None,
        dump_traces: bool = False,
        workers: Optional[int] = None,
    ):
        self.cfg = cfg
        self.lab = lab or LabConfig()
        self.kind: KindRunner = create_kind(cfg, self.lab)
        self.store = ResultStore(cfg.out_dir or self.lab.output_dir)
        self.dump_traces = dump_traces
        self.workers = workers or self.lab.runner.workers
        self._event_callback = event_callback

    @property
    def out_dir(self) -> Path:
        return self.store.directory

    def _emit(self, event: SweepEvent) -> None:
        if self._event_callback is None:
            return
        try:
            self._event_callback(event)
        except Exception:
            logger.debug("Sweep event callback error", exc_info=True)

    def _config_document(self) -> Dict[str, Any]:
        return {
            "kind": self.cfg.kind.value,
            "parameters": self.kind_parameters(),
            "seed": self.cfg.seed,
            "out_dir": str(self.out_dir),
        }

    def kind_parameters(self) -> Dict[str, Any]:
        """Parameters with every default filled in."""
        return self.cfg.parsed_parameters().model_dump(mode="json")

    async def _sweep_point(
        self,
        index: int,
        point: Point,
        telemetry: SweepLogger,
        semaphore: asyncio.Semaphore,
        failures: List[BaseException],
    ) -> None:
        kind = self.cfg.kind.value
        async with semaphore:
            if failures:
                return
            self._emit(SweepEvent(SweepEventType.POINT_START, kind=kind, index=index, point=point))
            telemetry.begin_point(index)
            try:
                measurement = await asyncio.to_thread(self.kind.measure, point)
            except ResolutionError as exc:
                failures.append(ResolutionError(f"{kind} point {index} {point}: {exc}"))
                raise failures[-1] from exc
            except Exception as exc:
                failures.append(exc)
                raise
            if failures:
                logger.debug("Dropping %s point %d after a failed sibling", kind, index)
                return
            record = telemetry.end_point(index, point, measurement.values)

        if self.dump_traces:
            for name, (trace, solve_cfg) in measurement.traces.items():
                self.store.save_trace(f"{index:03d}_{name}", trace, solve_cfg)
        self._emit(
            SweepEvent(
                SweepEventType.POINT_END,
                kind=kind,
                index=index,
                point=point,
                values=record.values,
                duration=record.wall_ms / 1e3,
            )
        )

    async def run(self) -> ResultRecord:
        """Sweep every point, summarize, and write ``results.csv`` and ``summary.json``.

        Raises
        ------
        ResolutionError
            If a point does not resolve on its grid; the message names the point.
        ValueError
            If a point's inputs violate a precondition of the measurement.
        """
        start = time.monotonic()
        points = self.kind.points()
        logger.info(
            "Running %s: %d points on %d workers", self.cfg.kind.value, len(points), self.workers
        )
        self.store.reset()
        telemetry = SweepLogger(self.store.points_log)
        semaphore = asyncio.Semaphore(self.workers)
        failures: List[BaseException] = []
        # Siblings settle before the first failure propagates, so points.jsonl is final.
        await asyncio.gather(
            *(
                self._sweep_point(i, p, telemetry, semaphore, failures)
                for i, p in enumerate(points)
            ),
            return_exceptions=True,
        )
        if failures:
            raise failures[0]

        records = telemetry.records
        summary = self.kind.summarize(records)
        for key, value in summary.diagnostics.items():
            self._emit(
                SweepEvent(
                    SweepEventType.DIAGNOSTIC,
                    kind=self.cfg.kind.value,
                    metadata={"name": key, "value": value},
                )
            )
        record = ResultRecord(
            kind=self.cfg.kind,
            config=self._config_document(),
            columns=list(self.kind.columns),
            points=records,
            slope=summary.slope,
            residual=summary.residual,
            passed=summary.passed,
            valid=summary.valid,
            diagnostics=summary.diagnostics,
            wall_ms=1e3 * (time.monotonic() - start),
        )
        self.store.save(record)
        if not record.valid:
            logger.warning("%s finished with failed validity diagnostics", self.cfg.kind.value)
        self._emit(
            SweepEvent(
                SweepEventType.RECORD,
                kind=self.cfg.kind.value,
                duration=record.wall_ms / 1e3,
                metadata={"passed": record.passed, "valid": record.valid, "slope": record.slope},
            )
        )
        return record


def _run(coro):
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return asyncio.run(coro)
    import concurrent.futures

    with concurrent.futures.ThreadPoolExecutor() as pool:
        return pool.submit(asyncio.run, coro).result()


def run_experiment(
    cfg: ExperimentConfig,
    lab: Optional[LabConfig] = None,
    event_callback: Optional[SweepEventCallback] = None,
    dump_traces: bool = False,
    workers: Optional[int] = None,
) -> ResultRecord:
    """Synchronous wrapper around :class:`AsyncExperimentRunner`.

    Safe to call from inside a running event loop.
    """
    runner = AsyncExperimentRunner(cfg, lab, event_callback, dump_traces, workers)
    return _run(runner.run())
