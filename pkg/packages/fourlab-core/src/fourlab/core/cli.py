"""``fourlab`` command line: run one experiment kind or list the parameter schemas.

Exit codes: 0 when the run passes with valid diagnostics, 1 on a numeric
failure or invalid diagnostics, 2 on configuration, validation or
resolution errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler

from fourlab.core.display import ConsoleReporter
from fourlab.core.experiments import run_experiment
from fourlab.core.solver import BlowUpError
from fourlab.core.types import PARAMETER_MODELS, ExperimentConfig, ExperimentKind, load_config

logger = logging.getLogger("fourlab")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


# ---------------------------------------------------------------------------
# Schemas
# ---------------------------------------------------------------------------


def _inline_refs(node: Any, defs: Dict[str, Any]) -> Any:
    if isinstance(node, dict):
        ref = node.get("$ref")
        if isinstance(ref, str) and ref.startswith("#/$defs/"):
            return _inline_refs(defs[ref.rsplit("/", 1)[-1]], defs)
        return {k: _inline_refs(v, defs) for k, v in node.items() if k != "$defs"}
    if isinstance(node, list):
        return [_inline_refs(v, defs) for v in node]
    return node


def kind_schemas() -> Dict[str, Any]:
    """JSON schema of every kind's parameters, with ``$defs`` inlined."""
    out = {}
    for kind, model in PARAMETER_MODELS.items():
        schema = model.model_json_schema()
        out[kind.value] = _inline_refs(schema, schema.get("$defs", {}))
    return out


# ---------------------------------------------------------------------------
# Overrides
# ---------------------------------------------------------------------------


def parse_override(text: str) -> tuple[List[str], Any]:
    """``a.b=value`` to ``(["a", "b"], value)``; the value is JSON when it parses.

    Raises
    ------
    ValueError
        If *text* has no ``=`` or an empty key.
    """
    key, sep, raw = text.partition("=")
    if not sep or not key.strip():
        raise ValueError(f"Override must look like key=value, got {text!r}")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key.strip().split("."), value


def apply_overrides(parameters: Dict[str, Any], overrides: Sequence[str]) -> Dict[str, Any]:
    out = json.loads(json.dumps(parameters))
    for text in overrides:
        path, value = parse_override(text)
        node = out
        for part in path[:-1]:
            child = node.get(part)
            if not isinstance(child, dict):
                child = node[part] = {}
            node = child
        node[path[-1]] = value
    return out


def build_config(
    kind: str,
    config_path: Optional[str] = None,
    overrides: Sequence[str] = (),
    seed: Optional[int] = None,
    out_dir: Optional[str] = None,
) -> ExperimentConfig:
    """Experiment document from an optional JSON file plus command-line edits.

    Raises
    ------
    ValueError
        If the file names another kind, or validation fails (pydantic's
        ``ValidationError`` is a ``ValueError``).
    OSError
        If the file cannot be read.
    """
    document: Dict[str, Any] = {"kind": kind}
    if config_path is not None:
        document = json.loads(Path(config_path).read_text())
        if document.get("kind", kind) != kind:
            raise ValueError(
                f"Config file {config_path!r} is for kind {document.get('kind')!r}, not {kind!r}"
            )
        document["kind"] = kind
    document["parameters"] = apply_overrides(document.get("parameters", {}), overrides)
    if seed is not None:
        document["seed"] = seed
    if out_dir is not None:
        document["out_dir"] = out_dir
    return ExperimentConfig.model_validate(document)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_run_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="Experiment JSON document (kind, parameters, seed, out_dir).")
    p.add_argument("--out", help="Output directory (default: lab output_dir).")
    p.add_argument("--seed", type=int, help="Seed for random test data (u64).")
    p.add_argument(
        "--override",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Set a parameter; VALUE is parsed as JSON, else taken as a string. Repeatable.",
    )
    p.add_argument("--dump-traces", action="store_true", help="Write solver traces as binaries.")
    p.add_argument("--workers", type=int, help="Sweep points measured in parallel.")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fourlab",
        description="Numerical experiments for fourth-order NLS with derivative nonlinearities.",
    )
    ap.add_argument("--lab", help="Lab defaults (TOML); defaults to ./fourlab.toml if present.")
    ap.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="Print the parameter schema of every experiment kind.")

    run = sub.add_parser("run", help="Run one experiment kind.")
    run.add_argument("kind", choices=[k.value for k in ExperimentKind])
    _add_run_arguments(run)

    for kind in ExperimentKind:
        alias = sub.add_parser(kind.value, help=f"Alias for 'run {kind.value}'.")
        alias.set_defaults(kind=kind.value)
        _add_run_arguments(alias)
    return ap


def _setup_logging(verbose: bool) -> None:
    handler = RichHandler(console=Console(stderr=True), show_path=False)
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        handlers=[handler],
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        lab = load_config(args.lab)
    except (ValueError, OSError) as exc:
        _setup_logging(args.verbose)
        logger.error("Invalid lab config: %s", exc)
        return EXIT_CONFIG
    verbose = args.verbose or lab.verbose
    _setup_logging(verbose)

    if args.command == "list":
        print(json.dumps(kind_schemas(), indent=2))
        return EXIT_PASS

    try:
        cfg = build_config(args.kind, args.config, args.override, args.seed, args.out)
        reporter = ConsoleReporter(verbose=verbose)
        record = run_experiment(
            cfg,
            lab,
            event_callback=reporter.on_event,
            dump_traces=args.dump_traces,
            workers=args.workers,
        )
    except BlowUpError as exc:
        logger.error("Solver blew up at step %d (t=%g): %s", exc.step, exc.time, exc)
        return EXIT_FAIL
    except (ValueError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_CONFIG

    reporter.report(record)
    print(json.dumps(record.summary(), indent=2, sort_keys=True, default=str))
    return EXIT_PASS if record.succeeded else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
