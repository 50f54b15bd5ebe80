#!/usr/bin/env python3
"""PFSS Analyzer - Command-line entry point."""

import argparse
import sys
from typing import Any, Callable, Dict, List, Optional

from ..core.config import Config, RunConfig, get_config, reload_config
from ..core.constants import FORMAT_JSON, FORMAT_TEXT
from ..core.exceptions import ParseError, PfssError
from ..core.logging_config import get_logger, setup_logging
from ..formats import codec
from ..formats.report import (
    render_initial_condition, render_matrix, render_orbit_length, render_orbits, render_report,
    render_root, render_vector,
)
from ..linalg.matrix import Vector
from ..systems.analysis import all_orbits, analyze, find_initial_condition, orbit_length
from ..systems.floquet import FloquetData, floquet_from_root, matrix_nth_root
from ..systems.fsr import build_pfss, keystream
from ..systems.pfss import Pfss, is_nonsingular, monodromy, simulate_orbit
from ..systems.root_strategies import Root, RootSettings

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2


def parse_vector(ctx, text: str) -> Vector:
    """
    Comma-separated canonical element codes, e.g. '0,1,1'.

    Raises:
        ParseError: On non-integer entries or codes outside the field
    """
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise ParseError(f"Vector must be comma-separated integers: {text!r}") from e
    return tuple(codec.element_from_json(ctx, v) for v in values)


def _check_length(x0: Vector, n: int):
    if len(x0) != n:
        raise ParseError(f"Vector {list(x0)} has {len(x0)} entries, expected {n}")


def _floquet(system: Pfss, run: RunConfig) -> Optional[FloquetData]:
    """Floquet data of a non-singular system with a root; None otherwise."""
    if not is_nonsingular(system):
        return None
    root = matrix_nth_root(monodromy(system), system.period, RootSettings.from_run_config(run))
    return floquet_from_root(system, root)


# -- Commands ----------------------------------------------------------------
# Each returns (json payload, text rendering).

def cmd_analyze(args, run: RunConfig):
    report = analyze(codec.load_system(args.file), run)
    return codec.report_to_json(report), render_report(report)


def cmd_orbit(args, run: RunConfig):
    system = codec.load_system(args.file)
    x0 = parse_vector(system.ctx, args.x0)
    _check_length(x0, system.n)
    fd = _floquet(system, run)
    result = orbit_length(system, x0, fd, run.seed, run.cross_check)
    payload = {"x0": codec.vector_to_json(system.ctx, x0), **result.to_dict()}
    return payload, render_orbit_length(system.ctx, x0, result)


def cmd_orbits(args, run: RunConfig):
    system = codec.load_system(args.file)
    orbits = all_orbits(system, _floquet(system, run), run)
    return codec.orbits_to_json(orbits), "\n".join(render_orbits(orbits))


def cmd_find_init(args, run: RunConfig):
    system = codec.load_system(args.file)
    fd = _floquet(system, run)
    x0 = find_initial_condition(system, fd, args.L, run)
    ctx = fd.ctx if fd is not None else system.ctx
    payload = {"L": args.L, "x0": codec.initial_condition_to_json(ctx, x0)}
    return payload, render_initial_condition(ctx, args.L, x0)


def cmd_root(args, run: RunConfig):
    obj = codec.load_json(args.file)
    if isinstance(obj, dict) and "matrices" in obj:
        system = codec.system_from_json(obj)
        phi, default_n = monodromy(system), system.period
    else:
        phi, default_n = codec.load_matrix(args.file), None
    N = args.N if args.N is not None else default_n
    if N is None:
        raise ParseError("A matrix file needs --N")
    result = matrix_nth_root(phi, N, RootSettings.from_run_config(run))
    lines = render_root(result)
    if isinstance(result, Root):
        lines.append(render_matrix("root", result.matrix))
    return codec.root_result_to_json(result), "\n".join(lines)


def cmd_simulate(args, run: RunConfig):
    system = codec.load_system(args.file)
    x0 = parse_vector(system.ctx, args.x0)
    _check_length(x0, system.n)
    trajectory = simulate_orbit(system, x0, run.cap_states)
    text = [f"Period {trajectory.period}"]
    text.extend(f"  x({k}) = {render_vector(system.ctx, x)}" for k, x in enumerate(trajectory.states))
    return codec.trajectory_to_json(system.ctx, trajectory), "\n".join(text)


def cmd_fsr_emit(args, run: RunConfig):
    system = build_pfss(codec.load_pfsr(args.file))
    payload = codec.system_to_json(system)
    return payload, codec.dumps(payload)


def cmd_fsr_keystream(args, run: RunConfig):
    spec = codec.load_pfsr(args.file)
    x0 = parse_vector(spec.ctx, args.x0)
    _check_length(x0, spec.slave_dim)
    stream = keystream(spec, x0, args.steps, args.tap)
    encoded = [codec.element_to_json(spec.ctx, c) for c in stream]
    return encoded, "\n".join(str(v) for v in encoded)


# -- Parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfss-analyzer",
        description="Exact analysis of periodic finite state systems over finite fields.",
    )
    parser.add_argument("--config", default="config.yaml", help="YAML configuration file")
    parser.add_argument("--format", choices=[FORMAT_TEXT, FORMAT_JSON], default=None,
                        help="Output format (default from config)")
    parser.add_argument("--seed", type=int, default=None, help="Seed for randomized subroutines")
    parser.add_argument("--cap-states", type=int, default=None,
                        help="Largest state space enumerated exhaustively")
    parser.add_argument("--cap-extension", type=int, default=None,
                        help="Largest extension degree factor for element roots")
    parser.add_argument("--log-level", default=None, help="Logging level (default from config)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Full report for a system file")
    p.add_argument("file")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("orbit", help="Orbit length of one initial condition")
    p.add_argument("file")
    p.add_argument("--x0", required=True, help="Initial state, e.g. 0,1,1")
    p.set_defaults(handler=cmd_orbit)

    p = sub.add_parser("orbits", help="Closed orbits and period histogram")
    p.add_argument("file")
    p.set_defaults(handler=cmd_orbits)

    p = sub.add_parser("find-init", help="Initial condition for a prescribed period")
    p.add_argument("file")
    p.add_argument("--L", type=int, required=True, help="Requested period")
    p.set_defaults(handler=cmd_find_init)

    p = sub.add_parser("root", help="N-th root of a matrix or of a system's monodromy")
    p.add_argument("file")
    p.add_argument("--N", type=int, default=None, help="Root index (default: system period)")
    p.set_defaults(handler=cmd_root)

    p = sub.add_parser("simulate", help="Trajectory of one initial condition")
    p.add_argument("file")
    p.add_argument("--x0", required=True, help="Initial state, e.g. 0,1,1")
    p.set_defaults(handler=cmd_simulate)

    fsr = sub.add_parser("fsr", help="Periodic shift registers")
    fsr_sub = fsr.add_subparsers(dest="fsr_command", required=True)
    p = fsr_sub.add_parser("emit-pfss", help="System file of a register's slave")
    p.add_argument("file")
    p.set_defaults(handler=cmd_fsr_emit)
    p = fsr_sub.add_parser("keystream", help="Tapped output sequence")
    p.add_argument("file")
    p.add_argument("--x0", required=True, help="Slave initial state")
    p.add_argument("--steps", type=int, default=32, help="Number of outputs")
    p.add_argument("--tap", type=int, default=0, help="Slave stage to emit")
    p.set_defaults(handler=cmd_fsr_keystream)
    return parser


def _load_config(path: str) -> Config:
    config = reload_config(path) if path else get_config()
    setup_logging(
        log_level=config.logging.level,
        log_file=config.logging.file,
        log_to_console=config.logging.console,
        fmt=config.logging.format,
        date_format=config.logging.date_format,
    )
    return config


def _error_payload(error: PfssError) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"error": type(error).__name__, "message": str(error)}
    if isinstance(error, ParseError):
        payload["line"] = error.line
        payload["column"] = error.column
    return payload


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    config = _load_config(args.config)
    if args.log_level:
        setup_logging(log_level=args.log_level.upper(), log_file=config.logging.file)

    run = RunConfig.from_config(
        config,
        command=args.command,
        input_path=args.file,
        output_format=args.format,
        seed=args.seed,
        cap_states=args.cap_states,
        cap_extension=args.cap_extension,
    )
    handler: Callable = args.handler
    try:
        payload, text = handler(args, run)
    except PfssError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(codec.dumps(_error_payload(e), config.output.indent))
        return EXIT_USAGE if isinstance(e, ParseError) else EXIT_ERROR

    if run.output_format == FORMAT_JSON:
        print(codec.dumps(payload, config.output.indent))
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
