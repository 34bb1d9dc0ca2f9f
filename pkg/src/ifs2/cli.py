"""
Command-line front end.

    ifs2 attractor --ifs maps.json --delta 0.085
    ifs2 sweep --ifs maps.json --delta-min 0.006 --delta-max 0.1 --steps 64 --format csv

Exit codes: 0 ok, 2 validation, 3 non-convergence, 4 precision abort,
5 certificate precondition, 6 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .attractor import iterate_attractor
from .certificate import certify
from .errors import (CertificatePreconditionError, InconsistencyError, PrecisionError,
                     ValidationError)
from .gaps import gap_report
from .model import FirstGenIFS, SecondGenIFS
from .sampler import chaos_game_samples, empirical_support_check
from .serialize import serialize_result
from .sweep import delta_grid, run_sweep

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NO_CONVERGENCE = 3
EXIT_PRECISION = 4
EXIT_PRECONDITION = 5
EXIT_INCONSISTENT = 6


def _common(p: argparse.ArgumentParser, single_delta: bool = True):
    p.add_argument("--ifs", required=True, type=Path, help="first-generation IFS config (JSON)")
    if single_delta:
        p.add_argument("--delta", required=True, type=float)
    p.add_argument("--max-iter", type=int, default=200)
    p.add_argument("--fp-tol", type=float, default=1e-12)
    p.add_argument("--mode", choices=("float", "rational"), default="float")
    p.add_argument("--out", type=Path, help="output file (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ifs2", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("attractor", help="iterate the operator to its fixed point")
    _common(p)

    p = sub.add_parser("gaps", help="gap set, outer estimate N_eps and residual")
    _common(p)
    p.add_argument("--epsilon", type=float, default=0.0)

    p = sub.add_parser("certify", help="interval-existence certificate")
    _common(p)

    p = sub.add_parser("sample", help="chaos-game samples checked against the attractor")
    _common(p)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--burn-in", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("sweep", help="attractor and gaps over a grid of deltas")
    _common(p, single_delta=False)
    p.add_argument("--delta-min", type=float, required=True)
    p.add_argument("--delta-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=64)
    spacing = p.add_mutually_exclusive_group()
    spacing.add_argument("--log", dest="spacing", action="store_const", const="log")
    spacing.add_argument("--linear", dest="spacing", action="store_const", const="linear")
    p.set_defaults(spacing="log")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _system(args) -> SecondGenIFS:
    ifs = FirstGenIFS.load(args.ifs)
    delta = getattr(args, "delta", None)
    sys_ = SecondGenIFS(delta if delta is not None else args.delta_min, ifs)
    return sys_.to_rational() if args.mode == "rational" else sys_


def _write(args, payload: bytes):
    if args.out:
        args.out.write_bytes(payload)
    else:
        sys.stdout.write(payload.decode())


def _error(kind: str, exc: Exception, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc), "exit_code": code}) + "\n")
    return code


def run_command(args) -> int:
    if args.fp_tol <= 0 or args.max_iter < 1:
        raise ValidationError("tolerances must be positive and --max-iter at least 1")
    sys_ = _system(args)
    cmd = args.command

    if cmd == "sweep":
        deltas = delta_grid(args.delta_min, args.delta_max, args.steps, args.spacing)
        rows = run_sweep(sys_, deltas, args.max_iter, args.fp_tol, args.jobs)
        _write(args, serialize_result(rows, args.format))
        return EXIT_OK if all(r.converged for r in rows) else EXIT_NO_CONVERGENCE

    result = iterate_attractor(sys_, args.max_iter, args.fp_tol)
    status = EXIT_OK if result.converged else EXIT_NO_CONVERGENCE
    if cmd == "attractor":
        out = result.attractor if args.format == "csv" else result
    elif cmd == "gaps":
        out = gap_report(sys_, result.attractor, args.epsilon)
        if args.format == "csv":
            raise ValidationError("gaps output is JSON only")
    elif cmd == "certify":
        out = certify(sys_, result.attractor)
        if result.converged and not out.contained:
            status = EXIT_INCONSISTENT
    elif cmd == "sample":
        run = chaos_game_samples(sys_, args.samples, args.burn_in, args.seed)
        if args.format == "csv":
            out = run
        else:
            report = empirical_support_check(run, result.attractor, args.tol)
            out = _SampleSummary(run, report)
    else:  # argparse restricts the choices
        raise ValidationError(f"unknown command {cmd!r}")
    _write(args, serialize_result(out, args.format))
    return status


class _SampleSummary:
    def __init__(self, run, report):
        self.run, self.report = run, report

    def to_json(self):
        obj = {"seed": self.run.seed, "burn_in": self.run.burn_in, "count": self.run.count}
        obj.update(self.report.to_json())
        return obj


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return run_command(args)
    except CertificatePreconditionError as exc:
        return _error("certificate-precondition", exc, EXIT_PRECONDITION)
    except PrecisionError as exc:
        return _error("precision", exc, EXIT_PRECISION)
    except InconsistencyError as exc:
        return _error("inconsistency", exc, EXIT_INCONSISTENT)
    except (ValidationError, OSError) as exc:
        return _error("validation", exc, EXIT_VALIDATION)


if __name__ == "__main__":
    sys.exit(main())
