"""Attractor and gap data over a grid of contraction ratios."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Sequence

import numpy as np

from .attractor import AttractorResult, iterate_attractor
from .errors import ValidationError
from .gaps import GapReport, gap_report
from .intervals import IntervalSet
from .model import SecondGenIFS, to_fraction

KINDS = ("interval", "gap", "n0", "residual")


def delta_grid(delta_min: float, delta_max: float, steps: int = 64, spacing: str = "log") -> List[float]:
    if not (0 < delta_min < delta_max < 1):
        raise ValidationError("sweep needs 0 < delta_min < delta_max < 1")
    if steps < 2:
        raise ValidationError("sweep needs at least 2 steps")
    if spacing == "log":
        grid = np.geomspace(delta_min, delta_max, steps)
    elif spacing == "linear":
        grid = np.linspace(delta_min, delta_max, steps)
    else:
        raise ValidationError(f"unknown spacing {spacing!r}")
    grid[0], grid[-1] = delta_min, delta_max
    return [float(x) for x in grid]


@dataclass
class SweepRow:
    delta: float
    converged: bool
    iterations: int
    attractor: IntervalSet
    gaps: IntervalSet
    n0: IntervalSet
    residual: IntervalSet

    def interval_kinds(self):
        return list(zip(KINDS, (self.attractor, self.gaps, self.n0, self.residual)))

    def to_json(self) -> dict:
        from .serialize import encode_intervals, encode_number

        return {
            "delta": encode_number(self.delta),
            "converged": self.converged,
            "iterations": self.iterations,
            "intervals": encode_intervals(self.attractor),
            "G": encode_intervals(self.gaps),
            "N0": encode_intervals(self.n0),
            "residual": encode_intervals(self.residual),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SweepRow":
        from .serialize import decode_intervals, decode_number

        return cls(decode_number(obj["delta"]), bool(obj["converged"]), int(obj["iterations"]),
                   decode_intervals(obj["intervals"]), decode_intervals(obj["G"]),
                   decode_intervals(obj["N0"]), decode_intervals(obj["residual"]))

    @classmethod
    def from_csv_records(cls, records: Sequence[Sequence[str]]) -> List["SweepRow"]:
        """Rebuild rows from ``delta,kind,lo,hi`` records (convergence info is not in CSV)."""
        from .serialize import decode_csv

        by_delta = {}
        for delta, kind, lo, hi in records:
            d = decode_csv(delta)
            by_delta.setdefault(d, {k: [] for k in KINDS})[kind].append((decode_csv(lo), decode_csv(hi)))
        out = []
        for d in sorted(by_delta):
            parts = by_delta[d]
            out.append(cls(d, True, -1, *(IntervalSet(parts[k]) for k in KINDS)))
        return out


def sweep_point(sys_: SecondGenIFS, max_iter: int = 200, fp_tol: float = 1e-12) -> SweepRow:
    result: AttractorResult = iterate_attractor(sys_, max_iter=max_iter, fp_tol=fp_tol)
    report: GapReport = gap_report(sys_, result.attractor, 0)
    return SweepRow(sys_.delta, result.converged, result.iterations, result.attractor,
                    report.gaps_G, report.n_epsilon, report.residual)


def _point(args):
    return sweep_point(*args)


def run_sweep(sys_: SecondGenIFS, deltas: Iterable[float], max_iter: int = 200,
              fp_tol: float = 1e-12, jobs: int = 1) -> List[SweepRow]:
    """One row per delta, in ascending delta order. ``jobs > 1`` uses worker processes."""
    deltas = sorted(deltas)
    systems = [sys_.with_delta(d) for d in deltas]
    tasks = [(s, max_iter, fp_tol) for s in systems]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_point, tasks))
    return [_point(t) for t in tasks]
