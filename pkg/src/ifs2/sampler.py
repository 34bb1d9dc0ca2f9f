"""
Chaos-game sampling of the second-generation invariant measure.

Each step draws a fixed point ``beta`` from the first-generation measure and
moves ``x -> delta * x + (1 - delta) * beta``. ``beta`` is the image of the
fixed point 0 under a random word of first-generation maps long enough that
``max_ratio ** depth < sampler_tol``, so every ``beta`` is an exact attractor
point and its law is within ``sampler_tol`` of the first-generation measure.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import List

import numpy as np

from .intervals import IntervalSet
from .model import FirstGenIFS, SecondGenIFS

SAMPLER_TOL = 1e-14
DEFAULT_BURN_IN = 100


def beta_depth(ifs: FirstGenIFS, tol: float = SAMPLER_TOL) -> int:
    return max(1, math.ceil(math.log(tol) / math.log(float(ifs.max_ratio))))


def first_gen_samples(ifs: FirstGenIFS, n: int, rng: np.random.Generator,
                      tol: float = SAMPLER_TOL) -> np.ndarray:
    """``n`` draws from the first-generation measure."""
    ratios = np.array([float(r) for r in ifs.ratios])
    offsets = np.array([float((1 - m.ratio) * m.beta) for m in ifs.maps])
    weights = np.array([float(w) for w in ifs.weights])
    depth = beta_depth(ifs, tol)
    words = rng.choice(ifs.size, size=(depth, n), p=weights / weights.sum())
    x = np.zeros(n)
    for row in words:
        x = ratios[row] * x + offsets[row]
    return x


@dataclass
class ChaosRun:
    points: np.ndarray
    seed: int
    burn_in: int
    count: int

    def to_csv(self) -> str:
        return "".join(f"{p!r}\n" for p in self.points.tolist())

    @classmethod
    def from_csv(cls, text: str, seed: int = -1, burn_in: int = -1) -> "ChaosRun":
        pts = np.array([float(line) for line in text.splitlines() if line.strip()])
        return cls(pts, seed, burn_in, len(pts))

    def __eq__(self, other):
        if not isinstance(other, ChaosRun):
            return NotImplemented
        return np.array_equal(self.points, other.points)


def chaos_game_samples(sys_: SecondGenIFS, count: int, burn_in: int = DEFAULT_BURN_IN,
                       seed: int = 0, sampler_tol: float = SAMPLER_TOL) -> ChaosRun:
    """
    Run the chaos game from ``x = 0`` and keep the ``count`` points after
    the first ``burn_in``. Deterministic for a given seed.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = np.random.default_rng(seed)
    total = burn_in + count
    betas = first_gen_samples(sys_.first_gen, total, rng, sampler_tol)
    d, db = float(sys_.delta), float(sys_.delta_bar)
    xs = np.empty(total)
    x = 0.0
    for k, b in enumerate(betas.tolist()):
        x = d * x + db * b
        xs[k] = x
    return ChaosRun(xs[burn_in:], seed, burn_in, count)


def sigma_samples(ifs: FirstGenIFS, count: int, burn_in: int = DEFAULT_BURN_IN, seed: int = 0,
                  sampler_tol: float = SAMPLER_TOL) -> np.ndarray:
    """First-generation draws using the same random stream as :func:`chaos_game_samples`."""
    rng = np.random.default_rng(seed)
    return first_gen_samples(ifs, burn_in + count, rng, sampler_tol)[burn_in:]


@dataclass
class SupportReport:
    tol: float
    violations: List[float]
    hit_counts: List[int]

    @property
    def all_inside(self) -> bool:
        return not self.violations

    @property
    def all_hit(self) -> bool:
        return all(c > 0 for c in self.hit_counts)

    @property
    def passed(self) -> bool:
        return self.all_inside and self.all_hit

    def to_json(self) -> dict:
        return {"tol": self.tol, "violations": list(self.violations), "hit_counts": list(self.hit_counts)}

    @classmethod
    def from_json(cls, obj: dict) -> "SupportReport":
        return cls(float(obj["tol"]), [float(v) for v in obj["violations"]],
                   [int(c) for c in obj["hit_counts"]])


def empirical_support_check(run: ChaosRun, attractor: IntervalSet, tol: float = 1e-9) -> SupportReport:
    """Samples farther than ``tol`` from the attractor, and hits per component."""
    pts = np.asarray(run.points, dtype=float)
    los = np.array([float(iv.lo) for iv in attractor])
    his = np.array([float(iv.hi) for iv in attractor])
    if len(los) == 0:
        return SupportReport(tol, pts.tolist(), [])
    k = np.searchsorted(los, pts + tol, side="right") - 1
    inside = (k >= 0) & (pts <= his[np.clip(k, 0, None)] + tol) & (pts >= los[np.clip(k, 0, None)] - tol)
    hits = np.bincount(k[inside], minlength=len(los)).tolist()
    return SupportReport(tol, pts[~inside].tolist(), hits)
