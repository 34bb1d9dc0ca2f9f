"""
Outer estimates of the attractor's gaps.

A point ``x`` whose window ``[x - delta - eps, x + eps]`` misses the rescaled
first-generation attractor ``(1 - delta) * S`` carries no mass in its
``eps``-ball. The set of such points, ``N_eps``, is a finite union of open
intervals contained in the true gap set ``G``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

from .errors import InconsistencyError, ValidationError
from .intervals import Interval, IntervalSet, Number
from .model import SecondGenIFS, band_cover, band_edges, exact_gaps, uniform_bands

HULL = (0, 1)


def compute_n_epsilon(sys_: SecondGenIFS, epsilon: Number = 0) -> IntervalSet:
    """
    Components of ``N_eps`` as closed intervals; each is really the open
    interval ``(g_lo + delta + eps, g_hi - eps)`` for a gap ``(g_lo, g_hi)``
    of ``(1 - delta) * S`` longer than ``delta + 2 * eps``.
    """
    if epsilon < 0:
        raise ValidationError("epsilon must be non-negative")
    if not sys_.delta > 0:
        raise ValidationError("delta must be positive")
    d, db = sys_.delta, sys_.delta_bar
    window = d + 2 * epsilon
    min_length = window / db
    if min_length >= 1:
        return IntervalSet.empty()
    out = []
    for g in exact_gaps(sys_.first_gen, min_length):
        lo, hi = db * g.lo, db * g.hi
        if hi - lo > window:
            out.append(Interval(lo + d + epsilon, hi - epsilon))
    return IntervalSet._from_canonical(out)


compute_N_epsilon = compute_n_epsilon


def open_disjoint(open_parts: IntervalSet, closed: IntervalSet) -> bool:
    """True if the interiors of ``open_parts`` miss the closed set."""
    for iv in open_parts:
        for c in closed:
            if c.lo < iv.hi and c.hi > iv.lo:
                return False
    return True


@dataclass
class GapReport:
    """
    ``n_epsilon`` components are open (``n_epsilon_open``); ``gaps_G`` holds
    the closures of the attractor's gaps, so shared endpoints stay in the
    attractor.
    """

    epsilon: Number
    n_epsilon: IntervalSet
    gaps_G: IntervalSet
    residual: IntervalSet
    n_epsilon_open: bool = field(default=True, compare=False)

    def to_json(self) -> dict:
        from .serialize import encode_intervals, encode_number

        return {
            "epsilon": encode_number(self.epsilon),
            "N_epsilon": encode_intervals(self.n_epsilon),
            "G": encode_intervals(self.gaps_G),
            "residual": encode_intervals(self.residual),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GapReport":
        from .serialize import decode_intervals, decode_number

        return cls(
            epsilon=decode_number(obj["epsilon"]),
            n_epsilon=decode_intervals(obj["N_epsilon"]),
            gaps_G=decode_intervals(obj["G"]),
            residual=decode_intervals(obj["residual"]),
        )


def residual_gaps(attractor: IntervalSet, n_eps: IntervalSet, epsilon: Number = 0,
                  tol: Number = 1e-12) -> GapReport:
    """
    Split the attractor's gaps into the part explained by ``n_eps`` and the
    residual. Raises :class:`InconsistencyError` if ``n_eps`` is not inside
    the gaps, which would mean one of the two computations is wrong.
    """
    if attractor and not (attractor[0].lo >= HULL[0] and attractor[-1].hi <= HULL[1]):
        raise ValidationError("attractor must lie in [0, 1]")
    kind = type(attractor[0].lo) if attractor else float
    gaps = attractor.complement_within(Interval(kind(HULL[0]), kind(HULL[1])))
    if not n_eps.issubset(gaps, tol):
        raise InconsistencyError(f"N_eps {n_eps!r} is not contained in the gap set {gaps!r}")
    return GapReport(epsilon, n_eps, gaps, gaps.difference(n_eps))


def gap_report(sys_: SecondGenIFS, attractor: IntervalSet, epsilon: Number = 0) -> GapReport:
    return residual_gaps(attractor, compute_n_epsilon(sys_, epsilon), epsilon)


@dataclass
class SandwichReport:
    """Result of checking ``S <= attractor <= B_r(cover)``."""

    depth: int
    radius: Number
    missing_edges: List[Number]
    outside: IntervalSet

    @property
    def lower_ok(self) -> bool:
        return not self.missing_edges

    @property
    def upper_ok(self) -> bool:
        return self.outside.is_empty

    @property
    def passed(self) -> bool:
        return self.lower_ok and self.upper_ok


def sandwich_check(sys_: SecondGenIFS, attractor: IntervalSet, cover_depth: int = 8,
                   tol: Number = 1e-12) -> SandwichReport:
    """
    Check that every band edge at ``cover_depth`` lies in the attractor and
    that the attractor lies within distance ``delta`` of the band cover.

    On the hull [0, 1] the neighbourhood radius is ``delta`` (twice that on
    a hull of length 2).
    """
    bands = uniform_bands(sys_.first_gen, cover_depth)
    missing = [e for e in band_edges(bands) if not attractor.contains(e, tol)]
    radius = sys_.delta
    nbhd = band_cover(bands).dilate(radius + tol)
    outside = attractor.difference(nbhd)
    return SandwichReport(cover_depth, radius, missing, outside)


lemma1_sandwich_check = sandwich_check  # interface name
