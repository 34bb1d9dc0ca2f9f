"""
The second-generation operator and its fixed-point iteration.

For an interval ``I = [A, B]`` the operator returns the union of
``delta * I + (1 - delta) * beta`` over all fixed points ``beta`` of the
first-generation attractor. Refining the first-generation bands until their
width is at most ``len(I) * delta / (1 - delta)`` makes the images of all
fixed points inside one band overlap, so each band contributes exactly the
interval spanned by the images of its two edges.
"""
from __future__ import annotations

import logging
import sys
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import numpy as np

from .errors import PrecisionError, ValidationError
from .intervals import UNIT, Interval, IntervalLike, IntervalSet, Number, as_interval, normalize
from .model import SecondGenIFS, refine_bands

logger = logging.getLogger(__name__)

# band widths below this are not resolvable with endpoints carried in doubles
FLOAT_RESOLUTION = 256 * sys.float_info.epsilon
POINT_COVER_WIDTH = 1e-9


class ApproximationWarning(UserWarning):
    pass


def min_chain_delta(gap_ratio: Number) -> Number:
    """
    Smallest contraction ratio for which consecutive images of an interval
    overlap when the fixed-point spacing is ``gap_ratio`` times its length.
    """
    if gap_ratio < 0:
        raise ValidationError("gap ratio must be non-negative")
    return gap_ratio / (1 + gap_ratio)


def chain_width(sys_: SecondGenIFS, length: Number) -> Number:
    """Largest band width whose edge images chain for an interval of ``length``."""
    return length * sys_.delta / sys_.delta_bar


def _check_delta(sys_: SecondGenIFS):
    if not sys_.delta > 0:
        raise ValidationError("the attractor routines need delta > 0")


def phi2_image(sys_: SecondGenIFS, interval: IntervalLike) -> IntervalSet:
    """Exact image of one interval under the second-generation operator."""
    _check_delta(sys_)
    iv = as_interval(interval)
    if iv.lo < 0 or iv.hi > 1:
        raise ValidationError(f"interval {iv!r} is not inside [0, 1]")
    d, db = sys_.delta, sys_.delta_bar
    if iv.length == 0:
        # a point has a Cantor-set image; only a cover can be returned
        warnings.warn("degenerate interval: returning a band cover of the point orbit",
                      ApproximationWarning, stacklevel=2)
        bands = refine_bands(sys_.first_gen, POINT_COVER_WIDTH)
        return normalize(Interval(d * iv.lo + db * b.lo, d * iv.lo + db * b.hi) for b in bands)

    eps = chain_width(sys_, iv.length)
    _check_resolution(eps)
    pieces = []
    for band in refine_bands(sys_.first_gen, eps):
        left = (d * iv.lo + db * band.lo, d * iv.hi + db * band.lo)
        right = (d * iv.lo + db * band.hi, d * iv.hi + db * band.hi)
        # the two edge images chain, so their union is the hull of the pair
        pieces.append(Interval(left[0], max(left[1], right[1])))
    return normalize(pieces)


def _check_resolution(eps):
    if not isinstance(eps, Fraction) and eps < FLOAT_RESOLUTION:
        raise PrecisionError(f"band width {eps!r} is below float resolution; use rational mode")


def _phi2_set_vectorized(sys_: SecondGenIFS, x: IntervalSet) -> IntervalSet:
    """
    Float-mode image of a union, refining the bands of every component at
    once. Uses the same arithmetic as :func:`phi2_image`, so results are
    bit-identical to the per-component path.
    """
    d, db = float(sys_.delta), float(sys_.delta_bar)
    comp_lo = np.array([float(iv.lo) for iv in x])
    comp_hi = np.array([float(iv.hi) for iv in x])
    eps = (comp_hi - comp_lo) * d / db
    if eps.size and eps.min() < FLOAT_RESOLUTION:
        _check_resolution(float(eps.min()))
    images = sys_.first_gen.level1()
    im_lo = np.array([float(im.lo) for im in images])
    im_hi = np.array([float(im.hi) for im in images])

    comp = np.arange(len(comp_lo))
    blo = np.zeros(len(comp))
    bhi = np.ones(len(comp))
    out_lo, out_hi = [], []
    while comp.size:
        width = bhi - blo
        done = width <= eps[comp]
        c, a, b = comp[done], blo[done], bhi[done]
        out_lo.append(d * comp_lo[c] + db * a)
        out_hi.append(np.maximum(d * comp_hi[c] + db * a, d * comp_hi[c] + db * b))
        keep = ~done
        comp, blo, width = comp[keep], blo[keep], width[keep]
        new_lo = blo[:, None] + width[:, None] * im_lo[None, :]
        new_hi = blo[:, None] + width[:, None] * im_hi[None, :]
        comp = np.repeat(comp, len(im_lo))
        blo, bhi = new_lo.ravel(), new_hi.ravel()
    if not out_lo:
        return IntervalSet.empty()
    return _union_arrays(np.concatenate(out_lo), np.concatenate(out_hi))


def _union_arrays(lo: np.ndarray, hi: np.ndarray) -> IntervalSet:
    order = np.lexsort((hi, lo))
    lo, hi = lo[order], hi[order]
    reach = np.maximum.accumulate(hi)
    starts = np.flatnonzero(np.r_[True, lo[1:] > reach[:-1]])
    ends = np.r_[starts[1:] - 1, len(lo) - 1]
    return IntervalSet._from_canonical(
        [Interval(a, b) for a, b in zip(lo[starts].tolist(), reach[ends].tolist())]
    )


def phi2_set(sys_: SecondGenIFS, x: IntervalSet, vectorized: Optional[bool] = None) -> IntervalSet:
    """
    Image of a finite union: the union of the component images.

    Float systems use the vectorized path unless ``vectorized=False``;
    rational systems always go component by component.
    """
    _check_delta(sys_)
    if vectorized is None:
        vectorized = not sys_.is_exact
    if vectorized and all(iv.length > 0 for iv in x):
        for iv in x:
            if iv.lo < 0 or iv.hi > 1:
                raise ValidationError(f"interval {iv!r} is not inside [0, 1]")
        return _phi2_set_vectorized(sys_.to_float(), x)
    out = []
    for iv in x:
        out.extend(phi2_image(sys_, iv))
    return normalize(out)


def phi2_power(sys_: SecondGenIFS, x: IntervalSet, power: int) -> IntervalSet:
    for _ in range(power):
        x = phi2_set(sys_, x)
    return x


@dataclass(eq=True)
class AttractorResult:
    """
    Outcome of iterating the operator from ``[0, 1]``.

    ``iterations`` is the index of the first iterate that equals its own
    image, i.e. the number of applications after which the attractor was
    reached. ``trace`` holds every iterate when requested, otherwise the
    last two.
    """

    attractor: IntervalSet
    iterations: int
    converged: bool
    per_iteration_counts: List[int]
    step_distances: List[Number] = field(default_factory=list, compare=False)
    trace: List[IntervalSet] = field(default_factory=list, compare=False, repr=False)

    @property
    def interval_count(self) -> int:
        return len(self.attractor)

    def to_json(self) -> dict:
        from .serialize import encode_number

        return {
            "converged": self.converged,
            "iterations": self.iterations,
            "intervals": [[encode_number(a), encode_number(b)] for a, b in self.attractor],
            "per_iteration_counts": list(self.per_iteration_counts),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AttractorResult":
        from .serialize import decode_intervals

        return cls(
            attractor=decode_intervals(obj["intervals"]),
            iterations=int(obj["iterations"]),
            converged=bool(obj["converged"]),
            per_iteration_counts=[int(c) for c in obj["per_iteration_counts"]],
        )


def _same(a: IntervalSet, b: IntervalSet, dist: Number, exact: bool, fp_tol: Number) -> bool:
    if exact:
        return a == b
    return len(a) == len(b) and dist <= fp_tol


def iterate_attractor(
    sys_: SecondGenIFS,
    max_iter: int = 200,
    fp_tol: float = 1e-12,
    keep_trace: bool = False,
) -> AttractorResult:
    """
    Iterate the operator on ``[0, 1]`` until two successive iterates agree.

    Agreement is exact equality when the system is rational; in float mode
    it needs equal component counts and Hausdorff distance at most
    ``fp_tol``. Without agreement after ``max_iter`` applications the last
    iterate is returned with ``converged=False``.
    """
    _check_delta(sys_)
    if max_iter < 1:
        raise ValidationError("max_iter must be at least 1")
    exact = sys_.is_exact
    current = UNIT.map_endpoints(Fraction) if exact else UNIT.map_endpoints(float)
    trace = [current]
    counts = [len(current)]
    distances = []
    for m in range(max_iter):
        nxt = phi2_set(sys_, current)
        dist = nxt.hausdorff_distance(current)
        counts.append(len(nxt))
        distances.append(dist)
        if keep_trace:
            trace.append(nxt)
        else:
            trace = [current, nxt]
        if _same(nxt, current, dist, exact, fp_tol):
            logger.debug("converged: K_%d == K_%d (%d intervals)", m, m + 1, len(current))
            return AttractorResult(current, m, True, counts, distances, trace)
        current = nxt
    logger.warning("no convergence after %d iterations (delta=%r)", max_iter, sys_.delta)
    return AttractorResult(current, max_iter, False, counts, distances, trace)
