"""
Finite unions of disjoint closed intervals on the real line.

Every set handled by the package (bands, attractor iterates, gaps) is an
:class:`IntervalSet`. Endpoints may be ``float`` or ``fractions.Fraction``;
the algebra never rounds, so with Fraction endpoints all results are exact.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from .errors import EmptySetError, ValidationError

Number = Union[float, int, Fraction]


@dataclass(frozen=True, order=True)
class Interval:
    """Closed interval ``[lo, hi]``; ``lo == hi`` is a single point."""

    lo: Number
    hi: Number

    def __post_init__(self):
        if self.lo != self.lo or self.hi != self.hi:
            raise ValidationError("interval endpoints cannot be NaN")
        if self.lo > self.hi:
            raise ValidationError(f"malformed interval: lo={self.lo!r} > hi={self.hi!r}")

    @property
    def length(self) -> Number:
        return self.hi - self.lo

    def __contains__(self, x: Number) -> bool:
        return self.lo <= x <= self.hi

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __repr__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


IntervalLike = Union[Interval, Tuple[Number, Number], Sequence[Number]]


def as_interval(obj: IntervalLike) -> Interval:
    if isinstance(obj, Interval):
        return obj
    lo, hi = obj
    return Interval(lo, hi)


def normalize(raw: Iterable[IntervalLike], merge_tol: Number = 0) -> "IntervalSet":
    """
    Sort and fuse a list of closed intervals into canonical form.

    Intervals that overlap, touch, or are separated by a gap of at most
    ``merge_tol`` are merged.
    """
    if merge_tol < 0:
        raise ValidationError("merge_tol must be non-negative")
    items = sorted(as_interval(r) for r in raw)
    out: List[Interval] = []
    for iv in items:
        if out and iv.lo - out[-1].hi <= merge_tol:
            last = out[-1]
            if iv.hi > last.hi:
                out[-1] = Interval(last.lo, iv.hi)
        else:
            out.append(iv)
    return IntervalSet._from_canonical(out)


class IntervalSet:
    """
    Canonical, immutable union of closed intervals.

    Components are strictly increasing and pairwise disjoint
    (``items[k].hi < items[k+1].lo``). Construction from arbitrary input
    normalizes with zero merge tolerance.
    """

    __slots__ = ("_items", "_los")

    def __init__(self, intervals: Iterable[IntervalLike] = ()):
        canon = normalize(intervals)
        self._items = canon._items
        self._los = canon._los

    @classmethod
    def _from_canonical(cls, items: Sequence[Interval]) -> "IntervalSet":
        obj = cls.__new__(cls)
        obj._items = tuple(items)
        obj._los = [iv.lo for iv in obj._items]
        return obj

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls._from_canonical(())

    @property
    def items(self) -> Tuple[Interval, ...]:
        return self._items

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __getitem__(self, k):
        return self._items[k]

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return "IntervalSet(" + ", ".join(repr(iv) for iv in self._items) + ")"

    # -- queries ---------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self._items

    @property
    def hull(self) -> Interval:
        if not self._items:
            raise EmptySetError("empty set has no convex hull")
        return Interval(self._items[0].lo, self._items[-1].hi)

    @property
    def measure(self) -> Number:
        return sum((iv.length for iv in self._items), 0)

    def gaps(self) -> "IntervalSet":
        """Closed gaps between consecutive components (inside the hull)."""
        return IntervalSet._from_canonical(
            [Interval(a.hi, b.lo) for a, b in zip(self._items, self._items[1:])]
        )

    def _locate(self, x: Number) -> int:
        """Index of the last component with ``lo <= x``, or -1."""
        return bisect_right(self._los, x) - 1

    def distance_to(self, x: Number) -> Number:
        if not self._items:
            raise EmptySetError("distance to an empty set is undefined")
        k = self._locate(x)
        best = None
        if k >= 0:
            if x <= self._items[k].hi:
                return x - x  # zero of the right type
            best = x - self._items[k].hi
        if k + 1 < len(self._items):
            d = self._items[k + 1].lo - x
            best = d if best is None or d < best else best
        return best

    def contains(self, x: Number, tol: Number = 0) -> bool:
        if not self._items:
            return False
        return self.distance_to(x) <= tol

    def __contains__(self, x) -> bool:
        if isinstance(x, Interval):
            return self.issuperset(IntervalSet._from_canonical([x]))
        return self.contains(x)

    def issubset(self, other: "IntervalSet", tol: Number = 0) -> bool:
        """True when every component of ``self`` lies in one component of ``other`` widened by ``tol``."""
        for iv in self._items:
            k = other._locate(iv.lo + tol)
            if k < 0:
                return False
            host = other._items[k]
            if not (host.lo - tol <= iv.lo and iv.hi <= host.hi + tol):
                return False
        return True

    def issuperset(self, other: "IntervalSet", tol: Number = 0) -> bool:
        return other.issubset(self, tol)

    # -- algebra ---------------------------------------------------------

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return normalize(self._items + other._items)

    __or__ = union

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        a, b = self._items, other._items
        i = j = 0
        out = []
        while i < len(a) and j < len(b):
            lo = max(a[i].lo, b[j].lo)
            hi = min(a[i].hi, b[j].hi)
            if lo <= hi:
                out.append(Interval(lo, hi))
            if a[i].hi < b[j].hi:
                i += 1
            else:
                j += 1
        return IntervalSet._from_canonical(out)

    __and__ = intersect

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        """Closure of ``self \\ other``."""
        out = []
        b = other._items
        for iv in self._items:
            if iv.lo == iv.hi:
                if not other.contains(iv.lo):
                    out.append(iv)
                continue
            cur = iv.lo
            j = max(other._locate(iv.lo), 0)
            while j < len(b) and b[j].lo < iv.hi:
                if b[j].hi > cur:
                    if b[j].lo > cur:
                        out.append(Interval(cur, b[j].lo))
                    cur = b[j].hi
                j += 1
            if cur < iv.hi:
                out.append(Interval(cur, iv.hi))
        return normalize(out)

    __sub__ = difference

    def complement_within(self, hull: IntervalLike) -> "IntervalSet":
        """Closure of ``hull \\ self``; ``self`` must lie inside ``hull``."""
        hull = as_interval(hull)
        if self._items and not (hull.lo <= self._items[0].lo and self._items[-1].hi <= hull.hi):
            raise ValidationError(f"set {self!r} exceeds hull {hull!r}")
        return IntervalSet._from_canonical([hull]).difference(self)

    def affine_image(self, scale: Number, shift: Number = 0) -> "IntervalSet":
        """Image under ``x -> scale * x + shift``; only ``scale >= 0`` is supported."""
        if scale < 0:
            raise ValidationError("negative scale (orientation-reversing map) is not supported")
        # a zero scale collapses everything onto one point
        return normalize(Interval(scale * iv.lo + shift, scale * iv.hi + shift) for iv in self._items)

    def dilate(self, radius: Number) -> "IntervalSet":
        """Closed ``radius``-neighbourhood."""
        if radius < 0:
            raise ValidationError("radius must be non-negative")
        return normalize(Interval(iv.lo - radius, iv.hi + radius) for iv in self._items)

    def directed_distance(self, other: "IntervalSet") -> Number:
        """``sup_{x in self} dist(x, other)``."""
        if not self._items or not other._items:
            raise EmptySetError("Hausdorff distance is undefined for empty sets")
        ys = other._items
        his = [y.hi for y in ys]
        best = 0
        for iv in self._items:
            best = max(best, other.distance_to(iv.lo), other.distance_to(iv.hi))
            # dist(., other) peaks at the midpoints of other's gaps
            k = max(bisect_left(his, iv.lo) - 1, 0)
            while k + 1 < len(ys) and ys[k].hi < iv.hi:
                g_lo, g_hi = ys[k].hi, ys[k + 1].lo
                if g_hi > iv.lo:
                    mid = (g_lo + g_hi) / 2
                    mid = min(max(mid, iv.lo), iv.hi)
                    best = max(best, other.distance_to(mid))
                k += 1
        return best

    def hausdorff_distance(self, other: "IntervalSet") -> Number:
        return max(self.directed_distance(other), other.directed_distance(self))

    # -- conversion ------------------------------------------------------

    def to_list(self) -> List[List[Number]]:
        return [[iv.lo, iv.hi] for iv in self._items]

    @classmethod
    def from_list(cls, pairs: Iterable[Sequence[Number]]) -> "IntervalSet":
        return cls(tuple(p) for p in pairs)

    def map_endpoints(self, fn) -> "IntervalSet":
        """Apply ``fn`` to every endpoint (e.g. ``float``) and renormalize."""
        return normalize(Interval(fn(iv.lo), fn(iv.hi)) for iv in self._items)


UNIT = IntervalSet._from_canonical([Interval(0, 1)])


def union(x: IntervalSet, y: IntervalSet) -> IntervalSet:
    return x.union(y)


def intersect(x: IntervalSet, y: IntervalSet) -> IntervalSet:
    return x.intersect(y)


def difference(x: IntervalSet, y: IntervalSet) -> IntervalSet:
    return x.difference(y)


def complement_within(x: IntervalSet, hull: IntervalLike) -> IntervalSet:
    return x.complement_within(hull)


def affine_image(x: IntervalSet, scale: Number, shift: Number = 0) -> IntervalSet:
    return x.affine_image(scale, shift)


def hausdorff_distance(x: IntervalSet, y: IntervalSet) -> Number:
    return x.hausdorff_distance(y)
