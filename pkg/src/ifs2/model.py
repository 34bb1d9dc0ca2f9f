"""
First- and second-generation IFS definitions, validation, and band refinement.

A first-generation IFS is a finite family of increasing affine maps
``x -> r * (x - b) + b`` with ratio ``r`` in (0, 1) and fixed point ``b``.
Its attractor (the support of the measure it generates) is the Cantor-like
set whose points serve as the fixed points of the second-generation system.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import ValidationError
from .intervals import Interval, IntervalSet, Number, normalize

WEIGHT_TOL = 1e-12


def to_fraction(x) -> Fraction:
    """Exact rational for ``x``; floats go through their shortest decimal repr."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(repr(float(x)))


@dataclass(frozen=True)
class AffineMap:
    ratio: Number
    beta: Number

    def __call__(self, x: Number) -> Number:
        return self.ratio * x + (1 - self.ratio) * self.beta

    def image(self, iv: Interval) -> Interval:
        return Interval(self(iv.lo), self(iv.hi))


@dataclass(frozen=True)
class HullTransform:
    """Original coordinate = ``offset + scale * normalized coordinate``."""

    offset: Number = 0
    scale: Number = 1

    @property
    def is_identity(self) -> bool:
        return self.offset == 0 and self.scale == 1

    def to_original(self, x: Number) -> Number:
        return self.offset + self.scale * x

    def to_normalized(self, x: Number) -> Number:
        return (x - self.offset) / self.scale


@dataclass(frozen=True)
class FirstGenIFS:
    """
    Finite affine IFS on the hull [0, 1].

    The smallest fixed point must be 0 and the largest 1, so that every
    band edge is a point of the attractor. Use :meth:`from_pairs` with
    ``renormalize=True`` to map an arbitrary system onto this hull.
    """

    maps: Tuple[AffineMap, ...]
    weights: Tuple[Number, ...]
    transform: HullTransform = field(default_factory=HullTransform)

    def __post_init__(self):
        _check_structure([(m.ratio, m.beta) for m in self.maps], self.weights)
        betas = [m.beta for m in self.maps]
        if min(betas) != 0 or max(betas) != 1:
            raise ValidationError(
                f"hull-violation: fixed points must span [0, 1], got min={min(betas)!r}, max={max(betas)!r}"
            )

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[Sequence[Number]],
        weights: Optional[Sequence[Number]] = None,
        renormalize: bool = True,
    ) -> "FirstGenIFS":
        """Build from ``(ratio, beta)`` pairs; uniform weights by default."""
        pairs = [tuple(p) for p in pairs]
        if weights is None:
            m = len(pairs)
            exact = any(isinstance(v, Fraction) for p in pairs for v in p)
            weights = [Fraction(1, m) if exact else 1.0 / m] * m
        _check_structure(pairs, weights)
        transform = HullTransform()
        betas = [b for _, b in pairs]
        lo, hi = min(betas), max(betas)
        if renormalize and (lo != 0 or hi != 1):
            transform = HullTransform(lo, hi - lo)
            pairs = [(r, transform.to_normalized(b)) for r, b in pairs]
        return cls(tuple(AffineMap(r, b) for r, b in pairs), tuple(weights), transform)

    @classmethod
    def from_config(cls, config: dict, renormalize: bool = True) -> "FirstGenIFS":
        try:
            entries = config["maps"]
            pairs = [(e["ratio"], e["beta"]) for e in entries]
            weights = [e["weight"] for e in entries] if all("weight" in e for e in entries) else None
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed IFS config: {exc}") from exc
        return cls.from_pairs(pairs, weights, renormalize=renormalize)

    @classmethod
    def load(cls, path: Union[str, Path], renormalize: bool = True) -> "FirstGenIFS":
        try:
            config = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: invalid JSON ({exc})") from exc
        return cls.from_config(config, renormalize=renormalize)

    def to_config(self) -> dict:
        return {
            "maps": [
                {"ratio": m.ratio, "beta": m.beta, "weight": w} for m, w in zip(self.maps, self.weights)
            ]
        }

    def to_rational(self) -> "FirstGenIFS":
        return FirstGenIFS(
            tuple(AffineMap(to_fraction(m.ratio), to_fraction(m.beta)) for m in self.maps),
            tuple(to_fraction(w) for w in self.weights),
            HullTransform(to_fraction(self.transform.offset), to_fraction(self.transform.scale)),
        )

    def to_float(self) -> "FirstGenIFS":
        return FirstGenIFS(
            tuple(AffineMap(float(m.ratio), float(m.beta)) for m in self.maps),
            tuple(float(w) for w in self.weights),
            HullTransform(float(self.transform.offset), float(self.transform.scale)),
        )

    @property
    def size(self) -> int:
        return len(self.maps)

    @property
    def ratios(self) -> Tuple[Number, ...]:
        return tuple(m.ratio for m in self.maps)

    @property
    def max_ratio(self) -> Number:
        return max(self.ratios)

    @property
    def min_ratio(self) -> Number:
        return min(self.ratios)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(m.ratio, Fraction) and isinstance(m.beta, Fraction) for m in self.maps)

    def level1(self) -> List[Interval]:
        """Images of the hull under each map, in map order."""
        unit = Interval(self._zero(), self._zero() + 1)
        return [m.image(unit) for m in self.maps]

    def word_image(self, word: Sequence[int], x: Number) -> Number:
        """``phi_{w1} o ... o phi_{wd} (x)``."""
        for i in reversed(word):
            x = self.maps[i](x)
        return x

    def _zero(self):
        return Fraction(0) if self.is_exact else 0.0


@dataclass(frozen=True)
class SecondGenIFS:
    """
    Homogeneous IFS with ratio ``delta`` whose fixed points are distributed
    as the invariant measure of ``first_gen``.

    ``delta = 0`` is accepted so the chaos game can reduce to sampling the
    first-generation measure; the attractor routines require ``delta > 0``.
    """

    delta: Number
    first_gen: FirstGenIFS

    def __post_init__(self):
        if not (0 <= self.delta < 1):
            raise ValidationError(f"delta must lie in [0, 1), got {self.delta!r}")

    @property
    def delta_bar(self) -> Number:
        return 1 - self.delta

    @property
    def is_exact(self) -> bool:
        return isinstance(self.delta, Fraction) and self.first_gen.is_exact

    def to_rational(self) -> "SecondGenIFS":
        return SecondGenIFS(to_fraction(self.delta), self.first_gen.to_rational())

    def to_float(self) -> "SecondGenIFS":
        return SecondGenIFS(float(self.delta), self.first_gen.to_float())

    def with_delta(self, delta: Number) -> "SecondGenIFS":
        if self.is_exact:
            delta = to_fraction(delta)
        return SecondGenIFS(delta, self.first_gen)


# -- validation --------------------------------------------------------------


def _check_structure(pairs, weights):
    if len(pairs) < 1:
        raise ValidationError("an IFS needs at least one map")
    if len(weights) != len(pairs):
        raise ValidationError("one weight per map is required")
    for r, b in pairs:
        if not (0 < r < 1):
            raise ValidationError(f"contraction ratio must lie in (0, 1), got {r!r}")
        if b != b:
            raise ValidationError("fixed point cannot be NaN")
    if any(w <= 0 for w in weights):
        raise ValidationError("weights must be positive")
    total = sum(weights)
    if abs(total - 1) > WEIGHT_TOL:
        raise ValidationError(f"weights must sum to 1, got {total!r}")


@dataclass(frozen=True)
class ValidationReport:
    """
    ``status`` is one of ``ok`` (disconnected, non-overlapping), ``connected``
    (level-1 images tile the hull), ``overlapping`` or ``hull-violation``.
    """

    status: str
    level1: IntervalSet
    level1_gaps: IntervalSet
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    @property
    def disconnected(self) -> bool:
        return self.status == "ok"


def validate_first_gen(candidate) -> ValidationReport:
    """
    Classify a first-generation IFS.

    ``candidate`` is a :class:`FirstGenIFS`, a config dict, or a sequence of
    ``(ratio, beta)`` pairs. Structurally malformed input raises
    :class:`ValidationError`.
    """
    if isinstance(candidate, FirstGenIFS):
        pairs = [(m.ratio, m.beta) for m in candidate.maps]
    elif isinstance(candidate, dict):
        pairs = [(e["ratio"], e["beta"]) for e in candidate.get("maps", [])]
        _check_structure(pairs, [e.get("weight", 1 / max(len(pairs), 1)) for e in candidate.get("maps", [])])
    else:
        pairs = [tuple(p) for p in candidate]
        _check_structure(pairs, [Fraction(1, max(len(pairs), 1))] * len(pairs))
    images = sorted(Interval((1 - r) * b, r + (1 - r) * b) for r, b in pairs)
    level1 = normalize(images)
    betas = [b for _, b in pairs]
    if min(betas) != 0 or max(betas) != 1:
        return ValidationReport("hull-violation", level1, level1.gaps(),
                                "fixed points must include 0 and 1")
    for a, b in zip(images, images[1:]):
        if b.lo < a.hi:
            return ValidationReport("overlapping", level1, level1.gaps(),
                                    f"level-1 images {a!r} and {b!r} overlap")
    gaps = level1.gaps()
    if len(level1) == 1:
        return ValidationReport("connected", level1, gaps, "level-1 images tile the hull")
    return ValidationReport("ok", level1, gaps)


# -- bands -------------------------------------------------------------------


@dataclass(frozen=True)
class Band:
    """Image of [0, 1] under the composition of maps listed in ``word``."""

    interval: Interval
    word: Tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.word)

    @property
    def lo(self):
        return self.interval.lo

    @property
    def hi(self):
        return self.interval.hi

    @property
    def width(self):
        return self.interval.length


def _children(ifs: FirstGenIFS, band: Band, unit_images: List[Interval]) -> List[Band]:
    a, b = band.interval.lo, band.interval.hi
    w = b - a
    return [
        Band(Interval(a + w * im.lo, a + w * im.hi), band.word + (i,))
        for i, im in enumerate(unit_images)
    ]


def _root(ifs: FirstGenIFS) -> Band:
    zero = ifs._zero()
    return Band(Interval(zero, zero + 1), ())


def refine_bands(ifs: FirstGenIFS, width_threshold: Number) -> List[Band]:
    """
    Adaptive band cover of the first-generation attractor.

    Each band is split into its ``M`` children until its width is at most
    ``width_threshold``. Terminates because widths shrink like
    ``max_ratio ** depth``. Returned bands are sorted by position.
    """
    if not width_threshold > 0:
        raise ValidationError("width_threshold must be positive")
    unit_images = ifs.level1()
    out = []
    stack = [_root(ifs)]
    while stack:
        band = stack.pop()
        if band.width <= width_threshold:
            out.append(band)
        else:
            stack.extend(_children(ifs, band, unit_images))
    out.sort(key=lambda bd: (bd.lo, bd.hi, bd.word))
    return out


def uniform_bands(ifs: FirstGenIFS, depth: int) -> List[Band]:
    """All ``M ** depth`` bands at a fixed depth, sorted."""
    if depth < 0:
        raise ValidationError("depth must be non-negative")
    unit_images = ifs.level1()
    level = [_root(ifs)]
    for _ in range(depth):
        level = [child for band in level for child in _children(ifs, band, unit_images)]
    level.sort(key=lambda bd: (bd.lo, bd.hi, bd.word))
    return level


def band_cover(bands: Sequence[Band]) -> IntervalSet:
    return normalize(b.interval for b in bands)


def band_edges(bands: Sequence[Band]) -> List[Number]:
    return sorted({x for b in bands for x in (b.lo, b.hi)})


def exact_gaps(ifs: FirstGenIFS, min_length: Number) -> IntervalSet:
    """
    Every gap of the first-generation attractor with length >= ``min_length``.

    Gaps are returned as closed intervals whose endpoints are attractor
    points; the open interior is the actual gap. Bands are refined to width
    ``min_length``, which cannot hide a gap that long inside a band.
    """
    if not min_length > 0:
        raise ValidationError("min_length must be positive")
    bands = refine_bands(ifs, min_length)
    out = []
    reach = bands[0].hi
    for band in bands[1:]:
        if band.lo - reach >= min_length:
            out.append(Interval(reach, band.lo))
        reach = max(reach, band.hi)
    return IntervalSet._from_canonical(out)
