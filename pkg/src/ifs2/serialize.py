"""
JSON and CSV encodings of results.

Floats are written as JSON numbers using their shortest round-trip repr;
exact rationals are written as ``"p/q"`` strings so they survive a round
trip unchanged.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, List, Sequence

from .errors import ValidationError
from .intervals import IntervalSet, Number


def encode_number(x: Number):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator) + "/1"
    if isinstance(x, int):
        return x
    return float(x)


def decode_number(x) -> Number:
    if isinstance(x, str):
        return Fraction(x)
    return float(x)


def encode_intervals(s: IntervalSet) -> List[list]:
    return [[encode_number(a), encode_number(b)] for a, b in s]


def decode_intervals(pairs: Iterable[Sequence]) -> IntervalSet:
    return IntervalSet((decode_number(a), decode_number(b)) for a, b in pairs)


def csv_number(x: Number) -> str:
    if isinstance(x, Fraction):
        return str(encode_number(x))
    return repr(float(x))


def to_jsonable(result: Any):
    if isinstance(result, IntervalSet):
        return encode_intervals(result)
    if hasattr(result, "to_json"):
        return result.to_json()
    if isinstance(result, (list, tuple)):
        return [to_jsonable(r) for r in result]
    raise ValidationError(f"cannot serialize {type(result).__name__}")


def sweep_csv_rows(rows) -> List[tuple]:
    """Flatten sweep rows into ``(delta, kind, lo, hi)`` records."""
    out = []
    for row in rows:
        for kind, s in row.interval_kinds():
            for lo, hi in s:
                out.append((row.delta, kind, lo, hi))
    return out


def format_csv_rows(records: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for rec in records:
        writer.writerow([csv_number(v) if isinstance(v, (float, int, Fraction)) else v for v in rec])
    return buf.getvalue()


def serialize_result(result: Any, fmt: str = "json") -> bytes:
    """
    Encode a result object.

    JSON works for every result type. CSV is supported for interval sets
    (``lo,hi`` rows), sweeps (``delta,kind,lo,hi`` rows) and chaos-game runs
    (one coordinate per line).
    """
    if fmt == "json":
        return (json.dumps(to_jsonable(result), indent=2) + "\n").encode()
    if fmt != "csv":
        raise ValidationError(f"unsupported format {fmt!r}")
    from .sampler import ChaosRun
    from .sweep import SweepRow

    if isinstance(result, IntervalSet):
        return format_csv_rows((lo, hi) for lo, hi in result).encode()
    if isinstance(result, ChaosRun):
        return result.to_csv().encode()
    if isinstance(result, (list, tuple)) and all(isinstance(r, SweepRow) for r in result):
        return format_csv_rows(sweep_csv_rows(result)).encode()
    raise ValidationError(f"CSV output is not available for {type(result).__name__}")


def parse_result(data: bytes, kind: str, fmt: str = "json"):
    """Inverse of :func:`serialize_result` for the named result ``kind``."""
    from .attractor import AttractorResult
    from .certificate import Certificate
    from .gaps import GapReport
    from .sampler import ChaosRun, SupportReport
    from .sweep import SweepRow

    text = data.decode() if isinstance(data, bytes) else data
    if fmt == "csv":
        if kind == "intervals":
            return IntervalSet(
                (decode_csv(a), decode_csv(b)) for a, b in csv.reader(io.StringIO(text)) if a
            )
        if kind == "samples":
            return ChaosRun.from_csv(text)
        if kind == "sweep":
            return SweepRow.from_csv_records(list(csv.reader(io.StringIO(text))))
        raise ValidationError(f"no CSV parser for {kind!r}")
    obj = json.loads(text)
    parsers = {
        "intervals": decode_intervals,
        "attractor": AttractorResult.from_json,
        "gaps": GapReport.from_json,
        "certificate": Certificate.from_json,
        "support": SupportReport.from_json,
        "sweep": lambda rows: [SweepRow.from_json(r) for r in rows],
    }
    if kind not in parsers:
        raise ValidationError(f"unknown result kind {kind!r}")
    return parsers[kind](obj)


def decode_csv(field: str) -> Number:
    return Fraction(field) if "/" in field else float(field)
