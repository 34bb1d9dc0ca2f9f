"""
Interval-existence certificate for two-map systems with small ratios.

The attractor is the infinite Minkowski sum of the rescaled copies
``(1 - delta) * delta**j * S``. A finite sum of ``N`` such Cantor sets,
all with minimal ratio ``a < 1/3``, contains an interval as soon as

    (N - 1) * a**2 / (1 - a)**3 + a / (1 - a) >= 1,

and the interval is ``[0, (1 - delta) * delta**(N - 1)]``. ``N`` depends on
the first-generation system only.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import CertificatePreconditionError, InconsistencyError
from .intervals import Interval, IntervalSet, Number
from .model import SecondGenIFS, validate_first_gen

THIRD = Fraction(1, 3)


def summand_condition(n: int, a: Number) -> bool:
    a = Fraction(a)
    return (n - 1) * a ** 2 / (1 - a) ** 3 + a / (1 - a) >= 1


def minimal_summand_count(a: Number) -> int:
    """Smallest ``N >= 1`` satisfying the summand inequality (exact arithmetic)."""
    if not (0 < a < THIRD):
        raise CertificatePreconditionError(
            f"minimal ratio must lie in (0, 1/3) for the interval-existence condition, got {a!r}"
        )
    q = Fraction(a)
    need = (1 - q / (1 - q)) / (q ** 2 / (1 - q) ** 3)
    return max(math.ceil(need), 0) + 1


@dataclass
class Certificate:
    min_ratio: Number
    summand_count: int
    certified_interval: Interval
    contained: bool
    delta: Number

    def to_json(self) -> dict:
        from .serialize import encode_number

        return {
            "a": encode_number(self.min_ratio),
            "N": self.summand_count,
            "interval": [encode_number(self.certified_interval.lo),
                         encode_number(self.certified_interval.hi)],
            "contained": self.contained,
            "delta": encode_number(self.delta),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        from .serialize import decode_number

        lo, hi = obj["interval"]
        return cls(
            min_ratio=decode_number(obj["a"]),
            summand_count=int(obj["N"]),
            certified_interval=Interval(decode_number(lo), decode_number(hi)),
            contained=bool(obj["contained"]),
            delta=decode_number(obj["delta"]),
        )


def check_preconditions(sys_: SecondGenIFS):
    ifs = sys_.first_gen
    if ifs.size != 2:
        raise CertificatePreconditionError(f"the certificate covers two-map systems, got {ifs.size} maps")
    report = validate_first_gen(ifs)
    if not report.disconnected:
        raise CertificatePreconditionError(f"first-generation system is {report.status}, need disconnected")
    big = [r for r in ifs.ratios if not r < THIRD]
    if big:
        raise CertificatePreconditionError(
            f"ratio {float(big[0])} >= 1/3: the certificate needs ratios smaller than one third"
        )


def certified_interval(sys_: SecondGenIFS, n: int) -> Interval:
    zero = sys_.delta - sys_.delta
    return Interval(zero, sys_.delta_bar * sys_.delta ** (n - 1))


def certify(sys_: SecondGenIFS, attractor: IntervalSet, tol: Number = 1e-12,
            strict: bool = False) -> Certificate:
    """
    Build the certificate and test the certified interval against a
    computed attractor. With ``strict=True`` a failed containment raises
    :class:`InconsistencyError` (theory and computation disagree).
    """
    check_preconditions(sys_)
    a = sys_.first_gen.min_ratio
    n = minimal_summand_count(a)
    iv = certified_interval(sys_, n)
    if isinstance(iv.hi, Fraction) and attractor and isinstance(attractor[0].lo, Fraction):
        tol = 0
    contained = IntervalSet([iv]).issubset(attractor, tol)
    if strict and not contained:
        raise InconsistencyError(f"certified interval {iv!r} is not inside the computed attractor")
    return Certificate(a, n, iv, contained, sys_.delta)


def sum_point(sys_: SecondGenIFS, terms: Sequence[Number]) -> Number:
    """``sum_j (1 - delta) * delta**j * terms[j]``."""
    d, db = sys_.delta, sys_.delta_bar
    total = 0 * d
    scale = db
    for s in terms:
        total += scale * s
        scale *= d
    return total


def truncated_sum_members(sys_: SecondGenIFS, depth: int, samples: int, seed: int = 0,
                          max_word: int = 12) -> List[Number]:
    """
    Random points ``sum_{j=0}^{depth} (1 - delta) delta^j s_j`` with every
    ``s_j`` the image of a first-generation fixed point under a random word.

    Each ``s_j`` is in the first-generation attractor and the omitted tail can
    be filled with the fixed point 0, so every returned point lies in the
    attractor of the second-generation system.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    ifs = sys_.first_gen
    if not any(m.beta == 0 for m in ifs.maps):
        raise CertificatePreconditionError("0 must be a first-generation fixed point")
    rng = random.Random(seed)
    betas = [m.beta for m in ifs.maps]
    out = []
    for _ in range(samples):
        terms = []
        for _ in range(depth + 1):
            word = [rng.randrange(ifs.size) for _ in range(rng.randint(0, max_word))]
            terms.append(ifs.word_image(word, rng.choice(betas)))
        out.append(sum_point(sys_, terms))
    return out
