from fractions import Fraction as F

import numpy as np
import pytest

from ifs2.attractor import iterate_attractor, phi2_power
from ifs2.certificate import (Certificate, certify, minimal_summand_count, sum_point,
                              summand_condition, truncated_sum_members)
from ifs2.errors import CertificatePreconditionError
from ifs2.intervals import UNIT
from ifs2.model import FirstGenIFS, SecondGenIFS
from conftest import THREE_MAP_PAIRS


def brute_n(a):
    """Linear search in floats, independent of the closed form."""
    n = 1
    while (n - 1) * a * a / (1 - a) ** 3 + a / (1 - a) < 1 - 1e-15:
        n += 1
    return n


def test_summand_count_examples():
    assert minimal_summand_count(0.3) == 4
    assert minimal_summand_count(0.2) == 11
    assert minimal_summand_count(F(3, 10)) == 4
    for bad in (0.35, F(1, 3), 0, -0.1):
        with pytest.raises(CertificatePreconditionError):
            minimal_summand_count(bad)


@pytest.mark.parametrize("a", np.linspace(0.05, 0.33, 29))
def test_summand_count_matches_linear_search(a):
    n = minimal_summand_count(a)
    assert n == brute_n(a)
    assert summand_condition(n, a) and (n == 1 or not summand_condition(n - 1, a))


def test_summand_count_non_increasing():
    counts = [minimal_summand_count(a) for a in np.linspace(0.02, 0.33, 200)]
    assert all(b <= a for a, b in zip(counts, counts[1:]))


@pytest.mark.parametrize("delta,hi", [(0.1, 0.0009), (0.006, 0.994 * 0.006 ** 3)])
def test_certify_symmetric(symmetric_ifs, delta, hi):
    sys_ = SecondGenIFS(delta, symmetric_ifs)
    cert = certify(sys_, iterate_attractor(sys_).attractor, strict=True)
    assert cert.summand_count == 4 and cert.contained
    assert cert.certified_interval.lo == 0
    assert cert.certified_interval.hi == pytest.approx(hi, rel=1e-14)


def test_certify_rational(symmetric_ifs):
    sys_ = SecondGenIFS(0.1, symmetric_ifs).to_rational()
    cert = certify(sys_, iterate_attractor(sys_).attractor)
    assert cert.certified_interval.hi == F(9, 10000) and cert.contained
    assert Certificate.from_json(cert.to_json()) == cert


def test_certify_rejects_ineligible(worked_system, connected_ifs):
    attractor = iterate_attractor(worked_system).attractor
    with pytest.raises(CertificatePreconditionError, match="0.4"):
        certify(worked_system, attractor)
    with pytest.raises(CertificatePreconditionError):
        certify(SecondGenIFS(0.1, connected_ifs), UNIT)
    with pytest.raises(CertificatePreconditionError):
        certify(SecondGenIFS(0.1, FirstGenIFS.from_pairs(THREE_MAP_PAIRS)), UNIT)


def test_sum_point(symmetric_ifs):
    sys_ = SecondGenIFS(F(1, 10), symmetric_ifs.to_rational())
    assert sum_point(sys_, [0] * 6) == 0
    for n in range(6):
        assert sum_point(sys_, [1] * (n + 1)) == 1 - F(1, 10) ** (n + 1)


def test_truncated_sums_lie_in_attractor(symmetric_ifs):
    sys_ = SecondGenIFS(0.05, symmetric_ifs)
    attractor = iterate_attractor(sys_).attractor
    points = truncated_sum_members(sys_, 5, 500, seed=3)
    assert all(attractor.contains(x, tol=1e-12) for x in points)
    assert truncated_sum_members(sys_, 5, 20, seed=3) == points[:20]


def test_unit_iterates_contain_attractor(symmetric_ifs):
    sys_ = SecondGenIFS(0.05, symmetric_ifs)
    attractor = iterate_attractor(sys_).attractor
    for j in range(1, 6):
        assert attractor.issubset(phi2_power(sys_, UNIT, j), tol=1e-12)
