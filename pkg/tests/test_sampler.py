import numpy as np
import pytest

from ifs2.attractor import iterate_attractor
from ifs2.intervals import IntervalSet
from ifs2.model import SecondGenIFS
from ifs2.sampler import (ChaosRun, beta_depth, chaos_game_samples, empirical_support_check,
                          sigma_samples)
from oracles import level_bands


def test_delta_zero_reduces_to_first_generation(worked_ifs):
    run = chaos_game_samples(SecondGenIFS(0.0, worked_ifs), 2000, seed=11)
    assert np.array_equal(run.points, sigma_samples(worked_ifs, 2000, seed=11))


def test_first_generation_draws_lie_in_sigma(worked_ifs):
    pts = sigma_samples(worked_ifs, 5000, seed=2)
    lo, hi = level_bands([(0.2, 0.0), (0.4, 1.0)], 10)
    k = np.searchsorted(lo, pts, side="right") - 1
    assert np.all(pts <= hi[k] + 1e-14)


def test_beta_depth(worked_ifs):
    n = beta_depth(worked_ifs)
    assert 0.4 ** n < 1e-14 <= 0.4 ** (n - 1)


def test_seeded_determinism(worked_system):
    a = chaos_game_samples(worked_system, 1000, seed=5)
    assert a == chaos_game_samples(worked_system, 1000, seed=5)
    assert a != chaos_game_samples(worked_system, 1000, seed=6)
    assert a.count == len(a.points) == 1000
    assert ChaosRun.from_csv(a.to_csv()) == a


def test_samples_in_attractor_and_hit_every_component(worked_system):
    attractor = iterate_attractor(worked_system).attractor
    report = empirical_support_check(chaos_game_samples(worked_system, 20000, seed=0), attractor)
    assert report.all_inside and report.all_hit
    assert sum(report.hit_counts) == 20000


def test_negative_control_missing_component(worked_system):
    attractor = iterate_attractor(worked_system).attractor
    run = chaos_game_samples(worked_system, 20000, seed=0)
    for drop in range(len(attractor)):
        kept = IntervalSet(iv for k, iv in enumerate(attractor.items) if k != drop)
        assert not empirical_support_check(run, kept).all_inside


def test_support_check_counts(symmetric_ifs):
    run = ChaosRun(np.array([0.1, 0.15, 0.5, 0.95]), 0, 0, 4)
    report = empirical_support_check(run, IntervalSet([(0.0, 0.2), (0.9, 1.0)]))
    assert report.violations == [0.5] and report.hit_counts == [2, 1]
    assert not report.passed
    with pytest.raises(ValueError):
        chaos_game_samples(SecondGenIFS(0.1, symmetric_ifs), 0)

