"""
Acceptance criteria 1 to 8, each run at its stated tolerance.

Every criterion prints one ``CRITERION n: PASS|FAIL`` line; the lines are
also repeated in the pytest terminal summary. Run directly with
``python tests/test_acceptance.py`` for the summary alone.
"""
import functools
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ifs2 import (FirstGenIFS, SecondGenIFS, certify, chaos_game_samples, compute_n_epsilon,  # noqa: E402
                  delta_grid, empirical_support_check, iterate_attractor, sandwich_check,
                  minimal_summand_count, phi2_image, residual_gaps, run_sweep, truncated_sum_members)
from ifs2.errors import CertificatePreconditionError  # noqa: E402
from ifs2.gaps import open_disjoint  # noqa: E402
from ifs2.intervals import IntervalSet  # noqa: E402
from conftest import SYMMETRIC_PAIRS, WORKED_PAIRS, corpus_systems  # noqa: E402
from oracles import brute_phi2  # noqa: E402

RESULTS = []


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                line = f"CRITERION {number}: FAIL  {title}  ({exc.__class__.__name__}: {str(exc).splitlines()[0]})"
                RESULTS.append(line)
                print(line)
                raise
            line = f"CRITERION {number}: PASS  {title}  [{time.perf_counter() - start:.2f} s] {detail or ''}"
            RESULTS.append(line.rstrip())
            print(line.rstrip())
        return run
    return wrap


def worked():
    return SecondGenIFS(0.085, FirstGenIFS.from_pairs(WORKED_PAIRS))


def fig2(delta=0.1):
    return SecondGenIFS(delta, FirstGenIFS.from_pairs(SYMMETRIC_PAIRS))


SWEEP = delta_grid(0.006, 0.1, 64)
CORPUS = corpus_systems()


@functools.lru_cache(maxsize=None)
def attractor_of(index):
    result = iterate_attractor(CORPUS[index], keep_trace=True)
    assert result.converged, f"corpus system {index} did not converge"
    return result


@criterion(1, "worked example: nbar = 2, five intervals, two tiny gaps")
def test_criterion_1_worked_example():
    start = time.perf_counter()
    result = iterate_attractor(worked())
    exact = iterate_attractor(worked().to_rational())
    elapsed = time.perf_counter() - start
    assert result.converged and exact.converged
    assert elapsed < 1.0, f"runtime {elapsed:.3f} s"
    assert result.iterations == 2, f"nbar = {result.iterations}"
    gaps = result.attractor.gaps()
    tiny = [g for g in gaps if g.length < 0.01]
    assert len(exact.attractor) == len(result.attractor)
    drift = max(abs(float(a) - b) for p, q in zip(exact.attractor, result.attractor) for a, b in zip(p, q))
    assert drift <= 1e-10, f"float/rational endpoint drift {drift:.3g}"
    assert len(result.attractor) == 5, (
        f"found {len(result.attractor)} intervals and {len(tiny)} tiny gaps: "
        + ", ".join(f"({g.lo:.6f}, {g.hi:.6f})" for g in tiny)
    )
    assert len(tiny) == 2
    return f"drift {drift:.2g}"


@criterion(2, "sweep over [0.006, 0.1]: count(0.006) > count(0.1), all converge, < 30 s")
def test_criterion_2_sweep():
    start = time.perf_counter()
    rows = run_sweep(fig2(), SWEEP)
    elapsed = time.perf_counter() - start
    assert len(rows) == 64
    assert all(r.converged for r in rows), "a sweep point did not converge"
    counts = {r.delta: len(r.attractor) for r in rows}
    assert counts[0.006] > counts[0.1], f"{counts[0.006]} vs {counts[0.1]}"
    assert elapsed < 30, f"runtime {elapsed:.1f} s"
    return f"counts {counts[0.006]} vs {counts[0.1]}, max iterations {max(r.iterations for r in rows)}"


@criterion(3, "phi2_image against depth-12 brute force on 100 random two-map systems")
def test_criterion_3_oracle_equivalence():
    rng = np.random.default_rng(20240601)
    worst = 0.0
    for _ in range(100):
        r1, r2 = rng.uniform(0.05, 0.45, 2)
        delta = rng.uniform(0.02, 0.6)
        lo = rng.uniform(0, 0.8)
        hi = lo + rng.uniform(0.05, 1.0) * (1 - lo)
        pairs = [(r1, 0.0), (r2, 1.0)]
        got = phi2_image(SecondGenIFS(delta, FirstGenIFS.from_pairs(pairs)), (lo, hi))
        brute = IntervalSet.from_list(brute_phi2(pairs, delta, (lo, hi), 12))
        dist = got.hausdorff_distance(brute)
        worst = max(worst, dist)
        assert dist <= 1e-9, f"Hausdorff {dist:.3g} for {pairs}, delta={delta}, I=({lo}, {hi})"
    return f"worst {worst:.2g}"


@criterion(4, "gap bounds: N0 misses the attractor, N_eps inside G, anti-monotone in eps")
def test_criterion_4_gap_soundness():
    grid = (0.0, 1e-3, 1e-2)
    for k, sys_ in enumerate(CORPUS):
        attractor = attractor_of(k).attractor
        sets = [compute_n_epsilon(sys_, e) for e in grid]
        assert open_disjoint(sets[0], attractor), f"N0 meets the attractor for system {k}"
        for eps, n_eps in zip(grid, sets):
            residual_gaps(attractor, n_eps, eps)  # raises unless N_eps lies in G
        for small, large in zip(sets, sets[1:]):
            assert large.issubset(small), f"anti-monotonicity fails for system {k}"
    return f"{len(CORPUS)} systems"


@criterion(5, "sandwich: depth-8 band edges in the attractor, attractor within r = delta of the cover")
def test_criterion_5_sandwich():
    for k, sys_ in enumerate(CORPUS):
        report = sandwich_check(sys_, attractor_of(k).attractor, 8)
        assert report.radius == sys_.delta
        assert report.passed, f"system {k}: {report}"
    return f"{len(CORPUS)} systems"


@criterion(6, "certificate: N = 4, certified interval inside the attractor, worked example rejected")
def test_criterion_6_certificate():
    assert minimal_summand_count(0.3) == 4
    for delta in SWEEP:
        sys_ = fig2(delta)
        cert = certify(sys_, iterate_attractor(sys_).attractor)
        assert cert.summand_count == 4
        assert cert.certified_interval.hi == pytest.approx((1 - delta) * delta ** 3, rel=1e-12)
        assert cert.contained, f"delta = {delta}"
    with pytest.raises(CertificatePreconditionError, match=r"0\.4 >= 1/3"):
        certify(worked(), iterate_attractor(worked()).attractor)
    for sys_ in (fig2(0.006), fig2(0.1), worked()):
        attractor = iterate_attractor(sys_).attractor
        points = truncated_sum_members(sys_, 5, 1000, seed=7)
        outside = [x for x in points if not attractor.contains(x, tol=1e-12)]
        assert not outside, f"{len(outside)} truncated sums outside at delta {sys_.delta}"
    return "64 sweep deltas"


@criterion(7, "chaos game: 1e5 samples within 1e-9, every component hit for the worked example")
def test_criterion_7_chaos_game():
    systems = [worked()] + [fig2(d) for d in SWEEP]
    for k, sys_ in enumerate(systems):
        attractor = iterate_attractor(sys_).attractor
        run = chaos_game_samples(sys_, 100_000, burn_in=100, seed=12345)
        report = empirical_support_check(run, attractor, tol=1e-9)
        assert report.all_inside, f"{len(report.violations)} samples outside at delta {sys_.delta}"
        if k == 0:
            assert report.all_hit, f"hit counts {report.hit_counts}"
            hits = report.hit_counts
    return f"worked-example hits {hits}"


@criterion(8, "nesting K_m+1 in K_m and contraction factor at most delta + 1e-9")
def test_criterion_8_structure():
    worst = 0.0
    for k, sys_ in enumerate(CORPUS):
        result = attractor_of(k)
        for a, b in zip(result.trace, result.trace[1:]):
            assert b.issubset(a, tol=1e-12), f"nesting fails for system {k}"
        d = result.step_distances
        for prev, cur in zip(d, d[1:]):
            if prev > 0:
                worst = max(worst, cur / prev / sys_.delta)
                assert cur <= (sys_.delta + 1e-9) * prev, f"system {k}: {cur} > ({sys_.delta}) * {prev}"
    return f"largest step ratio / delta {worst:.3g}"


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except BaseException:
                pass
    sys.exit(0 if all(": PASS" in line for line in RESULTS) else 1)
