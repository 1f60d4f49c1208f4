from collections import Counter
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from schurasym.asymptotics import Profile
from schurasym.errors import ArgumentError, CapacityError, DegenerateProfileError
from schurasym.signatures import all_signatures
from schurasym.symfunc import weyl_dim
from schurasym.tilings import (
    CANDIDATE_CAP, GTPattern, bessel_mgf, gt_count, gue_corners_test, row_law, sample_rows, sample_tiling,
    skew_dim,
)

# chi-square 0.999 quantiles for 1, 7 degrees of freedom
CHI2_999 = {1: 10.83, 7: 24.32}


def chi2(counts, n, support):
    p = 1 / len(support)
    return sum((counts.get(s, 0) - n * p) ** 2 / (n * p) for s in support)


def test_gt_count_examples():
    assert gt_count((), (1, 0)) == 2
    assert gt_count((), (2, 1, 0)) == 8
    assert gt_count((2, 1, 0), (2, 1, 0)) == 1


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-2, 3), min_size=1, max_size=4))
def test_gt_count_is_dimension(parts):
    lam = sorted(parts, reverse=True)
    assert gt_count((), lam) == weyl_dim(lam)


def test_row_law_sums_to_one():
    for lam in ((2, 1, 0), (3, 3, 1, 0), (4, 2, 2, 1, 0)):
        for k in range(1, len(lam)):
            law = row_law(lam, k)
            assert sum(law.values()) == 1
            for eta, p in law.items():
                assert p == Fraction(gt_count((), eta) * gt_count(eta, lam), weyl_dim(lam))


def test_skew_dim():
    assert skew_dim((2, 1, 0), (1,), 2) == gt_count((1,), (2, 1, 0))
    assert skew_dim((3, 1, 0), (3,), 2) == gt_count((3,), (3, 1, 0))


def test_zero_signature():
    batch = sample_tiling((0, 0, 0), 3, seed=1)
    assert all(p.rows == ((0,), (0, 0), (0, 0, 0)) for p in batch.patterns)


def test_pattern_validation():
    with pytest.raises(ArgumentError):
        GTPattern(((3,), (2, 1)))
    with pytest.raises(ArgumentError):
        GTPattern(((1,), (2,)))


@pytest.mark.parametrize("lam", [(1, 0), (2, 1, 0)])
def test_exact_sampler_uniform(lam):
    n = 4000
    batch = sample_tiling(lam, n, seed=7)
    counts = Counter(p.rows for p in batch.patterns)
    support = list(counts)
    assert len(support) == gt_count((), lam)
    assert chi2(counts, n, support) < CHI2_999[len(support) - 1]


def test_mcmc_matches_exact():
    lam = (2, 1, 0)
    n = 2000
    batch = sample_tiling(lam, n, seed=3, method="mcmc", sweeps=20)
    assert batch.method == "mcmc(20)"
    counts = Counter(p.rows for p in batch.patterns)
    assert len(counts) == 8
    assert chi2(counts, n, list(counts)) < CHI2_999[7]


def test_determinism():
    a = sample_tiling((3, 1, 0, 0), 5, seed=11)
    b = sample_tiling((3, 1, 0, 0), 5, seed=11)
    assert [p.rows for p in a.patterns] == [p.rows for p in b.patterns]
    assert a.to_csv_rows() == b.to_csv_rows()


def test_capacity():
    lam = [200 - 10 * i for i in range(12)]
    with pytest.raises(CapacityError):
        sample_tiling(lam, 1, seed=0)
    assert CANDIDATE_CAP == 10 ** 6


def test_sample_rows_law():
    lam = (3, 1, 0)
    n = 3000
    batch = sample_rows(lam, 1, n, seed=5)
    law = row_law(lam, 1)
    counts = Counter(tuple(p[0]) if not isinstance(p, GTPattern) else p.rows[0] for p in batch.patterns)
    stat = sum((counts.get(e, 0) - n * float(p)) ** 2 / (n * float(p)) for e, p in law.items())
    assert stat < 16.3  # 0.999 quantile, 3 degrees of freedom


def test_bessel_mgf_small_x():
    with mp.workprec(256):
        lhs, rhs = bessel_mgf((2, 1, 0), [mp.mpf(10) ** -8], 1)
        assert abs(lhs - 1) < 1e-7 and abs(rhs - 1) < 1e-7


@pytest.mark.parametrize("N", [2, 3, 4])
def test_bessel_mgf_identity(N):
    with mp.workprec(160):
        for lam in list(all_signatures(N, 0, 2))[:12]:
            for k in range(1, N):
                xs = [mp.mpf(j + 1) / 3 for j in range(k)]
                lhs, rhs = bessel_mgf(lam.parts, xs, k)
                assert abs(lhs - rhs) < mp.mpf(10) ** -30 * max(1, abs(rhs))


def test_degenerate_profile():
    with pytest.raises(DegenerateProfileError):
        gue_corners_test(Profile.zero(), 10, 1, 10, seed=0)


def test_gue_small_run_structure():
    rep = gue_corners_test(Profile.halfstair(), 12, 2, 200, seed=0)
    stats = {c["stat"] for c in rep["checks"]}
    assert {"mean", "var", "cov"} <= stats
    assert isinstance(rep["pass"], bool)
