from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from schurasym.asymptotics import (
    Profile, corrected_family, critical_point, first_order_limit, floor_family, gue_regime,
    profile_F, profile_norms, q_factor, second_order_prediction,
)
from schurasym.errors import ArgumentError, BranchError, DegenerateProfileError, DomainError
from schurasym.residues import residue_eval_mp
from schurasym.scalars import to_mp
from schurasym.signatures import half_staircase


def test_zero_profile_F():
    assert abs(profile_F(Profile.zero(), 2) - (2 * mp.log(2) - 1)) < 1e-14


@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(2)])
def test_linear_profile_F(alpha):
    w = mp.mpf(5)
    a = to_mp(alpha)
    want = (w * mp.log(w) - (w - a - 1) * mp.log(w - a - 1)) / (a + 1) - 1
    assert abs(profile_F(Profile.linear(alpha), w) - want) < 1e-12


def test_critical_points():
    assert abs(critical_point(Profile.zero(), mp.log(2)) - 2) < 1e-12
    for alpha in (Fraction(1, 2), Fraction(2)):
        y = mp.mpf("0.7")
        a = to_mp(alpha)
        assert abs(critical_point(Profile.linear(alpha), y) - (a + 1) / (1 - mp.exp(-y * (a + 1)))) < 1e-12
    with pytest.raises(DomainError):
        critical_point(Profile.zero(), 0)


def test_F_branch():
    with pytest.raises(BranchError):
        profile_F(Profile.zero(), Fraction(1, 2))


def test_first_order_zero_profile():
    assert abs(first_order_limit(Profile.zero(), Fraction(1, 2))) < 1e-12


def test_q_factor():
    f = Profile.linear(1)
    lam = [10 - i for i in range(10)]
    assert abs(q_factor(Profile.zero(), [0] * 10, 10, 3)) < 1e-30
    assert abs(q_factor(Profile.halfstair(), half_staircase(8), 8, 10 ** 8)) < 1e-6
    assert abs(mp.exp(q_factor(Profile.dense_loop(), half_staircase(200), 200, 10 ** 8)) - 1) < 1e-6
    assert q_factor(f, lam, 10, 4) is not None


def test_second_order_trivial():
    assert abs(second_order_prediction(Profile.zero(), [0] * 12, 12, Fraction(1, 2)) - 1) < 1e-10


def test_second_order_converges():
    f = Profile.halfstair()
    errs = []
    with mp.workprec(128):
        for N in (16, 32, 64):
            lam = floor_family(f, N)
            pred = second_order_prediction(f, lam, N, Fraction(1, 2))
            exact, _, _ = residue_eval_mp("schur_1", lam, lambda prec: mp.exp(mp.mpf(1) / 2))
            errs.append(abs(pred / exact - 1))
    assert errs[0] > errs[1] > errs[2] and errs[2] < 1e-3


def test_gue_regime_examples():
    r = gue_regime(Profile.halfstair(), 0, 100)
    assert (r.E, r.S) == (Fraction(1, 4), Fraction(5, 48))
    assert r.prediction == 1
    r0 = gue_regime(Profile.zero(), 0, 10)
    assert (r0.E, r0.S, r0.prediction) == (0, 0, 1)


def test_profile_validation():
    with pytest.raises(ArgumentError):
        Profile(((0, 0), (1, 1)))
    with pytest.raises(ArgumentError):
        Profile(((0, 1), (Fraction(1, 2), 0)))
    assert Profile.preset("linear(3)") == Profile.linear(3)
    assert Profile.preset("0:1;1/2:1/2;1:0").breakpoints[1] == (Fraction(1, 2), Fraction(1, 2))


def test_families():
    f = Profile.halfstair()
    for N in (8, 33, 100):
        lam = corrected_family(f, N)
        assert lam.N == N
        r_1, r_inf = profile_norms(lam, f)
        assert r_inf <= 1
        partial = 0
        for i in range(1, N + 1):
            partial += lam[i - 1]
            assert abs(partial - N * N * f.cumulative(Fraction(i, N))) <= Fraction(1, 2)


@settings(max_examples=20, deadline=None)
@given(st.fractions(min_value=Fraction(1, 10), max_value=3, max_denominator=10),
       st.fractions(min_value=Fraction(1, 5), max_value=2, max_denominator=10))
def test_critical_point_is_stationary(alpha, y):
    f = Profile.linear(alpha)
    w0 = critical_point(f, y)
    assert abs(profile_F(f, w0, 1) - to_mp(y)) < 1e-10
