from fractions import Fraction

import mpmath as mp
import pytest

from schurasym.errors import ArgumentError, CapacityError, DomainError
from schurasym.loop import (
    B_form, LoopParams, current, current_fd, current_prediction, escalate, loop_asymptotics,
    measured_parity_gap, parity_gap, tau_eval, univariate_leading, univariate_value, xi,
)
from schurasym.signatures import half_staircase


def test_tau_trivial():
    assert tau_eval(2, []) == tau_eval(2, [1])
    assert tau_eval(2, [], normalized=True) == 1
    assert tau_eval(5, [1, 1], normalized=True) == 1


def test_tau_errors():
    with pytest.raises(CapacityError):
        tau_eval(40, [2])
    with pytest.raises(DomainError):
        tau_eval(4, [0])
    with pytest.raises(ArgumentError):
        tau_eval(2, [2, 3, 4])


def test_half_staircase():
    assert tuple(half_staircase(5)) == (2, 1, 1, 0, 0)


def test_xi_and_B():
    assert abs(xi(4) - mp.mpf(27) / 14) < 1e-14
    assert B_form([mp.mpf(3)]) == 0
    with pytest.raises(DomainError):
        xi(1)


def test_current_at_one():
    assert current("X", LoopParams.homogeneous(6), 1) == 0


def test_jet_matches_difference():
    p = LoopParams.homogeneous(6)
    z = mp.mpf("1.2")
    with mp.workprec(256):
        fd = current_fd(p, z)
        jet = current("X", p, z, precision_bits=256)
        assert abs(fd - jet) < mp.mpf(10) ** -30


def test_boundary_dependence_shrinks():
    z = mp.expj(0.4)
    spread = []
    for L in (8, 16):
        a = current("X", LoopParams(mp.mpf("1.3"), mp.mpf("0.6"), L=L), z)
        b = current("X", LoopParams(mp.mpf("1.7"), mp.mpf("0.4"), L=L), z)
        spread.append(abs(a - b) / abs(a))
    assert spread[1] < spread[0]


def test_prediction_shape():
    z = mp.expj(0.3)
    assert abs(current_prediction(1, 10)) == 0
    assert abs(current_prediction(z, 20) * 2 - current_prediction(z, 10)) < 1e-15
    X, Y, uni = loop_asymptotics(z, 10, y=mp.mpf(1) / 2)
    assert set(uni) == {"prefactor", "h", "leading", "parity_gap"}
    with pytest.raises(DomainError):
        loop_asymptotics(mp.expj(2.2), 10)


def test_univariate_expansion():
    y = mp.mpf(1) / 2
    errs = []
    for L in (12, 16, 20):
        v = univariate_value(y, L)
        errs.append(abs(v / univariate_leading(y, L) - 1))
    assert errs[0] > errs[1] > errs[2]


def test_parity_gap():
    y = mp.mpf(1) / 2
    got = measured_parity_gap(y, 20)
    assert abs(got - parity_gap(y)) < 0.2 * parity_gap(y)


def test_escalate_agreement():
    v = escalate(lambda: mp.exp(mp.mpf(1)) - mp.mpf(1), 64)
    assert abs(v - (mp.e - 1)) < 1e-15


def test_params_validation():
    with pytest.raises(ArgumentError):
        LoopParams(L=1)
    with pytest.raises(ArgumentError):
        LoopParams(zeta1=0)
