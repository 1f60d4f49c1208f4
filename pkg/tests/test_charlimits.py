from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from schurasym.charlimits import (
    VoiculescuParam, fnu, fnu_multivar, frobenius_coords, nu_from_signature, phi_finite_N, q_prelimit,
    shifted_product, voiculescu_error, voiculescu_family, voiculescu_phi,
)
from schurasym.errors import ArgumentError, DomainError, PoleError, TruncationError
from schurasym.scalars import to_mp
from schurasym.symfunc import schur_branching

half = Fraction(1, 2)


def test_frobenius_examples():
    fp = frobenius_coords((3, 1))
    assert (fp.d, fp.p, fp.q) == (1, (Fraction(5, 2),), (Fraction(3, 2),))
    assert sum(fp.p) + sum(fp.q) == 4
    assert frobenius_coords(()).d == 0
    one = frobenius_coords((1,))
    assert (one.p, one.q) == ((half,), (half,))
    with pytest.raises(ArgumentError):
        frobenius_coords((1, -1))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 6), max_size=6))
def test_frobenius_sum(parts):
    mu = sorted(parts, reverse=True)
    fp = frobenius_coords(mu)
    assert sum(fp.p) + sum(fp.q) == sum(mu)


def test_voiculescu_phi():
    assert voiculescu_phi(VoiculescuParam(), Fraction(3, 7)) == 1
    om = VoiculescuParam(alpha_plus=(half,), delta_plus=half)
    assert voiculescu_phi(om, 2) == 1 / (1 - half)
    with pytest.raises(PoleError):
        voiculescu_phi(om, 3)
    with pytest.raises(PoleError):
        voiculescu_phi(VoiculescuParam(alpha_minus=(1,), delta_minus=1), half)
    with pytest.raises(DomainError):
        voiculescu_phi(om, 0)
    with pytest.raises(ArgumentError):
        VoiculescuParam(beta_plus=(Fraction(3, 4),), beta_minus=(Fraction(1, 2),), delta_plus=1, delta_minus=1)
    with pytest.raises(ArgumentError):
        VoiculescuParam(alpha_plus=(1,), delta_plus=half)


def test_finite_N_product():
    assert phi_finite_N([0] * 4, 4, Fraction(3, 2)) == 1
    lam = (3, 1, 0, 0, -2)
    for w in (Fraction(3), Fraction(-5, 2), Fraction(7, 4)):
        assert phi_finite_N(lam, 5, w) == shifted_product(lam, 5, w)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=6), st.fractions(min_value=2, max_value=9, max_denominator=5))
def test_frobenius_product_identity(parts, w):
    lam = sorted(parts, reverse=True)
    assert phi_finite_N(lam, len(lam), w) == shifted_product(lam, len(lam), w)


def test_families():
    gen, om = voiculescu_family("beta")
    assert len(gen(10)) == 10
    with pytest.raises(ArgumentError):
        voiculescu_family("delta")
    # the beta family is an exact identity at even N
    with mp.workprec(128):
        assert voiculescu_error("beta", 20) < 1e-30
        assert voiculescu_error("alpha", 200) < voiculescu_error("alpha", 50)


def test_fnu_trivial():
    v, tail = fnu([0] * 5, Fraction(3))
    assert abs(v - 1) < 1e-12
    with pytest.raises(TruncationError):
        fnu([0, 1, 2], Fraction(3), truncation=1)


def test_fnu_multivar_symmetry():
    nu = [0, 1, 1, 3]
    a = fnu_multivar(nu, [Fraction(3), Fraction(5, 2)])
    b = fnu_multivar(nu, [Fraction(5, 2), Fraction(3)])
    assert abs(a - b) < 1e-10
    one = fnu_multivar(nu, [Fraction(3)])
    assert abs(one - fnu(nu, Fraction(3))[0]) < 1e-10


def test_fnu_against_prelimit():
    lam = [2] * 35 + [1, 1, 0, 0, 0]
    x = Fraction(3, 2)
    with mp.workprec(128):
        pre = q_prelimit(lam, [x])
        lim, _ = fnu(nu_from_signature(lam), x)
        assert abs(to_mp(pre) - lim) < 1e-8


def test_prelimit_trivial():
    assert q_prelimit([0, 0, 0], [Fraction(3)]) == 1
    lam = (2, 1, 0)
    x = Fraction(3)
    rest = [Fraction(2) ** j for j in range(1, 3)]
    want = schur_branching(lam, [x] + rest) / schur_branching(lam, [Fraction(1)] + rest)
    assert q_prelimit(lam, [x]) == want
