from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from schurasym.errors import ArgumentError, DegeneracyError, PoleError
from schurasym.multivar import (
    generic_multivar, multivar_det_eval, multivar_expansion, ptl_poly, schur_class, symplectic_class,
)
from schurasym.residues import residue_eval
from schurasym.symfunc import normalized_character


def test_examples():
    assert multivar_det_eval("schur_1", (0, 0, 0), [2, 5]) == 1
    assert multivar_det_eval("schur_1", (1, 0), [2, 3]) == Fraction(5, 2)
    assert multivar_expansion((1, 0), [2, 3]) == Fraction(5, 2)
    assert multivar_expansion((0, 0, 0), [2, 3]) == 1
    lam, xs = (2, 1, 0), [2, Fraction(1, 3)]
    assert multivar_expansion(lam, xs) == multivar_det_eval("schur_1", lam, xs)
    assert generic_multivar(schur_class(), (1, 0), [2, 3]) == Fraction(5, 2)


def test_symplectic_q_generic_one_variable():
    q = Fraction(1, 2)
    x = Fraction(5)
    assert generic_multivar(symplectic_class(q), (1, 0), [x]) == \
        residue_eval("symplectic_q", (1, 0), params={"q": q}, x=x)


def test_symplectic_two_variables():
    xs = [2, Fraction(1, 3)]
    assert multivar_det_eval("symplectic_1", (1, 0), xs) == normalized_character("symplectic", (1, 0), xs)


def test_errors():
    with pytest.raises(DegeneracyError):
        multivar_det_eval("schur_1", (2, 1, 0), [2, 2])
    with pytest.raises(ArgumentError):
        multivar_det_eval("schur_1", (1, 0), [2, 3, 4])
    with pytest.raises(PoleError):
        multivar_det_eval("schur_1", (2, 1, 0), [1, 3])


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-2, 3), min_size=2, max_size=4), st.integers(1, 3),
       st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=3, max_size=3, unique=True))
def test_schur_determinant_matches_branching(parts, k, xs):
    lam = sorted(parts, reverse=True)
    k = min(k, len(lam))
    xs = [x for x in xs if x not in (0, 1)][:k]
    if not xs:
        return
    assert multivar_det_eval("schur_1", lam, xs) == normalized_character("schur", lam, xs)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=2, max_size=3),
       st.lists(st.fractions(min_value=2, max_value=5, max_denominator=3), min_size=2, max_size=2, unique=True))
def test_symmetry_in_variables(parts, xs):
    lam = sorted(parts, reverse=True)
    assert multivar_det_eval("schur_1", lam, xs) == multivar_det_eval("schur_1", lam, xs[::-1])


@pytest.mark.parametrize("q", [Fraction(1, 2), Fraction(3)])
def test_schur_q(q):
    lam, xs = (2, 1, 0), [Fraction(5, 2), Fraction(7, 3)]
    assert multivar_det_eval("schur_q", lam, xs, params={"q": q}) == normalized_character("schur", lam, xs, q=q)


def test_jacobi_two_variables():
    p = {"a": Fraction(1, 2), "b": Fraction(1, 3)}
    lam = (2, 1, 0)
    zs = [Fraction(3), Fraction(5, 2)]
    want = normalized_character("jacobi", lam, zs, params=p)
    assert multivar_det_eval("jacobi", lam, zs, params=p) == want
    assert multivar_det_eval("jacobi", lam, zs, params=p, route="operator") == want


def test_confluent_limit():
    lam = (3, 1, 0)
    with mp.workprec(256):
        eps = mp.mpf(10) ** -6
        xs = [1 + eps, 1 + 2 * eps]
        v = multivar_det_eval("schur_1", lam, [mp.mpf(x) for x in xs])
        assert abs(v - 1) < 1e-4


def test_ptl_poly_limit():
    for j in (2, 3, 4):
        c = ptl_poly(j, 0, 1000).coeffs
        assert abs(c.get(j - 1, 0) - 1) < Fraction(1, 50)
        assert all(abs(v) < Fraction(1, 20) for e, v in c.items() if e != j - 1)
        assert ptl_poly(j, 0, 10).degree() == j - 1
