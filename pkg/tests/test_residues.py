from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from schurasym.errors import DomainError, PreconditionError, QuadratureError
from schurasym.residues import (
    RectContour, contour_quadrature, residue_eval, residue_eval_mp, schur_laurent,
    schur_polynomial_form,
)
from schurasym.symfunc import normalized_character, symplectic_via_schur

half = Fraction(1, 2)


def test_laurent_forms():
    assert schur_laurent((1, 0)).coeffs == {2: half, 0: -half}
    assert schur_laurent((0, 0, 0)).coeffs == {2: half, 1: -1, 0: half}
    # (x^2 - 1)/2 * 1!/(x - 1) = (x + 1)/2
    assert schur_polynomial_form((1, 0)).coeffs == {1: half, 0: half}
    assert schur_laurent((1, 0))(3) * 1 / (3 - 1) == 2


def test_residue_examples():
    assert residue_eval("schur_1", (1, 0), x=2) == Fraction(3, 2)
    assert residue_eval("schur_q", (1, 0), params={"q": half}, x=3) == Fraction(8, 3)
    x = Fraction(2)
    assert residue_eval("symplectic_1", (1, 0), x=x) == 2 / (x + 1) * normalized_character("schur", (2, 1, 0, -1), [x])
    assert residue_eval("symplectic_1", (1, 0), x=x) == symplectic_via_schur((1, 0), x)


def test_residue_domain():
    with pytest.raises(DomainError):
        residue_eval("schur_1", (1, 0), x=1)
    with pytest.raises(DomainError):
        residue_eval("symplectic_1", (1, 0), x=-1)
    with pytest.raises(DomainError):
        residue_eval("schur_1", (1, 0), x=0)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-2, 3), min_size=1, max_size=4),
       st.fractions(min_value=-4, max_value=4, max_denominator=7))
def test_schur_residue_matches_branching(parts, x):
    lam = sorted(parts, reverse=True)
    if x in (0, 1):
        x = Fraction(5, 3)
    assert residue_eval("schur_1", lam, x=x) == normalized_character("schur", lam, [x])


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3),
       st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_symplectic_residue_matches_characters(parts, x):
    lam = sorted(parts, reverse=True)
    if x in (0, 1, -1):
        x = Fraction(7, 3)
    assert residue_eval("symplectic_1", lam, x=x) == normalized_character("symplectic", lam, [x])
    q = Fraction(1, 3)
    try:
        v = residue_eval("symplectic_q", lam, params={"q": q}, x=x)
    except DomainError:
        return
    assert v == normalized_character("symplectic", lam, [x], q=q)


@pytest.mark.parametrize("lam,a,b", [((1, 0), half, Fraction(1, 3)), ((2, 1, 0), Fraction(0), Fraction(2)),
                                     ((3, 1), Fraction(-1, 2), Fraction(-1, 2))])
def test_jacobi_residue(lam, a, b):
    z = Fraction(3)
    got = residue_eval("jacobi", lam, params={"a": a, "b": b}, x=z)
    assert got == normalized_character("jacobi", lam, [z], params={"a": a, "b": b})


def test_mp_evaluation_large():
    lam = [40 - 2 * i for i in range(20)]
    with mp.workprec(128):
        v, prec, loss = residue_eval_mp("schur_1", lam, Fraction(3, 2))
        exact = residue_eval("schur_1", lam, x=Fraction(3, 2))
        assert prec - loss >= 64
        assert abs(v / mp.mpf(exact.numerator) * exact.denominator - 1) < mp.mpf(2) ** -60


def test_quadrature_examples():
    v, err = contour_quadrature((1, 0), x=2)
    assert abs(v - 1.5) < 1e-8
    v, err = contour_quadrature((0, 0, 0, 0), x=3)
    assert abs(v - 1) < 1e-8
    with pytest.raises(QuadratureError):
        contour_quadrature((1, 0), x=2, contour=RectContour(0, 3))
    with pytest.raises(PreconditionError):
        contour_quadrature((3, 0), x=2, contour=RectContour(0.5, 3))
