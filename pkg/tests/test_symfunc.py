from fractions import Fraction
from itertools import product

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from schurasym.errors import ArgumentError, DomainError
from schurasym.linalg import bareiss_int, det, vandermonde
from schurasym.signatures import Signature, all_signatures, as_signature, count_interlacing_below
from schurasym.symfunc import (
    PointWithMultiplicity, confluent_ratio, normalized_character, schur_branching, symplectic_dim,
    symplectic_signature_embed, symplectic_via_schur, weyl_dim,
)


def ssyt_brute(lam, xs):
    """Sum over SSYT by enumerating GT patterns top-down."""
    def rec(kappa, level):
        if level == 0:
            return 1
        x = xs[level - 1]
        total = 0
        if level == 1:
            return x ** kappa[0]
        for mu in product(*[range(kappa[i + 1], kappa[i] + 1) for i in range(level - 1)]):
            total += x ** (sum(kappa) - sum(mu)) * rec(list(mu), level - 1)
        return total
    return rec(list(lam), len(lam))


def test_schur_examples():
    assert schur_branching((1, 0), (2, 3)) == 5
    assert schur_branching((0, 0, 0), (7, 2, 5)) == 1
    assert schur_branching((2, 1), (2, 3)) == 30


def test_confluent_examples():
    assert confluent_ratio("schur", (2, 1, 0), [PointWithMultiplicity(1, 3)]) == 8
    assert confluent_ratio("schur", (1, 0), [PointWithMultiplicity(5, 1), PointWithMultiplicity(1, 1)]) == 6
    assert confluent_ratio("symplectic", (1, 0), [PointWithMultiplicity(1, 2)]) == 4
    # x and 1/x give the same symplectic point
    assert confluent_ratio("symplectic", (1, 0), [2, Fraction(1, 2)]) == \
        confluent_ratio("symplectic", (1, 0), [PointWithMultiplicity(2, 2)])
    assert weyl_dim((2, 1, 0)) == 8
    assert weyl_dim((1, 0), q=Fraction(1, 3)) == 1 + Fraction(1, 3)
    assert weyl_dim((0, 0, 0, 0)) == 1
    assert symplectic_dim((1, 0)) == 4


def test_normalized_single_variable():
    assert normalized_character("schur", (1, 0), [3]) == 2
    assert normalized_character("schur", (1, 0), [2, 3]) == Fraction(5, 2)


def test_symplectic_embed():
    assert tuple(symplectic_signature_embed((1, 0))) == (2, 1, 0, -1)
    assert tuple(symplectic_signature_embed((0, 0, 0))) == (1, 1, 1, 0, 0, 0)
    with pytest.raises(ArgumentError):
        symplectic_signature_embed((1, -1))


@pytest.mark.parametrize("lam", [(1, 0), (2, 1), (3, 1, 0), (2, 2, 1)])
def test_symplectic_via_schur(lam):
    for x in (Fraction(2), Fraction(-1, 3), Fraction(5, 7)):
        assert symplectic_via_schur(lam, x) == normalized_character("symplectic", lam, [x])
        q = Fraction(1, 2)
        assert symplectic_via_schur(lam, x, q) == normalized_character("symplectic", lam, [x], q=q)


def test_errors():
    with pytest.raises(DomainError):
        schur_branching((1, -1), (0, 1))
    with pytest.raises(ArgumentError):
        schur_branching((1, 0), (1,))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-2, 3), min_size=1, max_size=4),
       st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=4, max_size=4))
def test_branching_matches_ssyt(parts, xs):
    lam = sorted(parts, reverse=True)
    xs = [x if x != 0 else Fraction(1, 7) for x in xs[:len(lam)]]
    assert schur_branching(lam, xs) == ssyt_brute(lam, xs)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_weyl_dim_counts_patterns(parts):
    lam = sorted(parts, reverse=True)
    assert weyl_dim(lam) == schur_branching(lam, [1] * len(lam))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(-2, 2))
def test_shift_invariance(parts, c):
    lam = sorted(parts, reverse=True)
    x = Fraction(3, 2)
    shifted = [p + c for p in lam]
    assert normalized_character("schur", shifted, [x]) == normalized_character("schur", lam, [x]) * x ** c


def test_signature_helpers():
    s = as_signature([3, 1, 1])
    assert isinstance(s, Signature) and s.N == 3
    assert count_interlacing_below((2, 1, 0)) == 4
    assert len(list(all_signatures(2, 0, 2))) == 6
    with pytest.raises(ArgumentError):
        as_signature([1, 2])


def test_linalg():
    assert bareiss_int([[2, 1], [1, 3]]) == 5
    assert det([[Fraction(1, 2), 1], [1, 4]]) == 1
    assert vandermonde([1, 2, 4]) == (1 - 2) * (1 - 4) * (2 - 4)
    with mp.workprec(128):
        assert abs(det([[mp.mpf(1), Fraction(1, 3)], [3, 2]]) - 1) < mp.mpf(10) ** -30
