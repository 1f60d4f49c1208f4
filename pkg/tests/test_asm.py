import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from schurasym.asm import (
    ASMatrix, LIMIT_VARIANCE, asm_enumerate, asm_gaussian_check, asm_observable, fit_convention, from_six_vertex,
    partition_function, to_six_vertex, transfer_count, vertex_stats,
)
from schurasym.errors import ArgumentError, CapacityError

ASM_COUNTS = [1, 2, 7, 42, 429, 7436]


def test_counts():
    for n, c in enumerate(ASM_COUNTS[:5], start=1):
        assert len(asm_enumerate(n)) == c
    for n, c in enumerate(ASM_COUNTS, start=1):
        assert transfer_count(n) == c
    assert asm_enumerate(1)[0].entries == ((1,),)


def test_capacity():
    with pytest.raises(CapacityError):
        asm_enumerate(8)


def test_validation():
    with pytest.raises(ArgumentError):
        ASMatrix(((1, 1), (0, 0)))
    with pytest.raises(ArgumentError):
        ASMatrix(((0, 1, 0), (1, 1, -1), (0, -1, 1)))
    ASMatrix(((0, 1, 0), (1, -1, 1), (0, 1, 0)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_six_vertex_round_trip(n):
    for A in asm_enumerate(n):
        assert from_six_vertex(to_six_vertex(A)) == A


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_vertex_invariants(n):
    for A in asm_enumerate(n):
        st_ = vertex_stats(A)
        nonzero = sum(1 for r in A.entries for v in r if v)
        assert sum(1 for t in st_.types.values() if t == "c") == nonzero
        for counts in st_.rows + st_.cols:
            assert sum(counts) == n
        # each line of an ASM has an odd number of nonzero entries
        assert all(c % 2 == 1 for _, _, c in st_.rows)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 41))
def test_random_asm_round_trip(idx):
    A = asm_enumerate(4)[idx]
    cfg = to_six_vertex(A)
    assert from_six_vertex(cfg) == A


def test_partition_function():
    with mp.workprec(128):
        conv = fit_convention()
        assert (conv.eu, conv.ev) == (2, 2)
        for n in (2, 3):
            us = [mp.mpf(k + 2) / 3 for k in range(n)]
            vs = [mp.mpf(2 * k + 1) / 5 for k in range(n)]
            d, o, c = partition_function(n, us, vs)
            assert abs(d - o * c(us, vs)) < mp.mpf(10) ** -30 * abs(d)


def test_observable_trivial():
    with mp.workprec(128):
        lhs, rhs = asm_observable(2, [0], [], [1], [])
        assert abs(lhs - 1) < 1e-30 and abs(rhs - 1) < 1e-30


@pytest.mark.parametrize("n", [3, 4])
def test_observable_identity(n):
    with mp.workprec(128):
        lhs, rhs = asm_observable(n, [0, 1], [2], [mp.mpf(3) / 2, mp.mpf(4) / 5], [mp.mpf(6) / 5])
        assert abs(lhs - rhs) < mp.mpf(10) ** -30 * abs(rhs)


def test_gaussian_small_ladder():
    rep = asm_gaussian_check((32, 64), (0.5,))
    assert rep.decreasing
    assert LIMIT_VARIANCE == 0.375
