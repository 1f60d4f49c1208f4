"""Determinants: fraction-free Bareiss for rationals, pivoted elimination otherwise."""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from .scalars import Jet, is_exact, magnitude, to_mp


def bareiss_int(M):
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i = A[i]
            row_k = A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def det_exact(M):
    """Exact determinant of a rational matrix: clear row denominators, then Bareiss."""
    scale = Fraction(1)
    rows = []
    for r in M:
        r = [Fraction(v) for v in r]
        d = 1
        for v in r:
            d = lcm(d, v.denominator)
        rows.append([int(v * d) for v in r])
        scale /= d
    return bareiss_int(rows) * scale


def det_pivot(M):
    """Gaussian elimination with partial pivoting on the value magnitude.

    Works for mpmath scalars and for jets (pivoting looks at the value part).
    """
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    d = None
    sign = 1
    for c in range(n):
        p = max(range(c, n), key=lambda r: magnitude(A[r][c]))
        if magnitude(A[p][c]) == 0:
            return A[0][0] * 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            sign = -sign
        piv = A[c][c]
        d = piv if d is None else d * piv
        inv = 1 / piv
        for r in range(c + 1, n):
            f = A[r][c] * inv
            if f == 0:
                continue
            row_r = A[r]
            row_c = A[c]
            for k in range(c + 1, n):
                row_r[k] = row_r[k] - f * row_c[k]
    return d if sign == 1 else -d


def det(M):
    if all(is_exact(v) and not isinstance(v, Jet) for r in M for v in r):
        return det_exact(M)
    if any(is_exact(v) for r in M for v in r):
        M = [[v if not is_exact(v) else to_mp(v) for v in r] for r in M]
    return det_pivot(M)


def vandermonde(xs):
    """prod_{i<j} (x_i - x_j)."""
    out = 1
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            out = out * (xs[i] - xs[j])
    return out
