"""Exact oracles for Schur, symplectic and Jacobi normalized characters.

Two independent routes are provided for Schur functions: the branching rule
over interlacing signatures, and the bialternant with confluent (Taylor) rows
for repeated points.  Symplectic characters are handled in the variable
t = x + 1/x, where every row is a polynomial and x = 1 is not special.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath as mp

from .errors import ArgumentError, DomainError, SingularSpecializationError
from .linalg import det
from .scalars import Jet, is_exact, to_mp
from .signatures import Signature, StrictSignature, as_signature, interlacing_below


@dataclass(frozen=True)
class PointWithMultiplicity:
    point: object
    multiplicity: int = 1

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ArgumentError("multiplicity must be positive")


def _norm_scalar(x):
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        return mp.mpf(x)
    if isinstance(x, complex):
        return mp.mpc(x)
    if hasattr(x, "to_mp"):
        return x.to_mp()
    return x


def schur_branching(lam, xs: Sequence) -> object:
    """s_lambda(x_1..x_N) by iterated branching: sum over mu < kappa of x^{|kappa|-|mu|}."""
    lam = as_signature(lam)
    xs = [_norm_scalar(x) for x in xs]
    N = lam.N
    if len(xs) != N:
        raise ArgumentError(f"need {N} variables, got {len(xs)}")
    if N == 0:
        return Fraction(1)
    if min(lam.parts) < 0 and any(x == 0 for x in xs):
        raise DomainError("zero variable with a negative signature part")
    level = {lam.parts: Fraction(1)}
    for k in range(N - 1, -1, -1):
        x = xs[k]
        nxt = {}
        for kappa, w in level.items():
            sk = sum(kappa)
            if k == 0:
                nxt[()] = nxt.get((), 0) + w * x ** kappa[0]
                continue
            for mu in interlacing_below(kappa):
                t = w * x ** (sk - sum(mu))
                nxt[mu] = nxt.get(mu, 0) + t
        level = nxt
    return level[()]


def merge_points(points, key=lambda p: p):
    """Group equal points (equality under ``key``), summing multiplicities."""
    merged = []
    for p in points:
        if not isinstance(p, PointWithMultiplicity):
            p = PointWithMultiplicity(_norm_scalar(p), 1)
        kp = key(p.point)
        for i, (q, m) in enumerate(merged):
            if key(q) == kp:
                merged[i] = (q, m + p.multiplicity)
                break
        else:
            merged.append((p.point, p.multiplicity))
    return merged


def chebyshev_rows(t, amax):
    """P_0..P_amax at t, P_0 = 0, P_1 = 1, P_{a+1} = t P_a - P_{a-1}; P_a(x+1/x) = (x^a-x^-a)/(x-1/x)."""
    P = [t * 0, t * 0 + 1]
    for a in range(1, amax):
        P.append(t * P[a] - P[a - 1])
    return P[: amax + 1]


def jacobi_basis(m, s, a, b):
    """Jacobi polynomial normalized to 1 at x = 1, as a terminating 2F1 in s = (1-x)/2."""
    term = s * 0 + 1
    tot = term
    for k in range(m):
        term = term * ((k - m) * (m + a + b + 1 + k)) / ((a + 1 + k) * (k + 1)) * s
        tot = tot + term
    return tot


def _taylor_rows(basis, exps, x0, mult):
    """Rows r = 0..mult-1 hold the Taylor coefficients f^{(r)}(x0)/r! of each basis function."""
    if mult == 1:
        return [[basis(e, x0) for e in exps]]
    xj = Jet((x0, 1) + (0,) * (mult - 2))
    vals = [basis(e, xj) for e in exps]
    out = []
    for r in range(mult):
        out.append([v.c[r] if isinstance(v, Jet) else (v if r == 0 else 0) for v in vals])
    return out


def _family_setup(family, lam, params):
    N = lam.N
    if family == "schur":
        num = [lam[j] + N - 1 - j for j in range(N)]
        den = [N - 1 - j for j in range(N)]

        def basis(e, x):
            if x == 0 and e < 0:
                raise DomainError("x = 0 with a negative exponent")
            return x ** e

        return basis, num, den, (lambda x: x)
    if family == "symplectic":
        lam.require_nonnegative()
        num = [lam[j] + N - j for j in range(N)]
        den = [N - j for j in range(N)]

        def basis(e, t):
            return chebyshev_rows(t, e)[e]

        def to_var(x):
            if x == 0:
                raise DomainError("symplectic character undefined at x = 0")
            return x + 1 / x

        return basis, num, den, to_var
    if family == "jacobi":
        lam.require_nonnegative()
        a, b = params["a"], params["b"]
        num = [lam[j] + N - 1 - j for j in range(N)]
        den = [N - 1 - j for j in range(N)]

        mixed = not (is_exact(a) and is_exact(b))

        def basis(m, s):
            if mixed and is_exact(s):
                s = to_mp(s)
            return jacobi_basis(m, s, a, b)

        return basis, num, den, (lambda x: (1 - x) / 2)
    raise ArgumentError(f"unknown family {family!r}")


def confluent_det(family, lam, points, params=None):
    """(numerator det, denominator det) with Taylor rows at repeated points.

    schur: rows in x; symplectic: rows in t = x + 1/x; jacobi: rows in s = (1-x)/2.
    """
    lam = as_signature(lam)
    basis, num, den, to_var = _family_setup(family, lam, params or {})
    pts = []
    for p in points:
        if not isinstance(p, PointWithMultiplicity):
            p = PointWithMultiplicity(_norm_scalar(p), 1)
        pts.append(PointWithMultiplicity(to_var(_norm_scalar(p.point)), p.multiplicity))
    merged = merge_points(pts)
    if sum(m for _, m in merged) != lam.N:
        raise ArgumentError("multiplicities must sum to N")
    rows_n, rows_d = [], []
    for v, m in merged:
        rows_n += _taylor_rows(basis, num, v, m)
        rows_d += _taylor_rows(basis, den, v, m)
    return det(rows_n), det(rows_d), merged


def confluent_ratio(family, mu, points, params=None):
    """Bialternant ratio det[g rows]/det[denominator rows] with confluent rows.

    ``mu`` may be a StrictSignature or the corresponding Signature.  For
    schur this is s_lambda at the points, for symplectic chi_lambda.  For jacobi
    the basis is normalized at x = 1, so only ratios of such values are
    meaningful (see ``normalized_character``).
    """
    lam = mu.signature() if isinstance(mu, StrictSignature) else as_signature(mu)
    n, d, merged = confluent_det(family, lam, points, params)
    if d == 0:
        bad = next((p for p, m in merged if m > 1), merged[0][0] if merged else None)
        raise SingularSpecializationError(f"denominator determinant vanishes near point {bad}", bad)
    return n / d


def weyl_dim(lam, q=None):
    """s_lambda(1^N) (q None or 1) or s_lambda(1, q, ..., q^{N-1}) as an exact product."""
    lam = as_signature(lam)
    N = lam.N
    mu = [lam[i] + N - 1 - i for i in range(N)]
    out = Fraction(1)
    if q is None or q == 1:
        for i in range(N):
            for j in range(i + 1, N):
                out *= Fraction(mu[i] - mu[j], j - i)
        return out
    if q == 0:
        raise ArgumentError("q = 0 is not allowed")
    q = _norm_scalar(q)
    out = q ** 0
    for i in range(N):
        for j in range(i + 1, N):
            d = q ** (N - 1 - i) - q ** (N - 1 - j)
            if d == 0:
                raise DomainError("q is a root of unity hitting a zero factor")
            out = out * (q ** mu[i] - q ** mu[j]) / d
    return out


def symplectic_dim(lam, q=None):
    """chi_lambda(1^N) (q None or 1) or chi_lambda(q, q^2, ..., q^N)."""
    lam = as_signature(lam).require_nonnegative()
    N = lam.N
    a = [lam[j] + N - j for j in range(N)]
    b = [N - j for j in range(N)]
    if q is None or q == 1:
        out = Fraction(1)
        for i in range(N):
            out *= Fraction(a[i], b[i])
            for j in range(i + 1, N):
                out *= Fraction(a[i] ** 2 - a[j] ** 2, b[i] ** 2 - b[j] ** 2)
        return out
    if q == 0:
        raise ArgumentError("q = 0 is not allowed")
    q = _norm_scalar(q)
    t = lambda e: q ** e + q ** (-e)
    out = q ** 0
    for i in range(N):
        out = out * (q ** a[i] - q ** (-a[i])) / (q ** b[i] - q ** (-b[i]))
        for j in range(i + 1, N):
            out = out * (t(a[i]) - t(a[j])) / (t(b[i]) - t(b[j]))
    return out


def specialization_points(family, N, k, q=None):
    """The filled-in values: 1^{N-k}, or 1, q, ... (schur), or q, q^2, ... (symplectic)."""
    if q is None or q == 1:
        return [PointWithMultiplicity(Fraction(1), N - k)] if N > k else []
    q = _norm_scalar(q)
    if family == "schur":
        return [q ** i for i in range(N - k)]
    return [q ** i for i in range(1, N - k + 1)]


def normalized_character(family, lam, xs, N=None, q=None, params=None):
    """S_lambda(xs;N,q), the symplectic analogue, or J_lambda(z;N,a,b) (jacobi, z-variables)."""
    lam = as_signature(lam)
    N = lam.N if N is None else N
    if N != lam.N:
        raise ArgumentError("len(lambda) must equal N")
    xs = [_norm_scalar(x) for x in xs]
    k = len(xs)
    if k > N:
        raise ArgumentError("more variables than N")
    if family == "jacobi":
        if q not in (None, 1):
            raise ArgumentError("no q-version for jacobi")
        pts = [(z + 1 / z) / 2 for z in xs] + ([PointWithMultiplicity(Fraction(1), N - k)] if N > k else [])
        one = [PointWithMultiplicity(Fraction(1), N)]
        n1, d1, _ = confluent_det("jacobi", lam, pts, params)
        n0, d0, _ = confluent_det("jacobi", lam, one, params)
        if d1 == 0:
            raise SingularSpecializationError("degenerate jacobi specialization")
        return (n1 / d1) / (n0 / d0)
    pts = list(xs) + specialization_points(family, N, k, q)
    val = confluent_ratio(family, lam, pts)
    den = weyl_dim(lam, q) if family == "schur" else symplectic_dim(lam, q)
    if not is_exact(den) and not is_exact(val):
        return val / den
    if is_exact(val):
        return val / den
    return val / to_mp(den)


def symplectic_signature_embed(lam, N=None) -> Signature:
    """nu of length 2N: nu_i = lambda_i + 1 (i <= N), nu_i = -lambda_{2N-i+1} (i > N)."""
    lam = as_signature(lam)
    if not lam.is_nonnegative():
        raise ArgumentError("negative part in lambda")
    N = lam.N if N is None else N
    if N != lam.N:
        raise ArgumentError("len(lambda) must equal N")
    return Signature([p + 1 for p in lam.parts] + [-p for p in reversed(lam.parts)])


def symplectic_via_schur(lam, x, q=None):
    """Normalized symplectic character at one point through a Schur function of length 2N.

    q = 1: 2/(x+1) S_nu(x; 2N, 1); otherwise (1+q^N)/(x+1) S_nu(x q^{N-1}; 2N, q).
    """
    lam = as_signature(lam)
    nu = symplectic_signature_embed(lam)
    x = _norm_scalar(x)
    if x == -1:
        raise DomainError("x = -1 is excluded")
    if q is None or q == 1:
        return 2 / (x + 1) * normalized_character("schur", nu, [x])
    q = _norm_scalar(q)
    N = lam.N
    return (1 + q ** N) / (x + 1) * normalized_character("schur", nu, [x * q ** (N - 1)], q=q)
