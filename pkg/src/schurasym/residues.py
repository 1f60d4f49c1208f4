"""Single-variable normalized characters as finite residue sums, plus quadrature.

Each contour integral has only simple poles at explicitly known points, so
the default evaluation is the exact sum of residues times the prefactor.
``contour_quadrature`` integrates the Schur (q = 1) integrand numerically over
a rectangle and exists to validate the contour picture.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath as mp
import numpy as np

from .errors import ArgumentError, DomainError, PrecisionError, PreconditionError, QuadratureError
from .laurent import LaurentPolynomial
from .scalars import DEFAULT_PREC, is_exact, to_mp
from .signatures import as_signature
from .symfunc import _norm_scalar, jacobi_basis

FAMILIES = ("schur_1", "schur_q", "symplectic_1", "symplectic_q", "jacobi")


def _strict(lam, N):
    lam = as_signature(lam)
    if N is not None and N != lam.N:
        raise ArgumentError("len(lambda) must equal N")
    return lam, [lam[i] + lam.N - 1 - i for i in range(lam.N)]


def schur_laurent(lam, N=None) -> LaurentPolynomial:
    """sum_i x^{mu_i} / prod_{j != i} (mu_i - mu_j)."""
    lam, mu = _strict(lam, N)
    c = {}
    for i, m in enumerate(mu):
        p = 1
        for j, mj in enumerate(mu):
            if j != i:
                p *= m - mj
        c[m] = Fraction(1, p)
    return LaurentPolynomial(c)


def schur_polynomial_form(lam, N=None) -> LaurentPolynomial:
    """S_lambda(x;N,1) itself as a Laurent polynomial (exact division by (x-1)^{N-1})."""
    lam = as_signature(lam)
    L = schur_laurent(lam, N)
    return L.divide_x_minus_1(lam.N - 1) * factorial(lam.N - 1)


def _qint(m, q):
    return (q ** m - 1) / (q - 1)


def _qfact(m, q):
    out = q ** 0
    for i in range(1, m + 1):
        out = out * _qint(i, q)
    return out


def _poch(a, q, n):
    out = q ** 0
    for i in range(n):
        out = out * (1 - a * q ** i)
    return out


def residue_terms(family, lam, N=None, params=None):
    """Prefactor function and residue list for a family.

    Returns (prefactor(x), [(pole, term(x))...]) so callers can monitor
    cancellation.  Terms are closures evaluated at the same x.
    """
    params = params or {}
    lam, mu = _strict(lam, N)
    N = lam.N
    if family == "schur_1":
        L = schur_laurent(lam)
        terms = [(m, (lambda x, m=m, c=L.coeffs[m]: c * x ** m)) for m in mu]
        pref = lambda x: factorial(N - 1) / (x - 1) ** (N - 1)
        return pref, terms
    if family == "schur_q":
        q = _norm_scalar(params["q"])
        terms = []
        for i, m in enumerate(mu):
            d = q ** 0
            for j, mj in enumerate(mu):
                if j != i:
                    d = d * (q ** m - q ** mj)
            terms.append((m, (lambda x, m=m, d=d: x ** m / d)))

        def pref(x):
            den = x ** 0
            for i in range(1, N):
                den = den * (x - q ** (i - 1))
            return _qfact(N - 1, q) * q ** ((N - 1) * (N - 2) // 2) * (q - 1) ** (N - 1) / den

        return pref, terms
    lam.require_nonnegative()
    a_ = [m + 1 for m in mu]
    if family == "symplectic_1":
        terms = []
        for i, a in enumerate(a_):
            d = 1
            for j, b in enumerate(a_):
                if j != i:
                    d *= a * a - b * b
            terms.append((a, (lambda x, a=a, d=d: (x ** a - x ** (-a)) / (2 * a * d))))

        def pref(x):
            return 2 * factorial(2 * N - 1) / ((x - 1 / x) * (x + 1 / x - 2) ** (N - 1))

        return pref, terms
    if family == "symplectic_q":
        q = _norm_scalar(params["q"])
        T = [q ** a + q ** (-a) for a in a_]
        terms = []
        for i, a in enumerate(a_):
            d = q ** a - q ** (-a)
            for j in range(N):
                if j != i:
                    d = d * (T[i] - T[j])
            terms.append((a - 1, (lambda x, a=a, d=d: (x ** a - x ** (-a)) / d)))

        def pref(x):
            # extra q^{-N(N+1)/2} fixed against the bialternant oracle
            num = (-1) ** (N - 1) * (q - 1) ** (2 * N - 1) * _qfact(2 * N, q) * q ** (-(N * (N + 1) // 2))
            den = _poch(x * q, q, N - 1) * _poch(q / x, q, N - 1) * (x - 1 / x) * _qint(N, q)
            return num / den

        return pref, terms
    if family == "jacobi":
        a, b = params["a"], params["b"]
        s = a + b + 1
        m_ = [m + s / 2 for m in mu]
        terms = []
        for i, m in enumerate(mu):
            d = 1
            for j in range(N):
                if j != i:
                    d = d * (m_[i] ** 2 - m_[j] ** 2)
            terms.append((m, (lambda x, m=m, d=d: jacobi_basis(m, (1 - x) / 2, a, b) / d)))

        def pref(x):
            k = 2 ** (N - 1) * factorial(N - 1)
            for r in range(N - 1):
                k = k * (a + 1 + r)
            return k / (x - 1) ** (N - 1)

        return pref, terms
    raise ArgumentError(f"unknown family {family!r}")


def _check_domain(family, N, x, params):
    if x == 0:
        raise DomainError("x = 0 is excluded")
    if family == "schur_1" and x == 1 and N > 1:
        raise DomainError("x = 1 is excluded")
    if family == "schur_q":
        q = _norm_scalar(params["q"])
        if q <= 0 or q == 1:
            raise ArgumentError("q must be a positive real other than 1")
        if any(x == q ** i for i in range(N - 1)):
            raise DomainError("x = q^i is excluded")
    if family in ("symplectic_1", "symplectic_q") and (x == 1 or x == -1):
        raise DomainError("x = +-1 is excluded")
    if family == "symplectic_q":
        q = _norm_scalar(params["q"])
        if q <= 0 or q == 1:
            raise ArgumentError("q must be a positive real other than 1")
        if any(x == q ** e for e in range(-N + 1, N) if e != 0):
            raise DomainError("x hits a zero of the prefactor denominator")
    if family == "jacobi":
        if params["a"] <= -1 or params["b"] <= -1:
            raise ArgumentError("jacobi parameters must exceed -1")
        if x == 1 and N > 1:
            raise DomainError("x = 1 is excluded")


def residue_eval(family, lam, N=None, params=None, x=None):
    """Residue-sum value of the normalized character at x.

    For jacobi the argument is z and x = (z + 1/z)/2 is formed internally.
    Exact for rational inputs; mpmath inputs are evaluated at the current
    precision (see ``residue_eval_mp`` for loss-aware evaluation).
    """
    params = params or {}
    lam = as_signature(lam)
    N = lam.N if N is None else N
    x = _norm_scalar(x)
    if family == "jacobi":
        if x == 0:
            raise DomainError("z = 0 is excluded")
        x = (x + 1 / x) / 2
    _check_domain(family, N, x, params)
    pref, terms = residue_terms(family, lam, N, params)
    tot = 0
    for _, t in terms:
        tot = tot + t(x)
    return pref(x) * tot


def residue_eval_mp(family, lam, x, params=None, min_bits=64, max_prec=200000):
    """High-precision evaluation with escalation until at least ``min_bits`` survive cancellation.

    ``x`` is a callable prec -> mp value (so it can be recomputed at higher
    precision) or a fixed exact scalar.  Returns (value, precision_bits, loss_bits).
    """
    lam = as_signature(lam)
    N = lam.N
    prec = max(DEFAULT_PREC, mp.mp.prec)
    xv = x(53) if callable(x) else to_mp(_norm_scalar(x))
    d = abs(to_mp(xv) - 1) if family != "jacobi" else abs(to_mp(xv) - 1) ** 2
    if d != 0:
        guess = int(N * (1 + max(0.0, -float(mp.log(d, 2))))) + min_bits + 64
        prec = max(prec, guess)
    while True:
        with mp.workprec(prec):
            xx = x(prec) if callable(x) else to_mp(_norm_scalar(x))
            if family == "jacobi":
                xx = (xx + 1 / xx) / 2
            pref, terms = residue_terms(family, lam, N, _mp_params(params))
            tot = 0
            big = mp.mpf(0)
            for _, t in terms:
                v = t(xx)
                tot += v
                big = max(big, abs(v))
            if tot == 0:
                loss = prec
            else:
                loss = float(mp.log(big, 2) - mp.log(abs(tot), 2)) if big else 0.0
            if prec - loss >= min_bits + 16:
                return +(pref(xx) * tot), prec, loss
        if prec >= max_prec:
            raise PrecisionError(f"cancellation of {loss:.0f} bits exceeds the precision cap")
        prec = min(max_prec, int(prec * 1.5) + int(loss))


def _mp_params(params):
    if not params:
        return params
    return {k: (to_mp(v) if isinstance(v, Fraction) else v) for k, v in params.items()}


def schur1_mp(lam, x, min_bits=64):
    """S_lambda(x;N,1) at high precision (x callable prec -> value, or exact)."""
    return residue_eval_mp("schur_1", lam, x, min_bits=min_bits)


@dataclass(frozen=True)
class RectContour:
    left: float
    right: float
    half_height: float = 1.0
    samples_per_unit: int = 12

    def __post_init__(self):
        if not self.right > self.left or self.half_height <= 0:
            raise ArgumentError("degenerate rectangle")
        if self.samples_per_unit < 4:
            raise ArgumentError("need at least 4 samples per unit length")

    @classmethod
    def around(cls, lam, margin=0.5, half_height=1.0, samples_per_unit=12):
        lam, mu = _strict(lam, None)
        return cls(min(mu) - margin, max(mu) + margin, half_height, samples_per_unit)


def _gl_segment(f, a, b, n_panels, nodes, weights):
    """Composite Gauss-Legendre along the straight segment a -> b."""
    tot = 0
    h = (b - a) / n_panels
    for p in range(n_panels):
        z0 = a + h * p
        for t, w in zip(nodes, weights):
            tot += w * f(z0 + h * (t + 1) / 2)
    return tot * h / 2


def contour_quadrature(lam, N=None, x=None, contour: RectContour | None = None, prec=None):
    """Numerical contour integral for S_lambda(x;N,1); returns (value, error estimate).

    The error estimate is the difference against a run with doubled sampling.
    """
    lam, mu = _strict(lam, N)
    N = lam.N
    contour = contour or RectContour.around(lam)
    prec = prec or DEFAULT_PREC
    with mp.workprec(prec):
        xv = to_mp(_norm_scalar(x))
        if xv == 0 or xv == 1:
            raise DomainError("x must avoid 0 and 1")
        left, right = mp.mpf(contour.left), mp.mpf(contour.right)
        hh = mp.mpf(contour.half_height)
        for m in mu:
            if m == left or m == right:
                raise QuadratureError(f"pole {m} lies on the contour")
            if not left < m < right:
                raise PreconditionError(f"pole {m} is outside the contour")
        lx = mp.log(xv)

        def f(z):
            d = 1
            for m in mu:
                d *= z - m
            return mp.exp(z * lx) / d

        def integrate(spu):
            nodes, weights = zip(*_gl_nodes(spu, prec))
            corners = [mp.mpc(left, -hh), mp.mpc(right, -hh), mp.mpc(right, hh), mp.mpc(left, hh)]
            tot = 0
            for c0, c1 in zip(corners, corners[1:] + corners[:1]):
                length = abs(c1 - c0)
                panels = max(1, int(mp.ceil(length)))
                tot += _gl_segment(f, c0, c1, panels, nodes, weights)
            return tot / (2j * mp.pi)

        I1 = integrate(contour.samples_per_unit)
        I2 = integrate(2 * contour.samples_per_unit)
        pref = mp.factorial(N - 1) / (xv - 1) ** (N - 1)
        val = pref * I2
        err = abs(pref * (I2 - I1))
        if not mp.isfinite(abs(val)):
            raise QuadratureError("non-finite samples")
        if isinstance(val, mp.mpc) and not isinstance(xv, mp.mpc):
            val = val.real
        return val, err


def _gl_nodes(n, prec):
    # double-precision nodes bound the quadrature near 1e-16 relative, far below the 1e-8 target
    t, w = np.polynomial.legendre.leggauss(n)
    return [(mp.mpf(float(a)), mp.mpf(float(b))) for a, b in zip(t, w)]
