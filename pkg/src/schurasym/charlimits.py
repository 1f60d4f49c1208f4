"""Limits of normalized Schur functions: extreme characters of U(infinity) and q-analogues.

F_nu is evaluated from its residue series

    F_nu(x) = (q;q)_inf / (qx;q)_inf * sum_k x^{e_k} / prod_{j != k} (1 - q^{e_j - e_k}),

with e_k = nu_k + k - 1.  ``nu`` is given by a finite prefix and is
continued by its last entry.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

import mpmath as mp

from .errors import ArgumentError, DomainError, PoleError, TruncationError
from .linalg import det, vandermonde
from .scalars import is_exact, to_mp
from .signatures import Signature, as_signature, frobenius_pairs


@dataclass(frozen=True)
class FrobeniusPair:
    p: tuple
    q: tuple
    d: int


def frobenius_coords(partition) -> FrobeniusPair:
    """Modified Frobenius coordinates p_i = mu_i - i + 1/2, q_i = mu'_i - i + 1/2."""
    parts = list(as_signature(partition).parts) if not isinstance(partition, (list, tuple)) else list(partition)
    if any(p < 0 for p in parts):
        raise ArgumentError("partition parts must be nonnegative")
    p, q, d = frobenius_pairs(parts)
    return FrobeniusPair(tuple(p), tuple(q), d)


def _plus_minus(lam: Signature):
    plus = [p for p in lam.parts if p > 0]
    minus = sorted((-p for p in lam.parts if p < 0), reverse=True)
    return frobenius_coords(plus), frobenius_coords(minus)


@dataclass(frozen=True)
class VoiculescuParam:
    alpha_plus: tuple = ()
    alpha_minus: tuple = ()
    beta_plus: tuple = ()
    beta_minus: tuple = ()
    delta_plus: object = 0
    delta_minus: object = 0

    def __post_init__(self):
        for name in ("alpha_plus", "alpha_minus", "beta_plus", "beta_minus"):
            seq = tuple(getattr(self, name))
            object.__setattr__(self, name, seq)
            if any(v < 0 for v in seq) or any(a < b for a, b in zip(seq, seq[1:])):
                raise ArgumentError(f"{name} must be nonnegative and weakly decreasing")
        if self.gamma_plus < 0 or self.gamma_minus < 0:
            raise ArgumentError("sum of alpha and beta exceeds delta")
        b1 = (self.beta_plus[0] if self.beta_plus else 0) + (self.beta_minus[0] if self.beta_minus else 0)
        if b1 > 1:
            raise ArgumentError("beta_1^+ + beta_1^- must not exceed 1")

    @property
    def gamma_plus(self):
        return self.delta_plus - sum(self.alpha_plus) - sum(self.beta_plus)

    @property
    def gamma_minus(self):
        return self.delta_minus - sum(self.alpha_minus) - sum(self.beta_minus)


def voiculescu_phi(omega: VoiculescuParam, x):
    """Extreme character of U(infinity) at a single eigenvalue x (finitely many parameters)."""
    if x == 0:
        raise DomainError("x = 0 is excluded")
    exact = is_exact(x) and all(is_exact(v) for v in (omega.gamma_plus, omega.gamma_minus))
    u, ui = x - 1, 1 / x - 1
    out = Fraction(1) if exact else mp.mpf(1)
    for a in omega.alpha_plus:
        if 1 - a * u == 0:
            raise PoleError("x is a pole 1 + 1/alpha^+")
        out = out / (1 - a * u)
    for a in omega.alpha_minus:
        if 1 - a * ui == 0:
            raise PoleError("1/x is a pole 1 + 1/alpha^-")
        out = out / (1 - a * ui)
    for b in omega.beta_plus:
        out = out * (1 + b * u)
    for b in omega.beta_minus:
        out = out * (1 + b * ui)
    gp, gm = omega.gamma_plus, omega.gamma_minus
    if gp != 0 or gm != 0:
        conv = (lambda v: to_mp(v) if is_exact(v) else v)
        out = conv(out) * mp.exp(conv(gp) * conv(u) + conv(gm) * conv(ui))
    return out


def phi_finite_N(lam, N: int, w):
    """Frobenius-coordinate product equal to prod_j (w - 1 + (j - lambda_j)/N) / (w - 1 + j/N).

    The variable enters shifted by 1 so that the value coincides with
    exp(q_factor(zero profile, lambda, N, w)).
    """
    lam = as_signature(lam)
    if lam.N != N:
        raise ArgumentError("len(lambda) must equal N")
    if is_exact(w):
        w = Fraction(w)
    s = (w - 1) * N
    fp, fm = _plus_minus(lam)
    half = Fraction(1, 2)
    out = 1
    for p, q in zip(fp.p, fp.q):
        den = s + half + q
        if den == 0:
            raise PoleError("w hits a pole of the finite-N product")
        out = out * (s + half - p) / den
    for p, q in zip(fm.p, fm.q):
        den = s + half + N - q
        if den == 0:
            raise PoleError("w hits a pole of the finite-N product")
        out = out * (s + half + N + p) / den
    return out


def shifted_product(lam, N: int, w):
    """prod_j (w - 1 + (j - lambda_j)/N) / (w - 1 + j/N), computed term by term."""
    lam = as_signature(lam)
    if is_exact(w):
        w = Fraction(w)
    out = 1
    for j in range(1, N + 1):
        out = out * (w - 1 + Fraction(j - lam[j - 1], N)) / (w - 1 + Fraction(j, N))
    return out


# q-characters

def qpoch_inf(a, q, prec_bits=None):
    """(a; q)_inf together with a bound on the dropped tail factor."""
    prec_bits = prec_bits or mp.mp.prec
    a = to_mp(a) if is_exact(a) else a
    q = to_mp(q) if is_exact(q) else q
    eps = mp.mpf(2) ** (-prec_bits)
    out = mp.mpf(1)
    term = a
    n = 0
    while abs(term) > eps or n < 4:
        out *= 1 - term
        term *= q
        n += 1
        if n > 100000:
            raise TruncationError("q-Pochhammer did not converge")
    # |prod_{i>=n}(1 - a q^i) - 1| <= 2 |a q^n| / (1 - q) once that is small
    return out, 2 * abs(term) / (1 - abs(q))


def _nu_exponents(nu: Sequence[int], K: int):
    nu = list(nu)
    if not nu:
        nu = [0]
    if any(a > b for a, b in zip(nu, nu[1:])):
        raise ArgumentError("nu must be weakly increasing")
    full = nu + [nu[-1]] * max(0, K - len(nu))
    return [full[k] + k for k in range(K)]


def _term_denominator(e, k, q, P):
    """prod_{j != k} (1 - q^{e_j - e_k}) over all j >= 1 (0-based k); e known up to P terms."""
    out = mp.mpf(1)
    for j in range(len(e)):
        if j != k:
            out *= 1 - q ** (e[j] - e[k])
    # j beyond len(e): e_j = c + j, so the factors form (q^{e_{len} - e_k}; q)_inf
    tail, _ = qpoch_inf(q ** (e[-1] + 1 - e[k]), q)
    return out * tail


def fnu_sum(nu, x, truncation: int = 0, q=Fraction(1, 2), tol=None):
    """sum_k x^{e_k} / prod_{j != k}(1 - q^{e_j - e_k}) with a certified tail bound.

    Returns (value, tail_bound).  The truncation grows automatically until the
    bound on the dropped terms is below ``tol`` (default 2^-(prec-8)) unless
    ``truncation`` is given, in which case an insufficient truncation raises.
    """
    q = to_mp(q) if is_exact(q) else mp.mpf(q)
    if not 0 < q < 1:
        raise ArgumentError("q must lie in (0, 1)")
    x = to_mp(x) if is_exact(x) else mp.mpmathify(x)
    if x == 0:
        raise DomainError("x = 0 is excluded")
    tol = tol if tol is not None else mp.mpf(2) ** (-(mp.mp.prec - 8))
    qq, _ = qpoch_inf(q, q)
    fixed = truncation > 0
    K = max(truncation, len(list(nu)) + 2, 8)
    while True:
        e = _nu_exponents(nu, K + 1)
        tot = 0
        for k in range(K):
            tot += x ** e[k] / _term_denominator(e, k, q, K)
        bound = _tail_bound(e, K, x, q, qq)
        if bound <= tol or fixed:
            if fixed and bound > tol:
                raise TruncationError(f"tail bound {mp.nstr(bound, 5)} exceeds tolerance at truncation {K}")
            return tot, bound
        K *= 2


def _tail_bound(e, K, x, q, qq):
    """Bound on sum_{k >= K} |t_k| with |t_k| <= |x|^{e_k} q^{sum_{j<k}(e_k - e_j)} / (q;q)_inf^2."""
    ax = abs(x)
    s = sum(e[K] - e[j] for j in range(K))
    b = ax ** e[K] * q ** s / qq ** 2
    # consecutive bounds shrink by |x| q^{k} once nu is constant; sum as a geometric series
    r = ax * q ** K
    if r >= mp.mpf(1) / 2:
        return mp.inf
    return b / (1 - r)


def fnu(nu, x, truncation: int = 0, q=Fraction(1, 2), tol=None):
    """F_nu(x): limit of s_lambda(x, q^-1, ..., q^{1-N}) / s_lambda(1, q^-1, ..., q^{1-N}).

    Returns (value, tail_bound).  At x = q^{-i}, i >= 1, the prefactor has a
    pole while the series vanishes; use ``fnu_sum`` there.
    """
    qm = to_mp(q) if is_exact(q) else mp.mpf(q)
    xm = to_mp(x) if is_exact(x) else mp.mpmathify(x)
    xq, _ = qpoch_inf(qm * xm, qm)
    if xq == 0 or _hits_inverse_power(xm, qm):
        raise PoleError("x = q^{-i}: the prefactor is singular (the series itself vanishes)")
    qq, _ = qpoch_inf(qm, qm)
    s, bound = fnu_sum(nu, xm, truncation, q, tol)
    pref = qq / xq
    return pref * s, abs(pref) * bound


def _hits_inverse_power(x, q):
    if mp.im(x) != 0 or mp.re(x) <= 1:
        return False
    i = mp.nint(-mp.log(mp.re(x)) / mp.log(q))
    return i >= 1 and abs(x - q ** (-i)) <= mp.mpf(2) ** (-(mp.mp.prec - 16)) * abs(x)


def fnu_multivar(nu, xs, q=Fraction(1, 2), truncation: int = 0, tol=None):
    """k-variable limit q^{-2 C(k+1,3)} (1-q)^{C(k,2)} / (Delta(x) prod_i (x_i q^k; q)_inf)
    * det[(D_{q^-1}^{j-1} G)(x_i)], with G(x) = F_nu(x q^{k-1}) (x q^k; q)_inf.

    G equals (q;q)_inf times the F_nu series at x q^{k-1}, so no pole is met;
    D_{q^-1} g(x) = (g(x/q) - g(x)) / (1/q - 1).
    """
    qm = to_mp(q) if is_exact(q) else mp.mpf(q)
    xs = [to_mp(x) if is_exact(x) else mp.mpmathify(x) for x in xs]
    k = len(xs)
    if k == 0:
        return mp.mpf(1)
    for i in range(k):
        if xs[i] == 0:
            raise DomainError("x = 0 is excluded")
        for j in range(i + 1, k):
            if xs[i] == xs[j]:
                raise ArgumentError("variables must be distinct")
    qq, _ = qpoch_inf(qm, qm)
    c = 1 / (1 / qm - 1)
    M = []
    for x in xs:
        g = [fnu_sum(nu, x * qm ** (k - 1 - m), truncation, q, tol)[0] for m in range(k)]
        row = []
        for j in range(k):
            row.append(c ** j * sum(comb(j, m) * (-1) ** (j - m) * g[m] for m in range(j + 1)))
        M.append(row)
    den = vandermonde(xs)
    for x in xs:
        pq, _ = qpoch_inf(x * qm ** k, qm)
        den *= pq
    if den == 0:
        raise PoleError("x_i q^k = q^{-m}: the prefactor is singular")
    return qm ** (-2 * comb(k + 1, 3)) * (1 - qm) ** comb(k, 2) * qq ** k * det(M) / den


def nu_from_signature(lam) -> list:
    """nu_j = lambda_{N-j+1} (the bottom of the signature, read upward)."""
    lam = as_signature(lam)
    return list(reversed(lam.parts))


def q_prelimit(lam, xs, q=Fraction(1, 2)):
    """s_lambda(x_1..x_k, q^-k, ..., q^{1-N}) / s_lambda(1, q^-1, ..., q^{1-N}), exact for rational input."""
    from .multivar import multivar_det_eval
    from .residues import residue_eval
    lam = as_signature(lam)
    k = len(xs)
    Q = 1 / Fraction(q) if is_exact(q) else 1 / q
    qq = Fraction(q) if is_exact(q) else q
    ys = [qq ** k * (Fraction(x) if is_exact(x) else x) for x in xs]
    if k == 1:
        val = residue_eval("schur_q", lam, lam.N, {"q": Q}, ys[0])
    else:
        val = multivar_det_eval("schur_q", lam, ys, lam.N, {"q": Q})
    return val * qq ** (-k * lam.size)


# Voiculescu families and their convergence ladders

VK_POINTS = (Fraction(3, 4), Fraction(5, 4), Fraction(9, 10), "e^{i pi/8}", "e^{i pi/2}", "e^{7 i pi/8}")


def _vk_point(p):
    if isinstance(p, str):
        k = {"e^{i pi/8}": 1, "e^{i pi/2}": 4, "e^{7 i pi/8}": 7}[p]
        return mp.expjpi(mp.mpf(k) / 8)
    return to_mp(p)


def voiculescu_family(name: str):
    """(N -> signature, limiting parameter) for the single-alpha, single-beta and single-gamma families."""
    from math import isqrt
    half = Fraction(1, 2)
    if name == "alpha":
        return (lambda N: Signature([N // 2] + [0] * (N - 1)),
                VoiculescuParam(alpha_plus=(half,), delta_plus=half))
    if name == "beta":
        return (lambda N: Signature([1] * (N // 2) + [0] * (N - N // 2)),
                VoiculescuParam(beta_plus=(half,), delta_plus=half))
    if name == "gamma":
        def gen(N):
            d = isqrt(N)
            return Signature([d] * d + [0] * (N - d))
        return gen, VoiculescuParam(delta_plus=Fraction(1))
    raise ArgumentError(f"unknown family {name!r}")


def voiculescu_error(name: str, N: int, points=VK_POINTS, omega=None):
    """max over points of |S_lambda(N)(x; N, 1) - Phi(omega; x)|."""
    from .residues import schur1_mp
    gen, om = voiculescu_family(name)
    om = om if omega is None else omega
    lam = gen(N)
    worst = mp.mpf(0)
    with mp.workprec(N * 8 + 200):
        for p in points:
            val, _, _ = schur1_mp(lam, lambda prec, p=p: _vk_point(p))
            worst = max(worst, abs(val - voiculescu_phi(om, _vk_point(p))))
    return worst


def voiculescu_ladder(name: str, Ns=(50, 100, 200, 400), points=VK_POINTS, finite_gamma=False):
    """[(N, error)]; ``finite_gamma`` compares the gamma family with delta_plus = |lambda(N)|/N."""
    gen, om = voiculescu_family(name)
    out = []
    for N in Ns:
        omega = None
        if finite_gamma:
            if name != "gamma":
                raise ArgumentError("finite_gamma applies to the gamma family")
            omega = VoiculescuParam(delta_plus=Fraction(gen(N).size, N))
        out.append((N, float(voiculescu_error(name, N, points, omega))))
    return out
