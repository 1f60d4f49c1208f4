"""Uniformly random lozenge tilings of Omega_lambda as Gelfand-Tsetlin patterns.

A pattern is a chain of interlacing signatures rows[1] < rows[2] < ... < rows[N] = lambda.
Uniform patterns satisfy Prob(row k = mu | row k+1 = kappa) = s_mu(1^k) / s_kappa(1^{k+1}),
and the row-k marginal is s_eta(1^k) s_{lambda/eta}(1^{N-k}) / s_lambda(1^N).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Sequence

import mpmath as mp
import numpy as np

from .asymptotics import Profile, SignatureFamily
from .errors import ArgumentError, CapacityError, DegenerateProfileError
from .linalg import bareiss_int, vandermonde
from .signatures import Signature, as_signature, interlacing_below
from .symfunc import normalized_character, weyl_dim

CANDIDATE_CAP = 10 ** 6


@dataclass(frozen=True)
class GTPattern:
    rows: tuple  # rows[k-1] has length k

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for k, r in enumerate(rows, start=1):
            if len(r) != k:
                raise ArgumentError(f"row {k} has length {len(r)}")
        for k in range(1, len(rows)):
            mu, kappa = rows[k - 1], rows[k]
            if not all(kappa[i + 1] <= mu[i] <= kappa[i] for i in range(k)):
                raise ArgumentError(f"rows {k} and {k + 1} do not interlace")

    @property
    def top(self) -> Signature:
        return Signature(self.rows[-1])


@dataclass
class SampleBatch:
    patterns: list
    seed: int
    method: str
    levels: tuple = ()  # rows present when only the bottom rows were sampled

    def to_csv_rows(self):
        """(sample, k, position...) rows, one per sampled level."""
        out = []
        for s, p in enumerate(self.patterns):
            for r in (p.rows if isinstance(p, GTPattern) else p):
                out.append([s, len(r), *r])
        return out


def _interval_bounds(kappa):
    return [(kappa[i + 1], kappa[i]) for i in range(len(kappa) - 1)]


def count_candidates(kappa) -> int:
    return prod(hi - lo + 1 for lo, hi in _interval_bounds(kappa))


def gt_count(mu, lam) -> int:
    """Number of interlacing chains from mu (length L) up to lambda (length K >= L)."""
    lam = tuple(as_signature(lam).parts)
    mu = tuple(mu.parts) if isinstance(mu, Signature) else tuple(mu)
    K, L = len(lam), len(mu)
    if L > K:
        raise ArgumentError("len(mu) must not exceed len(lambda)")
    if L == K:
        return int(mu == lam)
    level = {lam: 1}
    for m in range(K - 1, L - 1, -1):
        nxt = {}
        for kappa, c in level.items():
            for z in interlacing_below(kappa):
                if L and not all(z[i] >= mu[i] and z[i + m - L] <= mu[i] for i in range(L)):
                    continue
                nxt[z] = nxt.get(z, 0) + c
        level = nxt
    return level.get(mu, 0) if L else sum(level.values())


def _h_ones(r, M):
    """Complete homogeneous h_r(1^M)."""
    if r < 0:
        return 0
    if M == 0:
        return int(r == 0)
    return comb(r + M - 1, M - 1)


def skew_dim(lam, eta, M) -> int:
    """s_{lambda/eta}(1^M) by Jacobi-Trudi; eta is padded with lambda_N-shifted zeros."""
    lam = list(as_signature(lam).parts)
    N = len(lam)
    eta = list(eta)
    if len(eta) > N:
        raise ArgumentError("eta longer than lambda")
    sh = lam[-1]
    if eta and min(eta) < sh:
        return 0
    L = [l - sh for l in lam]
    E = [e - sh for e in eta] + [0] * (N - len(eta))
    return bareiss_int([[_h_ones(L[i] - E[j] - i + j, M) for j in range(N)] for i in range(N)])


def row_law(lam, k: int) -> dict:
    """Exact law of row k: eta -> s_eta(1^k) s_{lambda/eta}(1^{N-k}) / s_lambda(1^N)."""
    lam = as_signature(lam)
    N = lam.N
    if not 1 <= k <= N:
        raise ArgumentError("need 1 <= k <= N")
    total = weyl_dim(lam)
    bounds = [(lam[N - k + i], lam[i]) for i in range(k)]
    law = {}

    def rec(prefix):
        i = len(prefix)
        if i == k:
            w = weyl_dim(Signature(prefix)) * skew_dim(lam, prefix, N - k)
            if w:
                law[tuple(prefix)] = w / total
            return
        lo, hi = bounds[i]
        if prefix:
            hi = min(hi, prefix[-1])
        for v in range(hi, lo - 1, -1):
            rec(prefix + [v])

    rec([])
    return law


def _draw(rng, weights):
    w = np.asarray([float(x) for x in weights], dtype=float)
    c = np.cumsum(w)
    return int(np.searchsorted(c, rng.random() * c[-1], side="right"))


def _sample_below(rng, kappa, k):
    """Row k (length k) given row k+1 = kappa, with weights s_mu(1^k)."""
    n = count_candidates(kappa)
    if n > CANDIDATE_CAP:
        raise CapacityError(f"{n} interlacing candidates exceed the cap; use method='mcmc'")
    cands = list(interlacing_below(kappa))
    if len(cands) == 1:
        return cands[0]
    return cands[_draw(rng, [weyl_dim(Signature(c)) if c else 1 for c in cands])]


def sample_tiling(lam, count: int, seed: int = 0, method: str = "exact", sweeps: int | None = None) -> SampleBatch:
    """Uniform GT patterns with top row lambda (exact top-down, or Glauber MCMC)."""
    lam = as_signature(lam)
    N = lam.N
    rng = np.random.default_rng(seed)
    pats = []
    if method == "exact":
        for _ in range(count):
            rows = [tuple(lam.parts)]
            for k in range(N - 1, 0, -1):
                rows.append(_sample_below(rng, rows[-1], k))
            pats.append(GTPattern(tuple(reversed(rows))))
        return SampleBatch(pats, seed, "exact")
    if method == "mcmc":
        sweeps = sweeps if sweeps is not None else 100 * N * N
        state = [list(lam.parts[:k]) for k in range(1, N + 1)]
        _glauber(rng, state, sweeps)
        for _ in range(count):
            _glauber(rng, state, max(1, N))
            pats.append(GTPattern(tuple(tuple(r) for r in state)))
        return SampleBatch(pats, seed, f"mcmc({sweeps})")
    raise ArgumentError(f"unknown method {method!r}")


def _glauber(rng, state, sweeps):
    """Heat-bath updates of single entries; uniform on the interlacing-allowed range."""
    N = len(state)
    for _ in range(sweeps):
        for k in range(N - 1):
            row, up = state[k], state[k + 1]
            down = state[k - 1] if k > 0 else None
            for i in range(k + 1):
                lo, hi = up[i + 1], up[i]
                if down is not None:
                    if i < k:
                        lo = max(lo, down[i])
                    if i > 0:
                        hi = min(hi, down[i - 1])
                row[i] = int(rng.integers(lo, hi + 1))


def sample_rows(lam, k: int, count: int, seed: int = 0) -> SampleBatch:
    """Exact samples of rows 1..k only: row k from its exact law, lower rows top-down."""
    lam = as_signature(lam)
    law = row_law(lam, k)
    keys = list(law)
    probs = np.asarray([float(law[e]) for e in keys])
    probs /= probs.sum()
    rng = np.random.default_rng(seed)
    idx = rng.choice(len(keys), size=count, p=probs)
    pats = []
    for j in idx:
        rows = [keys[j]]
        for m in range(k - 1, 0, -1):
            rows.append(_sample_below(rng, rows[-1], m))
        pats.append(tuple(reversed(rows)))
    return SampleBatch(pats, seed, "exact-marginal", tuple(range(1, k + 1)))


def bessel_B(xs, ys):
    """det[exp(x_i y_j)] / (Delta(x) Delta(y)) * prod_{i<j} (j - i)."""
    k = len(xs)
    if len(ys) != k:
        raise ArgumentError("x and y must have equal length")
    xs = [mp.mpmathify(x) for x in xs]
    ys = [mp.mpmathify(y) for y in ys]
    if k == 1:
        return mp.exp(xs[0] * ys[0])
    M = mp.matrix([[mp.exp(x * y) for y in ys] for x in xs])
    c = prod(j - i for i in range(k) for j in range(i + 1, k))
    return mp.det(M) / (vandermonde(xs) * vandermonde(ys)) * c


def bessel_mgf(lam, xs, k: int | None = None):
    """(E B_k(x; Upsilon^k + delta_k) by exact enumeration, S_lambda(e^x, 1^{N-k}) prod (e^xi - e^xj)/(xi - xj))."""
    lam = as_signature(lam)
    k = len(xs) if k is None else k
    if len(xs) != k:
        raise ArgumentError("need k variables")
    if weyl_dim(lam) > CANDIDATE_CAP:
        raise CapacityError("too many patterns for exact enumeration")
    xs = [mp.mpmathify(x) for x in xs]
    lhs = 0
    for eta, p in row_law(lam, k).items():
        y = [eta[i] + k - 1 - i for i in range(k)]
        lhs += mp.mpf(p.numerator) / p.denominator * bessel_B(xs, y)
    ex = [mp.exp(x) for x in xs]
    rhs = normalized_character("schur", lam, ex)
    for i in range(k):
        for j in range(i + 1, k):
            rhs *= (ex[i] - ex[j]) / (xs[i] - xs[j])
    return lhs, rhs


GUE_TARGETS = {
    1: {"mean": [0.0], "var": [1.0], "cov": None},
    2: {"mean": [2 / math.sqrt(math.pi), -2 / math.sqrt(math.pi)],
        "var": [2 - 4 / math.pi, 2 - 4 / math.pi], "cov": 4 / math.pi - 1},
}

MGF_GRID = {
    1: [(-0.5,), (-0.25,), (0.25,), (0.5,)],
    2: [(0.5, -0.25), (0.25, 0.4), (-0.3, 0.2), (0.45, -0.45)],
}


def _rescale(rows_k, k, N, E, S):
    """(nu - N E)/sqrt(N S), nu_i = kappa_i + (k+1)/2 - i (delta_k shift, centred)."""
    a = np.asarray(rows_k, dtype=float)
    shift = np.asarray([(k + 1) / 2 - i for i in range(1, k + 1)])
    return (a + shift - N * E) / math.sqrt(N * S)


def _moments_report(Z, weights=None):
    n = Z.shape[0]
    if weights is None:
        mean = Z.mean(axis=0)
        C = np.cov(Z.T, bias=True).reshape(Z.shape[1], Z.shape[1])
        d = Z - mean
        se_mean = np.sqrt(np.diag(C) / n)
        se_var = np.sqrt(((d ** 2 - np.diag(C)) ** 2).mean(axis=0) / n)
        cov_se = None
        if Z.shape[1] > 1:
            prodc = d[:, 0] * d[:, 1]
            cov_se = float(np.sqrt(((prodc - C[0, 1]) ** 2).mean() / n))
        return mean, C, se_mean, se_var, cov_se
    w = np.asarray(weights, dtype=float)
    w = w / w.sum()
    mean = (w[:, None] * Z).sum(axis=0)
    d = Z - mean
    C = (w[:, None, None] * d[:, :, None] * d[:, None, :]).sum(axis=0)
    return mean, C, None, None, None


def gue_corners_test(family, N: int, k: int, samples: int, seed: int = 0, sigmas: float = 3.0) -> dict:
    """Rescaled row-k statistics of exact samples against the GUE corners targets."""
    if isinstance(family, Profile):
        family = SignatureFamily.corrected(family)
    f = family.profile
    E, S = f.E(), f.S()
    if S == 0:
        raise DegenerateProfileError("S(f) = 0 for a constant profile")
    E, S = float(E), float(S)
    lam = family(N)
    batch = sample_rows(lam, k, samples, seed)
    Z = _rescale([p[k - 1] for p in batch.patterns], k, N, E, S)
    mean, C, se_mean, se_var, cov_se = _moments_report(Z)
    tgt = GUE_TARGETS.get(k)
    checks = []
    if tgt is not None:
        for i in range(k):
            checks.append(("mean", i, float(mean[i]), tgt["mean"][i], float(se_mean[i])))
            checks.append(("var", i, float(C[i, i]), tgt["var"][i], float(se_var[i])))
        if k == 2:
            checks.append(("cov", 0, float(C[0, 1]), tgt["cov"], cov_se))
    mgf = []
    for x in MGF_GRID.get(k, []):
        vals = np.asarray([float(mp.re(bessel_B(x, z))) for z in Z])
        target = math.exp(0.5 * sum(v * v for v in x))
        mgf.append(("mgf", x, float(vals.mean()), target, float(vals.std() / math.sqrt(samples))))
    rows = []
    ok = True
    for name, idx, val, target, se in checks + mgf:
        dev = abs(val - target) / se if se else float("inf")
        good = dev <= sigmas
        ok = ok and good
        rows.append({"stat": name, "index": idx, "value": val, "target": target, "se": se,
                     "sigmas": dev, "pass": good})
    return {"N": N, "k": k, "samples": samples, "seed": seed, "method": batch.method,
            "E": E, "S": S, "checks": rows, "pass": ok}


def exact_row_moments(lam, k: int, E, S) -> dict:
    """Mean and covariance of the rescaled row-k statistic under the exact law (no sampling)."""
    lam = as_signature(lam)
    N = lam.N
    law = row_law(lam, k)
    keys = list(law)
    Z = _rescale(keys, k, N, float(E), float(S))
    mean, C, *_ = _moments_report(Z, [law[e] for e in keys])
    return {"mean": mean.tolist(), "cov": C.tolist()}
