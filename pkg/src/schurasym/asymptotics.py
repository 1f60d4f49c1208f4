"""Steepest-descent predictions for single-variable normalized Schur functions.

Profiles are continuous, piecewise-linear and weakly decreasing on [0, 1].
With g(t) = w - f(t) - 1 + t (strictly increasing in t) we use

    F(w; f) = int_0^1 ln g(t) dt,

whose w-derivatives all have per-segment closed forms.  The support of the
integrand's singularities is the real interval [f(1), f(0) + 1].
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import mpmath as mp

from .errors import (ArgumentError, BranchError, ConvergenceError, DegenerateProfileError,
                     DomainError)
from .scalars import is_exact, to_mp
from .signatures import Signature, as_signature


@dataclass(frozen=True)
class Profile:
    """Piecewise-linear f given by breakpoints (t_i, f(t_i)), t_0 = 0 < ... < t_m = 1."""

    breakpoints: tuple
    name: str = "custom"

    def __post_init__(self):
        pts = tuple((Fraction(t) if isinstance(t, (int, str)) else t,
                     Fraction(v) if isinstance(v, (int, str)) else v) for t, v in self.breakpoints)
        object.__setattr__(self, "breakpoints", pts)
        if len(pts) < 2 or pts[0][0] != 0 or pts[-1][0] != 1:
            raise ArgumentError("breakpoints must start at t = 0 and end at t = 1")
        for (t0, v0), (t1, v1) in zip(pts, pts[1:]):
            if not t1 > t0:
                raise ArgumentError("breakpoint abscissae must increase")
            if v1 > v0:
                raise ArgumentError("profile must be weakly decreasing")

    @classmethod
    def zero(cls):
        return cls(((0, 0), (1, 0)), "zero")

    @classmethod
    def linear(cls, alpha):
        """f(t) = alpha (1 - t)."""
        return cls(((0, alpha), (1, 0)), f"linear({alpha})")

    @classmethod
    def halfstair(cls):
        """f(t) = (1 - t)/2, the limit shape of the ASM staircase."""
        return cls(((0, Fraction(1, 2)), (1, 0)), "halfstair")

    @classmethod
    def dense_loop(cls):
        """f(t) = 1/4 - t/2: the half staircase after the shift used for the loop model."""
        return cls(((0, Fraction(1, 4)), (1, Fraction(-1, 4))), "dense_loop")

    @classmethod
    def preset(cls, text: str) -> "Profile":
        """Parse 'zero', 'halfstair', 'dense_loop', 'linear(a)' or 't:f;t:f;...'."""
        text = text.strip()
        if text in ("zero", "halfstair", "dense_loop"):
            return getattr(cls, text)()
        if text.startswith("linear(") and text.endswith(")"):
            return cls.linear(Fraction(text[7:-1]))
        try:
            pts = [tuple(Fraction(v) for v in item.split(":")) for item in text.split(";")]
        except (ValueError, ZeroDivisionError) as exc:
            raise ArgumentError(f"cannot parse profile {text!r}") from exc
        return cls(tuple(pts), "custom")

    def __call__(self, t):
        pts = self.breakpoints
        if t < 0 or t > 1:
            raise DomainError("profile evaluated outside [0, 1]")
        for (t0, v0), (t1, v1) in zip(pts, pts[1:]):
            if t <= t1:
                return v0 + (v1 - v0) * (t - t0) / (t1 - t0)
        return pts[-1][1]

    def segments(self):
        """(t0, t1, f(t0), f(t1)) for each linear piece."""
        pts = self.breakpoints
        return [(t0, t1, v0, v1) for (t0, v0), (t1, v1) in zip(pts, pts[1:])]

    def support(self):
        """The real interval [f(1), f(0) + 1] where g vanishes for some t."""
        return self.breakpoints[-1][1], self.breakpoints[0][1] + 1

    def integral(self, h: Callable[[object, object], object]):
        """int_0^1 h(t, f(t)) dt for h polynomial of degree <= 3 in t (Simpson per segment)."""
        tot = 0
        for t0, t1, v0, v1 in self.segments():
            tm = (t0 + t1) / 2
            vm = (v0 + v1) / 2
            tot = tot + (t1 - t0) * (h(t0, v0) + 4 * h(tm, vm) + h(t1, v1)) / 6
        return tot

    def E(self):
        return self.integral(lambda t, v: v)

    def S(self):
        E = self.E()
        return self.integral(lambda t, v: v * v) - E * E + self.integral(lambda t, v: v * (1 - 2 * t))

    def cumulative(self, t):
        """int_0^t f."""
        tot = 0
        for t0, t1, v0, v1 in self.segments():
            if t <= t0:
                break
            b = min(t, t1)
            vb = v0 + (v1 - v0) * (b - t0) / (t1 - t0)
            tot = tot + (b - t0) * (v0 + vb) / 2
        return tot


def _w_outside(f: Profile, w):
    lo, hi = f.support()
    w = to_mp(w) if is_exact(w) else mp.mpmathify(w)
    if mp.im(w) == 0 and to_mp(lo) <= mp.re(w) <= to_mp(hi):
        raise BranchError(f"w = {w} lies in the support interval [{lo}, {hi}]")
    return w


def profile_F(f: Profile, w, order: int = 0):
    """F(w; f) or its w-derivative of the given order (0..3), principal logs."""
    if order not in (0, 1, 2, 3):
        raise ArgumentError("order must be 0, 1, 2 or 3")
    w = _w_outside(f, w)
    tot = 0
    for t0, t1, v0, v1 in f.segments():
        slope = 1 - (to_mp(v1) - to_mp(v0)) / (to_mp(t1) - to_mp(t0))
        g0 = w - to_mp(v0) - 1 + to_mp(t0)
        g1 = w - to_mp(v1) - 1 + to_mp(t1)
        if order == 0:
            prim = lambda g: g * mp.log(g) - g
        elif order == 1:
            prim = mp.log
        elif order == 2:
            prim = lambda g: 1 / g
        else:
            prim = lambda g: -1 / g ** 2
        tot += (prim(g1) - prim(g0)) / slope
    return tot


def critical_point(f: Profile, y, tol_bits=None, maxiter=200):
    """Root w_0 of F'(w; f) = y on the real branch (real y) or by Newton continuation (complex y)."""
    y = mp.mpmathify(to_mp(y) if is_exact(y) else y)
    if y == 0:
        raise DomainError("y = 0 has no critical point")
    tol = mp.mpf(2) ** (-(tol_bits or mp.mp.prec - 8))
    if mp.im(y) != 0:
        w = critical_point(f, mp.re(y), tol_bits, maxiter)
        trace = []
        steps = 16
        for s in range(1, steps + 1):
            ys = mp.re(y) + mp.mpc(0, 1) * mp.im(y) * s / steps
            w = _newton(f, ys, w, tol, maxiter, trace)
        return w
    lo, hi = (to_mp(v) for v in f.support())
    g = lambda w: profile_F(f, w, 1) - y
    if y > 0:
        a = hi + mp.mpf(2) ** (-20)
        while mp.re(g(a)) < 0:
            a = hi + (a - hi) / 2 ** 8
        b = hi + 1
        while mp.re(g(b)) > 0:
            b = hi + 2 * (b - hi)
    else:
        b = lo - mp.mpf(2) ** (-20)
        while mp.re(g(b)) > 0:
            b = lo - (lo - b) / 2 ** 8
        a = lo - 1
        while mp.re(g(a)) < 0:
            a = lo - 2 * (lo - a)
    # F' is decreasing on each real branch: g(a) > 0 > g(b) ordered by sign of y
    for _ in range(60):
        m = (a + b) / 2
        if (mp.re(g(m)) > 0) == (mp.re(g(a)) > 0):
            a = m
        else:
            b = m
    return mp.re(_newton(f, y, (a + b) / 2, tol, maxiter, []))


def _newton(f, y, w, tol, maxiter, trace):
    for _ in range(maxiter):
        r = profile_F(f, w, 1) - y
        trace.append((w, r))
        if abs(r) <= tol:
            return w
        w = w - r / profile_F(f, w, 2)
    raise ConvergenceError("Newton iteration for the critical point did not converge", trace[-10:])


def first_order_limit(f: Profile, y):
    """y w_0 - F(w_0) - 1 - ln(e^y - 1), reduced to the principal strip in its imaginary part."""
    y = mp.mpmathify(to_mp(y) if is_exact(y) else y)
    w0 = critical_point(f, y)
    v = y * w0 - profile_F(f, w0, 0) - 1 - mp.log(mp.exp(y) - 1)
    if mp.im(v) != 0:
        v = mp.re(v) + 1j * _wrap(mp.im(v))
        if mp.im(v) == 0:
            v = mp.re(v)
    return v


def _wrap(theta):
    two_pi = 2 * mp.pi
    t = theta - two_pi * mp.floor((theta + mp.pi) / two_pi)
    return t if abs(t) > mp.mpf(2) ** (-mp.mp.prec + 16) else mp.mpf(0)


def q_factor(f: Profile, lam, N: int, w):
    """sum_j ln(1 + (f(j/N) - lambda_j/N) / (w - f(j/N) - 1 + j/N))."""
    lam = as_signature(lam)
    if lam.N != N:
        raise ArgumentError("len(lambda) must equal N")
    w = mp.mpmathify(to_mp(w) if is_exact(w) else w)
    tot = 0
    for j in range(1, N + 1):
        fj = to_mp(f(Fraction(j, N)))
        den = w - fj - 1 + mp.mpf(j) / N
        if den == 0:
            raise BranchError("w hits the profile support")
        arg = 1 + (fj - mp.mpf(lam[j - 1]) / N) / den
        if arg == 0:
            raise BranchError("w hits the signature support")
        tot += mp.log(arg)
    return tot


def second_order_prediction(f: Profile, lam, N: int, y):
    """Leading asymptotic value of S_lambda(e^y; N, 1) from the saddle point w_0(y).

    The finite-N correction enters as exp(-Q(w_0)): with Q built from
    ln(1 + (f - lambda/N)/(w - f - 1 + t)) this is the ratio of the two
    Pochhammer-type products in the exact integrand.
    """
    y = mp.mpmathify(to_mp(y) if is_exact(y) else y)
    w0 = critical_point(f, y)
    F2 = profile_F(f, w0, 2)
    if F2 == 0:
        raise DegenerateProfileError("F''(w_0) = 0: degenerate saddle")
    f0, f1 = to_mp(f(0)), to_mp(f(1))
    amp = mp.sqrt(-(w0 - f0 - 1) / (F2 * (w0 - f1)))
    Q = q_factor(f, lam, N, w0)
    expo = N * (y * w0 - profile_F(f, w0, 0)) - N - (N - 1) * mp.log(mp.exp(y) - 1) - Q
    return amp * mp.exp(expo)


@dataclass(frozen=True)
class GUEPrediction:
    E: object
    S: object
    prediction: object


def gue_regime(f: Profile, h, N: int) -> GUEPrediction:
    """E(f), S(f) in closed form and exp(sqrt(N) E h + S h^2 / 2)."""
    if N < 1:
        raise ArgumentError("N must be positive")
    E, S = f.E(), f.S()
    h = mp.mpmathify(to_mp(h) if is_exact(h) else h)
    pred = mp.exp(mp.sqrt(N) * to_mp(E) * h + to_mp(S) * h * h / 2)
    return GUEPrediction(E, S, pred)


def floor_family(f: Profile, N: int) -> Signature:
    """lambda_i = floor(N f(i/N))."""
    import math
    return Signature(sorted((math.floor(N * f(Fraction(i, N))) for i in range(1, N + 1)), reverse=True))


def corrected_family(f: Profile, N: int) -> Signature:
    """Integer signature with lambda_i = round(C_i) - round(C_{i-1}), C_i = N^2 int_0^{i/N} f.

    Cumulative rounding keeps |sum_{j<=i} (lambda_j - N f)| bounded, so the
    signature tracks N f(t) in the integrated sense with O(1) error.
    """
    C = [N * N * f.cumulative(Fraction(i, N)) for i in range(N + 1)]
    r = [round(c) for c in C]
    return Signature(sorted((r[i] - r[i - 1] for i in range(1, N + 1)), reverse=True))


def profile_norms(lam, f: Profile):
    """(R_1, R_inf) of lambda against N f(i/N)."""
    lam = as_signature(lam)
    N = lam.N
    d = [abs(lam[i - 1] - N * f(Fraction(i, N))) for i in range(1, N + 1)]
    return sum(d), max(d) if d else 0


@dataclass
class SignatureFamily:
    """N -> Signature generator with the profile it approximates."""

    generator: Callable[[int], Signature]
    profile: Profile | None = None
    name: str = "family"

    def __call__(self, N: int) -> Signature:
        return self.generator(N)

    @classmethod
    def corrected(cls, f: Profile):
        return cls(lambda N: corrected_family(f, N), f, f"corrected[{f.name}]")

    @classmethod
    def floor(cls, f: Profile):
        return cls(lambda N: floor_family(f, N), f, f"floor[{f.name}]")
