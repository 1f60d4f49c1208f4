"""Multivariate normalized characters as determinants of operators.

Everything reduces to one mechanism: if u(x) = sum_l w_l g(x; mu_l) and the
g(.; m) are eigenfunctions of T with eigenvalue alpha(m), then
det[T_i^{j-1}] prod_i u(x_i) = det[(T^{j-1} u)(x_i)], and T^{j-1} u just
reweights w_l by alpha(mu_l)^{j-1}.  For the Schur and symplectic families u
is an exact Laurent polynomial; for Jacobi it is a sum of polynomials in x.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from .errors import ArgumentError, DegeneracyError, PoleError
from .laurent import LaurentPolynomial
from .linalg import det, vandermonde
from .scalars import Jet
from .residues import schur_laurent, _qfact, _qint
from .signatures import StrictSignature, as_signature
from .symfunc import _norm_scalar, jacobi_basis


@dataclass
class DeterminantalClassSpec:
    """Data (theta, g, alpha, beta, c, T) of a determinantal class of symmetric functions."""

    theta: Callable[[int], object]
    g: Callable[[object, int], object]
    alpha: Callable[[int], object]
    beta: Callable[[int], object]
    c: Callable[[int], object]
    T: Callable[[Callable], Callable] | None = None
    name: str = "custom"
    # Weyl denominator replacing the Vandermonde in the character (None: Vandermonde itself)
    weyl_denominator: Callable[[list], object] | None = None

    def check_eigen(self, ms: Sequence[int], xs: Sequence) -> bool:
        """T g(., m) == alpha(m) g(., m) at the given points (needs a literal T)."""
        if self.T is None:
            raise ArgumentError("no literal operator attached")
        for m in ms:
            Tg = self.T(lambda x, m=m: self.g(x, m))
            for x in xs:
                if Tg(x) != self.alpha(m) * self.g(x, m):
                    return False
        return True


def schur_class(q=1) -> DeterminantalClassSpec:
    if q == 1:
        def c(N):
            out = Fraction(1)
            for j in range(1, N):
                out /= factorial(j)
            return out

        return DeterminantalClassSpec(
            theta=lambda i: Fraction(1), g=lambda x, m: x ** m, alpha=lambda m: Fraction(m),
            beta=lambda m: Fraction(1), c=c, T=None, name="schur_1")
    q = _norm_scalar(q)

    def c(N):
        d = q ** 0
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                d = d * (q ** (i - 1) - q ** (j - 1))
        return (1 - q) ** (N * (N - 1) // 2) / d

    return DeterminantalClassSpec(
        theta=lambda i: q ** (i - 1), g=lambda x, m: x ** m,
        alpha=lambda m: (q ** m - 1) / (q - 1), beta=lambda m: q ** 0, c=c,
        T=lambda f: (lambda x: (f(q * x) - f(x)) / (q - 1)), name="schur_q")


def symplectic_class(q) -> DeterminantalClassSpec:
    """theta_i = q^i, g = x^{m+1} - x^{-m-1}; T is the symmetric second q-difference."""
    q = _norm_scalar(q)

    def c(N):
        d = q ** 0
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                d = d * (q ** i - q ** j)
        return (q - 1) ** (N * N) * (-1) ** (N * (N - 1) // 2) / d

    return DeterminantalClassSpec(
        theta=lambda i: q ** i, g=lambda x, m: x ** (m + 1) - x ** (-m - 1),
        alpha=lambda m: (q ** (m + 1) + q ** (-m - 1) - 2) / (q - 1) ** 2,
        beta=lambda m: (q ** (m + 1) - q ** (-m - 1)) / (q - 1), c=c,
        T=lambda f: (lambda x: (f(q * x) + f(x / q) - 2 * f(x)) / (q - 1) ** 2),
        name="symplectic_q", weyl_denominator=lambda pts: _dd(pts))


def _weights(spec, mu):
    al = [spec.alpha(m) for m in mu]
    w = []
    for l, m in enumerate(mu):
        d = spec.beta(m)
        for j in range(len(mu)):
            if j != l:
                d = d * (al[l] - al[j])
        w.append(1 / d)
    return al, w


def _require_distinct(xs):
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            if xs[i] == xs[j]:
                raise DegeneracyError("repeated variables make the Vandermonde vanish")


def generic_multivar(spec: DeterminantalClassSpec, mu, xs, N=None, route="eigen"):
    """A_mu(xs, theta_1..theta_{N-k}) / A_mu(theta_1..theta_N) via the operator determinant.

    route="eigen" reweights by alpha; route="operator" applies ``spec.T`` literally
    (only meaningful for difference operators, which need nothing but evaluation).
    """
    if not isinstance(mu, StrictSignature):
        mu = as_signature(mu).strict()
    mu = list(mu.parts)
    N = len(mu) if N is None else N
    if N != len(mu):
        raise ArgumentError("len(mu) must equal N")
    xs = [_norm_scalar(x) for x in xs]
    k = len(xs)
    if k > N:
        raise ArgumentError("k > N")
    _require_distinct(xs)
    thetas = [spec.theta(j) for j in range(1, N - k + 1)]
    for x in xs:
        if any(x == t for t in thetas):
            raise PoleError("a variable coincides with a specialization value")
    al, w = _weights(spec, mu)
    if route == "eigen":
        M = [[sum(w[l] * al[l] ** (j) * spec.g(x, mu[l]) for l in range(N)) for j in range(k)] for x in xs]
    elif route == "operator":
        if spec.T is None:
            raise ArgumentError("no literal operator attached")
        u = lambda x: sum(w[l] * spec.g(x, mu[l]) for l in range(N))
        fs = [u]
        for _ in range(1, k):
            fs.append(spec.T(fs[-1]))
        M = [[f(x) for f in fs] for x in xs]
    else:
        raise ArgumentError(f"unknown route {route!r}")
    pref = spec.c(N - k) / spec.c(N)
    for x in xs:
        for t in thetas:
            pref = pref / (x - t)
    val = pref * det(M) / vandermonde(xs)
    if spec.weyl_denominator is not None:
        allth = [spec.theta(j) for j in range(1, N + 1)]
        pts = list(xs) + thetas
        val = val * (vandermonde(pts) / spec.weyl_denominator(pts)) / (vandermonde(allth) / spec.weyl_denominator(allth))
    return val


def _schur1_matrix(L, xs, k):
    return [[L.apply_D(j).evaluate(x) for j in range(k)] for x in xs]


def _dd(xs):
    """Symplectic Weyl denominator prod (x - 1/x) prod_{i<j} (t_i - t_j)."""
    out = 1
    for x in xs:
        out = out * (x - 1 / x)
    ts = [x + 1 / x for x in xs]
    return out * vandermonde(ts)


def _dd1(xs, N):
    """Limit of dd(xs, q..q^{N-k}) / (q-1)^{binom(N-k+1,2)} as q -> 1."""
    k = len(xs)
    m = N - k
    out = _dd(xs) if xs else 1
    for x in xs:
        out = out * (x - 1) ** (2 * m) / x ** m
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            out = out * (i * i - j * j)
    return out * 2 ** m * factorial(m)


def symplectic_laurent(lam) -> LaurentPolynomial:
    """(-1)^{N-1} sum_i (x^{a_i} - x^{-a_i}) / (2 a_i prod_{j!=i} (a_i^2 - a_j^2)).

    Equals X(x;N,1)(x - 1/x)(2 - x - 1/x)^{N-1} / (2(2N-1)!).
    """
    lam = as_signature(lam).require_nonnegative()
    N = lam.N
    a_ = [lam[j] + N - j for j in range(N)]
    c = {}
    for i, a in enumerate(a_):
        d = 2 * a
        for j, b in enumerate(a_):
            if j != i:
                d *= a * a - b * b
        v = Fraction((-1) ** (N - 1), d)
        c[a] = c.get(a, 0) + v
        c[-a] = c.get(-a, 0) - v
    return LaurentPolynomial(c)


def symplectic_q_laurent(lam, q) -> LaurentPolynomial:
    """A(x, q..q^{N-1}) / A(q..q^N) with A = det[y_i^{a_j} - y_i^{-a_j}] (cofactor expansion)."""
    lam = as_signature(lam).require_nonnegative()
    N = lam.N
    q = _norm_scalar(q)
    a_ = [lam[j] + N - j for j in range(N)]
    ys = [q ** i for i in range(1, N)]
    full = [[y ** a - y ** (-a) for a in a_] for y in [q ** i for i in range(1, N + 1)]]
    D = det(full)
    c = {}
    for j, a in enumerate(a_):
        minor = [[y ** b - y ** (-b) for jj, b in enumerate(a_) if jj != j] for y in ys]
        cof = (-1) ** j * det(minor) / D
        c[a] = c.get(a, 0) + cof
        c[-a] = c.get(-a, 0) - cof
    return LaurentPolynomial(c)


def jacobi_univariate(lam, a, b):
    """(F_l, weight_l, alpha_l) with u(x) = sum_l weight_l F_l(x), F_l normalized at x = 1."""
    lam = as_signature(lam).require_nonnegative()
    N = lam.N
    mu = [lam[i] + N - 1 - i for i in range(N)]
    al = [m * (m + a + b + 1) for m in mu]
    w = []
    for l in range(N):
        d = 1
        for j in range(N):
            if j != l:
                d = d * (al[l] - al[j])
        w.append(1 / d)
    return mu, w, al


def jacobi_K(N, a):
    """Univariate constant: J(x) = K_N (x-1)^{1-N} sum_l F_l(x) / prod (alpha_l - alpha_j)."""
    k = 2 ** (N - 1) * factorial(N - 1)
    for r in range(N - 1):
        k = k * (a + 1 + r)
    return k


def jacobi_z_operator(g: Jet, z: Jet, a, b) -> Jet:
    """Apply z^2 d^2/dz^2 + ((a+b+2)(z+1/z) + 2a - 2b - 2/z)/(1 - z^-2) d/dz to a Taylor jet.

    ``g`` and ``z`` are jets of the same order n at one base point; the result has order n - 2.
    """
    n = g.order
    if n < 2:
        raise ArgumentError("need a jet of order >= 2")
    d1 = Jet([(r + 1) * g.c[r + 1] for r in range(n - 1)])
    d2 = Jet([(r + 1) * (r + 2) * g.c[r + 2] for r in range(n - 1)])
    zt = Jet(z.c[: n - 1])
    coef = ((a + b + 2) * (zt + 1 / zt) + 2 * a - 2 * b - 2 / zt) / (1 - 1 / (zt * zt))
    return zt * zt * d2 + coef * d1


def multivar_det_eval(family, lam, xs, N=None, params=None, route="eigen"):
    """Normalized character of k variables from the family's operator-determinant formula.

    For jacobi, route="operator" applies the second-order z-operator literally
    to Taylor jets instead of reweighting by eigenvalues.
    """
    params = params or {}
    lam = as_signature(lam)
    N = lam.N if N is None else N
    if N != lam.N:
        raise ArgumentError("len(lambda) must equal N")
    xs = [_norm_scalar(x) for x in xs]
    k = len(xs)
    if k > N:
        raise ArgumentError("k > N")
    if k == 0:
        return Fraction(1)
    _require_distinct(xs)
    sign = (-1) ** (k * (k - 1) // 2)
    if family == "schur_1":
        if any(x == 1 or x == 0 for x in xs):
            raise PoleError("variables must avoid 0 and 1")
        L = schur_laurent(lam)
        pref = 1
        for i in range(1, k + 1):
            pref = pref * factorial(N - i)
        for x in xs:
            pref = pref / (x - 1) ** (N - k)
        return pref * det(_schur1_matrix(L, xs, k)) / vandermonde(xs)
    if family == "schur_q":
        q = _norm_scalar(params["q"])
        mu = [lam[i] + N - 1 - i for i in range(N)]
        c = {}
        for i, m in enumerate(mu):
            d = q ** 0
            for j, mj in enumerate(mu):
                if j != i:
                    d = d * (q ** m - q ** mj)
            c[m] = q ** ((N - 1) * (N - 2) // 2) * (q - 1) ** (N - 1) / d
        U = LaurentPolynomial(c)
        alpha = lambda m: (q ** m - 1) / (q - 1)
        M = [[U.apply_eigen(alpha, j).evaluate(x) for j in range(k)] for x in xs]
        pref = q ** (comb(k + 1, 3) - (N - 1) * comb(k, 2))
        for i in range(1, k + 1):
            pref = pref * _qfact(N - i, q)
        for x in xs:
            for j in range(1, N - k + 1):
                d = x - q ** (j - 1)
                if d == 0:
                    raise PoleError("variable hits q^j")
                pref = pref / d
        return pref * det(M) / vandermonde(xs)
    if family == "symplectic_1":
        if any(x in (0, 1, -1) for x in xs):
            raise PoleError("variables must avoid 0 and +-1")
        U = symplectic_laurent(lam)
        M = [[U.apply_D(2 * j).evaluate(x) for j in range(k)] for x in xs]
        den = _dd1(xs, N)
        if den == 0:
            raise DegeneracyError("x_i x_j = 1 collapses the symplectic denominator")
        return _dd1([], N) / den * sign * det(M)
    if family == "symplectic_q":
        q = _norm_scalar(params["q"])
        G = symplectic_q_laurent(lam, q)
        alpha = lambda e: (q ** e + q ** (-e) - 2) / (q - 1) ** 2
        M = [[G.apply_eigen(alpha, j).evaluate(x) for j in range(k)] for x in xs]
        thetas = [q ** i for i in range(1, N - k + 1)]
        den = _dd(list(xs) + thetas)
        if den == 0:
            raise PoleError("degenerate symplectic denominator")
        return _dd([q ** i for i in range(1, N + 1)]) * (q - 1) ** (k * k - k) * sign / den * det(M)
    if family == "jacobi":
        a, b = params["a"], params["b"]
        zs = xs
        if any(z == 0 for z in zs):
            raise PoleError("z = 0 is excluded")
        xx = [(z + 1 / z) / 2 for z in zs]
        _require_distinct(xx)
        if any(x == 1 for x in xx):
            raise PoleError("x = 1 is excluded")
        mu, w, al = jacobi_univariate(lam, a, b)
        M = []
        for z, x in zip(zs, xx):
            if route == "operator":
                order = 2 * (k - 1)
                zj = Jet.variable(z, order) if order else Jet((z,))
                sj = (1 - (zj + 1 / zj) / 2) / 2
                g = sum((w[l] * jacobi_basis(m, sj, a, b) for l, m in enumerate(mu)), Jet.const(0, order))
                row = [g.c[0]]
                for _ in range(1, k):
                    g = jacobi_z_operator(g, Jet(zj.c[: g.order + 1]), a, b)
                    row.append(g.c[0])
                M.append(row)
                continue
            s = (1 - x) / 2
            F = [jacobi_basis(m, s, a, b) for m in mu]
            M.append([sum(w[l] * al[l] ** j * F[l] for l in range(N)) for j in range(k)])
        pref = 1
        for r in range(k):
            pref = pref * jacobi_K(N - r, a)
        for x in xx:
            pref = pref / (x - 1) ** (N - k)
        return pref * det(M) / vandermonde(xx)
    raise ArgumentError(f"unknown family {family!r}")


def ptl_poly(j: int, l: int, N: int) -> LaurentPolynomial:
    """binom(j-1,l) N^l (N-j)!/(N-1)! (x-1)^{j-l-N} (x d/dx)^{j-1-l} (x-1)^{N-1}; a polynomial of degree j-l-1."""
    if not 0 <= l < j < N:
        raise ArgumentError("need 0 <= l < j < N")
    p = LaurentPolynomial.x_minus_1_power(N - 1).apply_D(j - 1 - l)
    p = p.divide_x_minus_1(N - j + l)
    return p * (Fraction(comb(j - 1, l) * N ** l * factorial(N - j), factorial(N - 1)))


def multivar_expansion(lam, xs, N=None):
    """1/Delta(x) det[sum_l D^l S(x_i)/N^l P_{j,l,N}(x_i)(x_i-1)^{l+k-j}]."""
    from .residues import schur_polynomial_form
    lam = as_signature(lam)
    N = lam.N if N is None else N
    xs = [_norm_scalar(x) for x in xs]
    k = len(xs)
    if k == 0:
        return Fraction(1)
    _require_distinct(xs)
    if any(x == 0 or x == 1 for x in xs):
        raise PoleError("variables must avoid 0 and 1")
    S = schur_polynomial_form(lam)
    DS = [S.apply_D(l) for l in range(k)]
    P = {}
    M = []
    for x in xs:
        row = []
        for j in range(1, k + 1):
            tot = 0
            for l in range(j):
                if j < N:
                    if (j, l) not in P:
                        P[(j, l)] = ptl_poly(j, l, N)
                    pj = P[(j, l)].evaluate(x)
                else:
                    pj = _ptl_general(j, l, N, x)
                tot = tot + DS[l].evaluate(x) / Fraction(N) ** l * pj * (x - 1) ** (l + k - j)
            row.append(tot)
        M.append(row)
    # no (-1)^{binom(k,2)}: the entries coincide with those of the schur_1 determinant
    return det(M) / vandermonde(xs)


def _ptl_general(j, l, N, x):
    """The same expression for j = N (not a polynomial there); evaluated directly."""
    p = LaurentPolynomial.x_minus_1_power(N - 1).apply_D(j - 1 - l)
    return Fraction(comb(j - 1, l) * N ** l * factorial(N - j), factorial(N - 1)) * p.evaluate(x) * (x - 1) ** (j - l - N)
