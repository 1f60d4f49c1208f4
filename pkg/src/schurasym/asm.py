"""Alternating sign matrices, the six-vertex model with domain-wall boundary, and its observables.

Edge states: ``col[i][j]`` is the partial column sum of rows < i above
vertex (i, j), ``row[i][j]`` the partial row sum of columns < j to its
left.  Both lie in {0, 1}; state 1 on a vertical (horizontal) edge means
the arrow points down (right).  A vertex with a nonzero entry is of type c.
A zero vertex is of type a when its two incoming states agree and of
type b otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from .asymptotics import Profile
from .errors import ArgumentError, CapacityError, IdentityViolationError, PrecisionError
from .residues import schur1_mp
from .signatures import Signature, asm_staircase
from .symfunc import schur_branching

ENUM_CAP = 7
DIRECT_CAP = 5


@dataclass(frozen=True)
class ASMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ArgumentError("matrix must be square")
        for line in list(rows) + [tuple(r[j] for r in rows) for j in range(n)]:
            s = 0
            for v in line:
                if v not in (-1, 0, 1):
                    raise ArgumentError("entries must lie in {-1, 0, 1}")
                s += v
                if s not in (0, 1):
                    raise ArgumentError("nonzero entries must alternate starting with +1")
            if s != 1:
                raise ArgumentError("every row and column must sum to 1")

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SixVertexConfig:
    """Edge states: col has n+1 rows of n entries, row has n rows of n+1 entries."""
    col: tuple
    row: tuple


@dataclass
class VertexStats:
    types: dict          # (i, j) -> 'a' | 'b' | 'c'
    rows: list           # per horizontal line: (a, b, c)
    cols: list           # per vertical line: (a, b, c)


def to_six_vertex(A: ASMatrix) -> SixVertexConfig:
    n = A.n
    E = A.entries
    col = [[0] * n]
    for i in range(n):
        col.append([col[-1][j] + E[i][j] for j in range(n)])
    row = []
    for i in range(n):
        r = [0]
        for j in range(n):
            r.append(r[-1] + E[i][j])
        row.append(r)
    return SixVertexConfig(tuple(map(tuple, col)), tuple(map(tuple, row)))


def from_six_vertex(cfg: SixVertexConfig) -> ASMatrix:
    """Inverse of ``to_six_vertex``; checks the ice rule and the domain-wall boundary."""
    col, row = cfg.col, cfg.row
    n = len(row)
    if any(v != 0 for v in col[0]) or any(v != 1 for v in col[n]):
        raise ArgumentError("vertical boundary violates the domain-wall condition")
    if any(r[0] != 0 or r[n] != 1 for r in row):
        raise ArgumentError("horizontal boundary violates the domain-wall condition")
    E = []
    for i in range(n):
        line = []
        for j in range(n):
            dv = col[i + 1][j] - col[i][j]
            dh = row[i][j + 1] - row[i][j]
            if dv != dh:
                raise ArgumentError(f"ice rule fails at vertex ({i}, {j})")
            line.append(dv)
        E.append(line)
    return ASMatrix(tuple(map(tuple, E)))


def vertex_stats(A: ASMatrix) -> VertexStats:
    cfg = to_six_vertex(A)
    n = A.n
    types = {}
    rows = []
    cols = [[0, 0, 0] for _ in range(n)]
    for i in range(n):
        cnt = [0, 0, 0]
        for j in range(n):
            if A.entries[i][j] != 0:
                t = "c"
            else:
                t = "a" if cfg.col[i][j] == cfg.row[i][j] else "b"
            types[i, j] = t
            k = "abc".index(t)
            cnt[k] += 1
            cols[j][k] += 1
        rows.append(tuple(cnt))
    return VertexStats(types, rows, [tuple(c) for c in cols])


def _admissible_rows(n, col):
    """Rows compatible with the current column partial sums."""
    out = []

    def rec(j, r, row):
        if j == n:
            if r == 1:
                out.append(tuple(row))
            return
        for e in (0, 1, -1):
            if 0 <= r + e <= 1 and 0 <= col[j] + e <= 1:
                rec(j + 1, r + e, row + [e])

    rec(0, 0, [])
    return out


def asm_enumerate(n: int) -> list:
    """All n x n alternating sign matrices (n <= 7)."""
    if n < 1:
        raise ArgumentError("n must be positive")
    if n > ENUM_CAP:
        raise CapacityError(f"enumeration is capped at n = {ENUM_CAP}")
    out = []

    def rec(rows, col):
        if len(rows) == n:
            if all(c == 1 for c in col):
                out.append(ASMatrix(tuple(rows)))
            return
        left = n - len(rows)
        for r in _admissible_rows(n, col):
            nc = tuple(c + e for c, e in zip(col, r))
            # each remaining row adds at most one to the number of filled columns
            if n - sum(nc) <= left - 1:
                rec(rows + [r], nc)

    rec([], (0,) * n)
    return out


def transfer_count(n: int) -> int:
    """Number of ASMs by a row-to-row transfer over column-state vectors."""
    if n < 1:
        raise ArgumentError("n must be positive")

    @lru_cache(maxsize=None)
    def step(state):
        # rows leaving state: r_j = state_j + e_j in {0,1}; row partial sums in {0,1}, total 1
        nxt = {}

        def rec(j, r, new):
            if j == n:
                if r == 1:
                    t = tuple(new)
                    nxt[t] = nxt.get(t, 0) + 1
                return
            for e in (0, 1, -1):
                if 0 <= r + e <= 1 and 0 <= state[j] + e <= 1:
                    rec(j + 1, r + e, new + [state[j] + e])

        rec(0, 0, [])
        return tuple(nxt.items())

    level = {(0,) * n: 1}
    for _ in range(n):
        new = {}
        for s, c in level.items():
            for t, m in step(s):
                new[t] = new.get(t, 0) + c * m
        level = new
    return level.get((1,) * n, 0)


# weighted partition functions

def _q_default():
    return mp.exp(1j * mp.pi / 3)


def vertex_weight(t, u, v, q):
    qi = 1 / q
    if t == "a":
        return qi * u * u - q * v * v
    if t == "b":
        return qi * v * v - q * u * u
    return (qi - q) * u * v


def direct_sum(n, us, vs, q=None):
    if n > DIRECT_CAP:
        raise CapacityError(f"direct partition sums are capped at n = {DIRECT_CAP}")
    q = _q_default() if q is None else q
    tot = 0
    for A in asm_enumerate(n):
        w = 1
        for (i, j), t in vertex_stats(A).types.items():
            w *= vertex_weight(t, us[i], vs[j], q)
        tot += w
    return tot


def okada_side(n, us, vs, q=None):
    """(-1)^{C(n,2)} (q^{-1}-q)^n prod (u_i v_i)^{-1} s_{lambda(n)}(u^2, v^2)."""
    q = _q_default() if q is None else q
    lam = asm_staircase(n)
    s = schur_branching(lam, [u * u for u in us] + [v * v for v in vs])
    p = 1
    for u, v in zip(us, vs):
        p *= u * v
    return (-1) ** (n * (n - 1) // 2) * (1 / q - q) ** n / p * s


@dataclass(frozen=True)
class ConventionMonomial:
    """Global factor C^n prod_i u_i^eu v_i^ev relating the direct sum to the closed form."""
    eu: int
    ev: int
    const: object = 1

    def __call__(self, us, vs):
        out = mp.mpmathify(self.const) ** len(us)
        for u in us:
            out *= mp.mpmathify(u) ** self.eu
        for v in vs:
            out *= mp.mpmathify(v) ** self.ev
        return out


_FITTED = {}


def fit_convention(q=None, tol=None) -> ConventionMonomial:
    """Fit exponents and constant at n = 1 from three generic points; cached per q."""
    q = _q_default() if q is None else q
    key = (mp.nstr(q, 30), mp.mp.prec)
    if key in _FITTED:
        return _FITTED[key]
    tol = tol if tol is not None else mp.mpf(10) ** -20
    r = lambda u, v: direct_sum(1, [u], [v], q) / okada_side(1, [u], [v], q)
    one = mp.mpf(1)
    c = r(one, one)
    eu = mp.re(mp.log(r(2 * one, one) / c) / mp.log(2))
    ev = mp.re(mp.log(r(one, 2 * one) / c) / mp.log(2))
    conv = ConventionMonomial(int(mp.nint(eu)), int(mp.nint(ev)), c)
    if abs(eu - conv.eu) > tol or abs(ev - conv.ev) > tol:
        raise IdentityViolationError("n = 1 ratio is not a monomial")
    u, v = mp.mpf(3) / 7, mp.mpf(11) / 5
    if abs(r(u, v) - conv([u], [v])) > tol * abs(r(u, v)):
        raise IdentityViolationError("n = 1 ratio is not a monomial")
    _FITTED[key] = conv
    return conv


def partition_function(n, us, vs, q=None, tol=None):
    """(direct sum, closed form, convention) with direct == closed * convention checked."""
    q = _q_default() if q is None else q
    us = [mp.mpmathify(u) for u in us]
    vs = [mp.mpmathify(v) for v in vs]
    if len(us) != n or len(vs) != n:
        raise ArgumentError("need n values of u and of v")
    tol = tol if tol is not None else mp.mpf(10) ** -20
    conv = fit_convention(q)
    d = direct_sum(n, us, vs, q)
    o = okada_side(n, us, vs, q)
    if abs(d - o * conv(us, vs)) > tol * max(abs(d), 1):
        raise IdentityViolationError(f"n = {n}: direct {d} vs closed form {o} times the convention")
    return d, o, conv


def asm_observable(n, rows, cols, us, vs, q=None):
    """(lhs, rhs) for the product of line observables.

    lhs is the uniform expectation over ASMs of the line and crossing factors;
    rhs is the ratio of closed forms with u_k (v_l) placed on the probed lines,
    which equals prod u^{eu-1} v^{ev-1} S_{lambda(n)}(u^2, v^2, 1^{2n-|rows|-|cols|}).
    """
    q = _q_default() if q is None else q
    if n > DIRECT_CAP:
        raise CapacityError(f"observables are enumerated up to n = {DIRECT_CAP}")
    us = [mp.mpmathify(u) for u in us]
    vs = [mp.mpmathify(v) for v in vs]
    if len(us) != len(rows) or len(vs) != len(cols):
        raise ArgumentError("one parameter per probed line")
    qi = 1 / q
    d = qi - q
    lhs = 0
    mats = asm_enumerate(n)
    for A in mats:
        st = vertex_stats(A)
        w = 1
        for i, u in zip(rows, us):
            a, b, c = st.rows[i]
            w *= ((qi * u * u - q) / d) ** a * ((qi - q * u * u) / d) ** b * u ** c
        for j, v in zip(cols, vs):
            a, b, c = st.cols[j]
            w *= ((qi - q * v * v) / d) ** a * ((qi * v * v - q) / d) ** b * v ** c
        for i, u in zip(rows, us):
            for j, v in zip(cols, vs):
                t = st.types[i, j]
                if t == "a":
                    w *= (qi * u * u - q * v * v) * d / ((qi * u * u - q) * (qi - q * v * v))
                elif t == "b":
                    w *= (qi * v * v - q * u * u) * d / ((qi - q * u * u) * (qi * v * v - q))
        lhs += w
    lhs /= len(mats)
    conv = fit_convention(q)
    U = [mp.mpf(1)] * n
    V = [mp.mpf(1)] * n
    for i, u in zip(rows, us):
        U[i] = u
    for j, v in zip(cols, vs):
        V[j] = v
    ones = [mp.mpf(1)] * n
    rhs = okada_side(n, U, V, q) * conv(U, V) / (okada_side(n, ones, ones, q) * conv(ones, ones))
    return lhs, rhs


# analytic half of the Gaussian fluctuation statement

LIMIT_VARIANCE = Fraction(3, 8)


def staircase_observable(n: int, s, min_bits=64):
    """E exp(i s (a_1 - n/2)/sqrt(n)) up to the vanishing c-correction, from S_{lambda(n)}(X; 2n, 1).

    X = u^2 is tied to z = i s by exp(z/sqrt n) = (q^{-1} X - q)/(q^{-1} - q X).
    """
    lam = asm_staircase(n)
    s = mp.mpf(s)

    def Xf(prec):
        with mp.workprec(prec):
            q = mp.exp(1j * mp.pi / 3)
            ez = mp.exp(1j * s / mp.sqrt(n))
            return (ez / q + q) / (1 / q + q * ez)

    S, prec, loss = schur1_mp(lam, Xf, min_bits=min_bits)
    with mp.workprec(prec):
        q = mp.exp(1j * mp.pi / 3)
        X = Xf(prec)
        B = (1 / q - q * X) / (1 / q - q)
        z = 1j * s
        phi = S * B ** (1 - n) * mp.exp(-z * mp.sqrt(n) / 2)
    return +phi, prec, loss


@dataclass
class GaussianReport:
    rows: list = field(default_factory=list)   # (n, s, error, phase, prec, loss)
    decreasing: bool = True
    final_max: float = 0.0
    variance: Fraction = LIMIT_VARIANCE

    @property
    def passed(self):
        return self.decreasing and self.final_max <= 0.02


def asm_gaussian_check(n_ladder=(64, 128, 256, 512), s_grid=(0.25, 0.5, 1.0)) -> GaussianReport:
    """|ln|phi_n(s)| + (3/16) s^2| along the ladder; 3/16 = variance/2."""
    if any(n > 512 for n in n_ladder):
        raise CapacityError("ladder is capped at n = 512")
    rep = GaussianReport()
    last = {}
    for n in n_ladder:
        for s in s_grid:
            if s == 0:
                rep.rows.append((n, 0.0, 0.0, 0.0, 0, 0.0))
                continue
            phi, prec, loss = staircase_observable(n, s)
            err = float(abs(mp.log(abs(phi)) + LIMIT_VARIANCE * mp.mpf(s) ** 2 / 2))
            rep.rows.append((n, float(s), err, float(mp.arg(phi)), prec, loss))
            if s in last and not err < last[s]:
                rep.decreasing = False
            last[s] = err
    top = max(n_ladder)
    rep.final_max = max((r[2] for r in rep.rows if r[0] == top), default=0.0)
    return rep
