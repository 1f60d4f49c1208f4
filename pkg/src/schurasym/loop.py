"""Mean currents of the completely packed O(1) dense loop model through symplectic characters.

tau_L(z_1..z_k) is the symplectic character of lambda^L = (floor((L-i)/2))_i at
the squared arguments z_i^2 with the remaining L - k variables equal to 1.
The currents are logarithmic derivatives of

    u_L = (-1)^L i sqrt(3)/2 ln[tau_{L+1}(zeta_1, z) tau_{L+1}(zeta_2, z)
                                / (tau_L(z) tau_{L+2}(zeta_1, zeta_2, z))],

taken with the probe variable carried as a first-order jet.  Normalizing each
tau by its value at 1 only adds a constant to u_L.
"""
from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .errors import ArgumentError, BranchError, CapacityError, DomainError, PrecisionError
from .scalars import Jet, is_exact, to_mp
from .signatures import half_staircase
from .symfunc import normalized_character, symplectic_dim

L_CAP = 28
MAX_BITS = 1024
DEFAULT_BITS = 192


@dataclass(frozen=True)
class LoopParams:
    zeta1: object = mp.mpf("1.3")
    zeta2: object = mp.mpf("0.6")
    v: object = None
    w: object = None
    q: object = None
    L: int = 8

    def __post_init__(self):
        if self.L < 2:
            raise ArgumentError("L must be at least 2")
        for name in ("zeta1", "zeta2", "v", "w", "q"):
            val = getattr(self, name)
            if val is not None and val == 0:
                raise ArgumentError(f"{name} must be nonzero")

    @classmethod
    def homogeneous(cls, L, zeta1=mp.mpf("1.3"), zeta2=mp.mpf("0.6")):
        """w = v = e^{-i pi/6}, q = e^{2 pi i/3}."""
        w = mp.exp(-1j * mp.pi / 6)
        return cls(zeta1, zeta2, w, w, mp.exp(2j * mp.pi / 3), L)


def _sq(z):
    return z * z


def _tau_raw(L, zs, normalized):
    lam = half_staircase(L)
    val = normalized_character("symplectic", lam, [_sq(z) for z in zs])
    if not normalized:
        val = val * to_mp(symplectic_dim(lam))
    return val


def _agree_bits(a, b):
    parts_a = a.c if isinstance(a, Jet) else (a,)
    parts_b = b.c if isinstance(b, Jet) else (b,)
    worst = mp.inf
    for x, y in zip(parts_a, parts_b):
        x, y = mp.mpmathify(x), mp.mpmathify(y)
        if x == y:
            continue
        scale = max(abs(x), abs(y))
        worst = min(worst, -mp.log(abs(x - y) / scale, 2))
    return worst


def escalate(fn, precision_bits=None, min_bits=64):
    """Evaluate fn() at increasing precision until two runs agree to min_bits."""
    prec = precision_bits or DEFAULT_BITS
    with mp.workprec(prec):
        prev = fn()
    while True:
        nxt_prec = prec + 64
        if nxt_prec > MAX_BITS:
            raise PrecisionError(f"fewer than {min_bits} stable bits at {MAX_BITS} bits")
        with mp.workprec(nxt_prec):
            cur = fn()
        if _agree_bits(prev, cur) >= min_bits:
            return cur
        prec, prev = min(2 * prec, MAX_BITS - 64), cur


def tau_eval(L: int, zs, precision_bits: int | None = None, normalized: bool = False):
    """chi_{lambda^L}(z_1^2, ..., z_k^2, 1^{L-k}); ``normalized`` divides by chi(1^L)."""
    if L > L_CAP:
        raise CapacityError(f"L is capped at {L_CAP}")
    if len(zs) > L:
        raise ArgumentError("more variables than L")
    if any(z == 0 for z in zs):
        raise DomainError("z = 0 is excluded")
    if all(is_exact(z) and not isinstance(z, Jet) for z in zs):
        return _tau_raw(L, zs, normalized)
    return escalate(lambda: _tau_raw(L, [_lift(z) for z in zs], normalized), precision_bits)


def _lift(z):
    if isinstance(z, Jet):
        return Jet(mp.mpmathify(c) for c in z.c)
    return to_mp(z) if is_exact(z) else mp.mpmathify(z)


def _u_terms(L, zeta1, zeta2, probes):
    A = _tau_raw(L + 1, [zeta1] + probes, True)
    B = _tau_raw(L + 1, [zeta2] + probes, True)
    C = _tau_raw(L, probes, True) if probes else mp.mpf(1)
    D = _tau_raw(L + 2, [zeta1, zeta2] + probes, True)
    return A, B, C, D


def u_tilde(L: int, zeta1, zeta2, probes):
    """u_L with normalized characters, principal logarithm of each factor."""
    A, B, C, D = _u_terms(L, zeta1, zeta2, [mp.mpmathify(p) for p in probes])
    return (-1) ** L * 1j * mp.sqrt(3) / 2 * (mp.log(A) + mp.log(B) - mp.log(C) - mp.log(D))


def _log_derivative(L, zeta1, zeta2, fixed, probe):
    """(-1)^L i sqrt(3)/2 * probe d/dprobe of the log ratio, probe seeded as a jet."""
    pj = Jet.variable(mp.mpmathify(probe), 1, mp.mpmathify(probe))
    A, B, C, D = _u_terms(L, mp.mpmathify(zeta1), mp.mpmathify(zeta2),
                          [mp.mpmathify(f) for f in fixed] + [pj])
    for name, t in zip("ABCD", (A, B, C, D)):
        if t.val == 0:
            raise BranchError(f"tau factor {name} vanishes")
    dl = A.der / A.val + B.der / B.val - C.der / C.val - D.der / D.val
    return (-1) ** L * 1j * mp.sqrt(3) / 2 * dl


def current(mode: str, params: LoopParams, z=None, precision_bits=None):
    """X (probe z, all other z_i = 1) or Y (w d/dw of u_{L+2} at w = v with the point v/q)."""
    L = params.L
    if L + 4 > L_CAP:
        raise CapacityError(f"L is capped at {L_CAP - 4}")
    if mode == "X":
        if z is None:
            raise ArgumentError("X needs the probe value z")
        if z == 1:
            return mp.mpf(0)
        return escalate(lambda: _log_derivative(L, params.zeta1, params.zeta2, [], z), precision_bits)
    if mode == "Y":
        if params.v is None or params.w is None or params.q is None:
            raise ArgumentError("Y needs v, w and q")

        def run():
            v = mp.mpmathify(params.v)
            return _log_derivative(L + 2, params.zeta1, params.zeta2, [v / mp.mpmathify(params.q)],
                                   mp.mpmathify(params.w))

        return escalate(run, precision_bits)
    raise ArgumentError(f"unknown current {mode!r}")


def current_fd(params: LoopParams, z, h=mp.mpf(10) ** -20):
    """z d/dz u_L by a central difference in log z."""
    L = params.L
    up = u_tilde(L, params.zeta1, params.zeta2, [z * (1 + h)])
    dn = u_tilde(L, params.zeta1, params.zeta2, [z * (1 - h)])
    return (up - dn) / (2 * h)


# leading-order predictions

def current_prediction(z, L: int):
    """i sqrt(3)/(4L) (z^3 - z^{-3})."""
    z = mp.mpmathify(z)
    return 1j * mp.sqrt(3) / (4 * L) * (z ** 3 - z ** -3)


def xi(x):
    """x d/dx ln h(x) with h(x) = (4/9) x^{-3/2} (x^{3/2} - 1)^2."""
    x = mp.mpmathify(x)
    r = x ** mp.mpf(1.5)
    if r == 1:
        raise DomainError("xi is singular where x^{3/2} = 1")
    return mp.mpf(3) / 2 * (r + 1) / (r - 1)


def B_form(vs):
    """-(9/4)(m-1) sum xi(v_i)^2 + (9/4) m(m-1)/2."""
    m = len(vs)
    return -mp.mpf(9) / 4 * (m - 1) * sum(xi(v) ** 2 for v in vs) + mp.mpf(9) / 4 * m * (m - 1) / 2


def h_base(y):
    """(4/9)(e^{3y/2} - 1)^2 / (e^{y/2} (e^y - 1)^2)."""
    y = mp.mpmathify(y)
    e = mp.exp(y)
    return mp.mpf(4) / 9 * (mp.exp(1.5 * y) - 1) ** 2 / (mp.exp(y / 2) * (e - 1) ** 2)


def univariate_prefactor(y):
    """3 e^{3y/4} (e^y - 1) / ((e^{3y/2} - 1)(e^y + 1))."""
    y = mp.mpmathify(y)
    e = mp.exp(y)
    return 3 * mp.exp(0.75 * y) * (e - 1) / ((mp.exp(1.5 * y) - 1) * (e + 1))


def parity_gap(y):
    """(1/12)(e^{3y/2} - 1)^2 e^{-3y/2}."""
    y = mp.mpmathify(y)
    return (mp.exp(1.5 * y) - 1) ** 2 * mp.exp(-1.5 * y) / 12


def univariate_leading(y, L: int):
    return univariate_prefactor(y) * h_base(y) ** L


def measured_parity_gap(y, L: int, precision_bits=None):
    """(-1)^L (L/2) ln(X(L+1)^2 / (X(L) X(L+2))) at x = e^y."""
    def run():
        x = mp.exp(mp.mpmathify(y))
        vals = [mp.log(normalized_character("symplectic", half_staircase(M), [x])) for M in (L, L + 1, L + 2)]
        return (-1) ** L * (2 * vals[1] - vals[0] - vals[2]) * L / 2
    return escalate(run, precision_bits)


def loop_asymptotics(z, L: int, y=None, w=None):
    """(X_pred at z, Y_pred at w, univariate expansion at y) for the leading terms."""
    z = mp.mpmathify(z)
    w = mp.exp(-1j * mp.pi / 6) if w is None else mp.mpmathify(w)
    if abs(mp.arg(z)) >= 2 * mp.pi / 3:
        raise DomainError("z must satisfy |arg z| < 2 pi/3")
    uni = None
    if y is not None:
        uni = {"prefactor": univariate_prefactor(y), "h": h_base(y),
               "leading": univariate_leading(y, L), "parity_gap": parity_gap(y)}
    return current_prediction(z, L), current_prediction(w, L), uni


def univariate_value(y, L: int, precision_bits=None):
    """Normalized symplectic character of lambda^L at the single point e^y."""
    return escalate(lambda: normalized_character("symplectic", half_staircase(L), [mp.exp(mp.mpmathify(y))]),
                    precision_bits)
