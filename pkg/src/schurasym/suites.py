"""Acceptance blocks: each check function returns Check records; suites group them by module."""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

from . import asm, charlimits, loop, tilings
from .asymptotics import Profile, SignatureFamily, first_order_limit
from .multivar import multivar_det_eval
from .residues import contour_quadrature, residue_eval, schur1_mp
from .signatures import Signature, all_signatures
from .symfunc import normalized_character, schur_branching, symplectic_via_schur, weyl_dim


@dataclass
class Check:
    name: str
    passed: bool
    value: object = None
    threshold: object = None
    detail: str = ""
    supplementary: bool = False

    def line(self) -> str:
        tag = "info" if self.supplementary else ("PASS" if self.passed else "FAIL")
        return f"[{tag}] {self.name}: value={_fmt(self.value)} threshold={_fmt(self.threshold)} {self.detail}".rstrip()


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.4g}"
    if isinstance(v, (mp.mpf, mp.mpc)):
        return mp.nstr(v, 5)
    return str(v)


@dataclass
class SuiteReport:
    name: str
    checks: list = field(default_factory=list)
    rows: list = field(default_factory=list)   # CSV rows, header first
    seconds: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks if not c.supplementary)


# 1. exact oracle equivalence

GRID_1 = [Fraction(3), Fraction(2, 5), Fraction(-2)]
GRID_2 = [(Fraction(3), Fraction(2, 5)), (Fraction(-2), Fraction(5, 3))]
GRID_3 = [(Fraction(3), Fraction(2, 5), Fraction(-2))]
Q_ORACLE = Fraction(1, 2)


def _oracle(lam, xs, q):
    N = lam.N
    fill = [Fraction(1)] * (N - len(xs)) if q is None else [q ** i for i in range(N - len(xs))]
    full = [Fraction(1)] * N if q is None else [q ** i for i in range(N)]
    return schur_branching(lam, list(xs) + fill) / schur_branching(lam, full)


def check_oracles(max_N=5, lo=-2, hi=3) -> Check:
    bad = []
    count = 0
    for N in range(1, max_N + 1):
        for lam in all_signatures(N, lo, hi):
            for q in (None, Q_ORACLE):
                fam = "schur_1" if q is None else "schur_q"
                params = None if q is None else {"q": q}
                for x in GRID_1:
                    count += 1
                    if residue_eval(fam, lam, N, params, x) != _oracle(lam, [x], q):
                        bad.append((fam, lam.parts, x))
                for k, grid in ((2, GRID_2), (3, GRID_3)):
                    if k > N:
                        continue
                    for xs in grid:
                        count += 1
                        if multivar_det_eval(fam, lam, list(xs), N, params) != _oracle(lam, xs, q):
                            bad.append((fam, lam.parts, xs))
    return Check("1 oracle equivalence (exact)", not bad, f"{len(bad)} mismatches", "0",
                 f"{count} comparisons" + (f"; first {bad[0]}" if bad else ""))


# 2. symplectic through Schur

X_GRID_2 = [Fraction(n, d) for n, d in ((3, 1), (2, 5), (-2, 1), (5, 3), (7, 2), (1, 3), (-3, 4), (9, 7), (4, 1), (-5, 2))]


def check_symplectic_schur(max_N=4, hi=3) -> Check:
    bad = []
    count = 0
    for N in range(1, max_N + 1):
        for lam in all_signatures(N, 0, hi):
            for q in (None, Fraction(1, 2)):
                for x in X_GRID_2:
                    count += 1
                    lhs = normalized_character("symplectic", lam, [x], q=q)
                    if lhs != symplectic_via_schur(lam, x, q):
                        bad.append((lam.parts, q, x))
    return Check("2 symplectic-Schur identity (exact)", not bad, f"{len(bad)} mismatches", "0", f"{count} comparisons")


# 3. contour quadrature

QUAD_CASES = [((1, 0), Fraction(3)), ((2, 1, 0), Fraction(1, 2)), ((3, 1, 1, 0), Fraction(-2)),
              ((2, 2, 1, 0, -1), Fraction(5, 3)), ((4, 3, 3, 1, 0, 0), Fraction(7, 5)),
              ((3, 2, 2, 1, 1, 0, -1), Fraction(2, 3)), ((5, 4, 2, 2, 1, 0, 0, -2), Fraction(6, 5)),
              ((2, 2, 2, 1, 1, 1, 0, 0, 0), Fraction(-1, 2)), ((6, 5, 3, 3, 2, 1, 1, 0, 0, -1), Fraction(4, 5))]


def check_quadrature() -> Check:
    worst = 0.0
    for lam, x in QUAD_CASES:
        val, _ = contour_quadrature(lam, x=x, prec=128)
        ref = residue_eval("schur_1", lam, None, None, x)
        rel = float(abs(val - mp.mpf(ref.numerator) / ref.denominator) / abs(mp.mpf(ref.numerator) / ref.denominator))
        worst = max(worst, rel)
    return Check("3 contour quadrature vs residues", worst <= 1e-8, worst, 1e-8, f"{len(QUAD_CASES)} cases, N <= 10")


# 4. GUE-regime ladder

def _wrap_imag(z):
    if isinstance(z, mp.mpc):
        im = z.imag - 2 * mp.pi * mp.nint(z.imag / (2 * mp.pi))
        return mp.mpc(z.real, im)
    return z


def gue_ladder(Ns=(64, 128, 256, 512), hs=(mp.mpf(0.5), mp.mpf(-0.5), mp.mpf(1), mp.mpc(0, 1))):
    """[(N, h, error)] for |ln S - sqrt(N) E h - S h^2/2| on the corrected (1-t)/2 family."""
    f = Profile.halfstair()
    fam = SignatureFamily.corrected(f)
    E, S = f.E(), f.S()
    out = []
    for N in Ns:
        lam = fam(N)
        for h in hs:
            val, prec, _ = schur1_mp(lam, lambda p, h=h, N=N: mp.exp(mp.mpmathify(h) / mp.sqrt(N)))
            with mp.workprec(prec):
                hm = mp.mpmathify(h)
                d = mp.log(val) - mp.sqrt(N) * hm * mp.mpf(E.numerator) / E.denominator \
                    - mp.mpf(S.numerator) / S.denominator * hm ** 2 / 2
                out.append((N, h, float(abs(_wrap_imag(d)))))
    return out


def check_gue_ladder():
    f = Profile.halfstair()
    rows = gue_ladder()
    by_h = {}
    for N, h, e in rows:
        by_h.setdefault(str(h), []).append(e)
    mono = all(all(a > b for a, b in zip(v, v[1:])) for v in by_h.values())
    top = max(v[-1] for v in by_h.values())
    closed = f.E() == Fraction(1, 4) and f.S() == Fraction(5, 48)
    return [Check("4 GUE-regime ladder", mono and top <= 0.02 and closed, top, 0.02,
                  f"monotone={mono} E={f.E()} S={f.S()}")], rows


# 5. first-order identity for the zero profile

Y_GRID_5 = [mp.mpf(v) for v in ("0.25", "-0.25", "0.5", "-0.5", "1", "-1", "2", "-2")] + \
    [mp.mpc(1, 0.5), mp.mpc(-0.5, 1)]


def check_zero_profile() -> Check:
    with mp.workprec(128):
        worst = max(abs(first_order_limit(Profile.zero(), y)) for y in Y_GRID_5)
    return Check("5 zero-profile first-order identity", worst <= 1e-25, worst, 1e-25, "10 values of y")


# 6. tiling mgf identity

def check_bessel_mgf(max_N=5, hi=3) -> Check:
    worst = mp.mpf(0)
    count = 0
    with mp.workprec(128):
        for N in range(1, max_N + 1):
            for lam in all_signatures(N, 0, hi):
                for k in (1, 2):
                    if k > N:
                        continue
                    xs = [mp.mpf("0.3")] if k == 1 else [mp.mpf("0.3"), mp.mpf("-0.7")]
                    l, r = tilings.bessel_mgf(lam, xs, k)
                    worst = max(worst, abs(l - r))
                    count += 1
    return Check("6 tiling mgf identity", worst <= 1e-25, float(worst), 1e-25, f"{count} cases")


# 7. GUE corners from exact samples

def check_gue_corners(N=30, samples=20000, seed=0):
    out = []
    f = Profile.halfstair()
    fam = SignatureFamily.corrected(f)
    for k in (1, 2):
        rep = tilings.gue_corners_test(fam, N, k, samples, seed)
        worst = max(c["sigmas"] for c in rep["checks"])
        fails = [f"{c['stat']}{c['index']}:{c['sigmas']:.1f}sd" for c in rep["checks"] if not c["pass"]]
        out.append(Check(f"7 GUE corners k={k} (N={N}, {samples} samples)", rep["pass"], worst, 3.0,
                         "max deviation in CLT sd" + (f"; failing {', '.join(fails)}" if fails else "")))
    for k in (1, 2):
        ex = tilings.exact_row_moments(fam(N), k, f.E(), f.S())
        tgt = tilings.GUE_TARGETS[k]
        var = [ex["cov"][i][i] for i in range(k)]
        detail = f"exact-law mean={[round(m, 4) for m in ex['mean']]} var={[round(v, 4) for v in var]}"
        if k == 2:
            detail += f" cov={ex['cov'][0][1]:.4f} (target {tgt['cov']:.4f})"
        out.append(Check(f"7 supplementary: exact row-{k} law at N={N}", True, var[0], tgt["var"][0],
                         detail, supplementary=True))
    ratios = []
    for M in (20, 30, 40, 60):
        ex = tilings.exact_row_moments(fam(M), 1, f.E(), f.S())
        ratios.append(round(ex["cov"][0][0], 4))
    out.append(Check("7 supplementary: exact row-1 variance vs N in (20, 30, 40, 60)", True, ratios, 1.0,
                     "finite-N bias shrinking", supplementary=True))
    return out


# 8. ASM combinatorics and weighted identities

def check_asm():
    counts_a = [len(asm.asm_enumerate(n)) for n in range(1, 6)]
    counts_b = [asm.transfer_count(n) for n in range(1, 6)]
    expected = [1, 2, 7, 42, 429]
    out = [Check("8 ASM counts (enumeration and transfer)", counts_a == expected == counts_b,
                 counts_a, expected, f"transfer={counts_b}")]
    worst = mp.mpf(0)
    with mp.workprec(128):
        conv = asm.fit_convention()
        for n in (1, 2, 3, 4):
            us = [1 + mp.mpf(k) / 7 for k in range(1, n + 1)]
            vs = [1 + mp.mpf(k) / 5 + mp.mpf(1) / 11 for k in range(n)]
            d = asm.direct_sum(n, us, vs)
            o = asm.okada_side(n, us, vs)
            worst = max(worst, abs(d - o * conv(us, vs)) / abs(d))
        cases = [(2, [0], [], [1], []), (3, [0], [], [mp.mpf(1.5)], []),
                 (3, [1], [2], [mp.mpf(1.5)], [mp.mpf(0.8)]), (4, [0, 2], [1], [mp.mpf(1.3), mp.mpf(0.7)], [mp.mpf(1.2)])]
        for c in cases:
            l, r = asm.asm_observable(*c)
            worst = max(worst, abs(l - r) / abs(r))
    out.append(Check("8 partition function and observables after the n=1 monomial", worst <= 1e-20, float(worst), 1e-20,
                     f"monomial u^{conv.eu} v^{conv.ev} per line, constant {mp.nstr(conv.const, 3)}"))
    return out


def check_asm_gaussian():
    rep = asm.asm_gaussian_check()
    rows = [("n", "s", "error", "phase", "prec", "loss_bits")] + rep.rows
    return [Check("9 ASM Gaussian ladder", rep.passed and rep.variance == Fraction(3, 8), rep.final_max, 0.02,
                  f"decreasing={rep.decreasing} variance={rep.variance}")], rows


# 10. dense loop currents

def check_loop(Ls=(8, 12, 16, 20, 24)):
    target = 1j * mp.sqrt(3) / 4 * (8 - mp.mpf(1) / 8)
    errs = []
    rows = [("L", "z", "L*X", "prediction", "error")]
    for L in Ls:
        x = loop.current("X", loop.LoopParams(L=L), mp.mpf(2))
        errs.append(float(abs(L * x - target)))
        rows.append((L, 2, complex(L * x), complex(target), errs[-1]))
    mono = all(a > b for a, b in zip(errs, errs[1:]))
    out = [Check("10 dense loop X ladder at z=2", mono, errs[-1], "decreasing", f"errors={[round(e, 4) for e in errs]}")]
    Lt = Ls[-1]
    vals = [Lt * loop.current("X", loop.LoopParams(mp.mpf(a), mp.mpf(b), L=Lt), mp.mpf(2))
            for a, b in (("1.3", "0.6"), ("0.8", "1.7"), ("1.1", "2.2"))]
    spread = float(max(abs(u - v) for u in vals for v in vals))
    out.append(Check("10 boundary-parameter independence", spread <= errs[-1], spread, errs[-1],
                     "spread over 3 (zeta1, zeta2) pairs vs measured error"))
    y = loop.current("Y", loop.LoopParams.homogeneous(Lt))
    rel = float(abs(Lt * y / (mp.sqrt(3) / 2) - 1))
    out.append(Check(f"10 homogeneous L*Y at L={Lt}", rel <= 0.10, rel, 0.10, f"L*Y={mp.nstr(Lt * y, 6)}"))
    gaps = []
    for yv in (mp.mpf("0.25"), mp.mpf("0.5")):
        gaps.append(float(abs(loop.measured_parity_gap(yv, Lt) / loop.parity_gap(yv) - 1)))
    out.append(Check(f"10 parity gap at L={Lt}", max(gaps) <= 0.10, max(gaps), 0.10, "y in {1/4, 1/2}"))
    lead = []
    for L in Ls:
        lead.append(float(abs(loop.univariate_value(mp.mpf("0.5"), L) / loop.univariate_leading(mp.mpf("0.5"), L) - 1)))
    out.append(Check("10 supplementary: univariate leading factor at y=1/2", True, lead[-1], None,
                     f"relative errors {[f'{v:.2e}' for v in lead]}", supplementary=True))
    return out, rows


# 11. character limits

def check_characters():
    out = []
    rows = [("family", "N", "error")]
    for name in ("alpha", "beta", "gamma"):
        lad = charlimits.voiculescu_ladder(name)
        errs = [e for _, e in lad]
        rows += [(name, N, e) for N, e in lad]
        exact = all(e <= 1e-30 for e in errs)
        mono = exact or all(a > b for a, b in zip(errs, errs[1:]))
        out.append(Check(f"11 Voiculescu {name} family", mono, errs[-1], "decreasing",
                         f"errors={[f'{e:.2e}' for e in errs]}"))
    lad = charlimits.voiculescu_ladder("gamma", finite_gamma=True)
    out.append(Check("11 supplementary: gamma family against delta=|lambda|/N", True, lad[-1][1], None,
                     f"errors={[f'{e:.2e}' for _, e in lad]}", supplementary=True))
    worst = mp.mpf(0)
    lam = Signature([2] * 35 + [1, 1, 0, 0, 0])
    nu = charlimits.nu_from_signature(lam)
    with mp.workprec(128):
        for x in (Fraction(3, 2), Fraction(3), Fraction(-1, 2), Fraction(2, 3)):
            ref = charlimits.q_prelimit(lam, [x])
            val, _ = charlimits.fnu(nu, x)
            worst = max(worst, abs(val - charlimits.to_mp(ref)))
        vanish = True
        vmax = mp.mpf(0)
        for i in (1, 2, 3):
            v, b = charlimits.fnu_sum(nu, Fraction(2) ** i)
            vmax = max(vmax, abs(v))
            vanish = vanish and abs(v) <= b + mp.mpf(2) ** (-mp.mp.prec + 24) * 2 ** (i * nu[-1] + 8)
    out.append(Check("11 F_nu vs q-ratio at N=40", worst <= 1e-8, float(worst), 1e-8, "q = 1/2"))
    out.append(Check("11 F_nu series vanishes at q^-i", vanish, float(vmax), "tail bound", "i = 1, 2, 3"))
    return out, rows


SUITES = {
    "oracles": lambda: ([check_oracles(), check_symplectic_schur(), check_quadrature()], []),
    "asymptotics": lambda: _combine(check_gue_ladder(), ([check_zero_profile()], [])),
    "tilings": lambda: ([check_bessel_mgf()] + check_gue_corners(), []),
    "asm": lambda: _combine((check_asm(), []), check_asm_gaussian()),
    "loop": lambda: check_loop(),
    "characters": lambda: check_characters(),
}


def _combine(a, b):
    return a[0] + b[0], a[1] + b[1]


def run_suite(name: str) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(name)
    t0 = time.time()
    checks, rows = SUITES[name]()
    if rows and not isinstance(rows[0][0], str):
        rows = [("N", "h", "error")] + rows
    return SuiteReport(name, checks, rows, time.time() - t0)
