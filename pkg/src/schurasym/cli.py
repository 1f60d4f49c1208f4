"""Command-line front end.

Every output embeds the RunConfig that produced it.  Outputs are
deterministic; wall time goes to stderr so files stay byte-identical.
Exit status: 0 success, 1 module error or failed suite, 2 usage error.
"""
from __future__ import annotations

import csv
import io
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import click
import mpmath as mp

from . import __version__
from .errors import SchurAsymError

DEFAULT_PREC = 128


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    precision_bits: int = DEFAULT_PREC
    seed: int | None = None
    output_path: str | None = None
    format: str = "json"


def _default_prec():
    raw = os.environ.get("SCHURASYM_PREC")
    if raw is None:
        return DEFAULT_PREC
    if not raw.strip().isdigit():
        raise click.UsageError(f"SCHURASYM_PREC must be a positive integer, got {raw!r}")
    return max(53, int(raw))


def _scalar(text: str):
    """Rational literal ('3', '2/5', '-1.25') or complex ('1+2j')."""
    try:
        return Fraction(text)
    except ValueError:
        pass
    try:
        return mp.mpmathify(complex(text.replace("i", "j")))
    except ValueError:
        raise click.BadParameter(f"not a number: {text!r}")


def _signature(text: str):
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise click.BadParameter(f"signature must be comma-separated integers: {text!r}")


def _to_json(v):
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, (mp.mpf, mp.mpc)):
        return mp.nstr(v, 30)
    if isinstance(v, (list, tuple)):
        return [_to_json(x) for x in v]
    if isinstance(v, dict):
        return {k: _to_json(x) for k, x in v.items()}
    if isinstance(v, complex):
        return str(v)
    return v


def _emit(cfg: RunConfig, result: dict, rows=None):
    """Write JSON (config + result) or CSV (config comment line + rows)."""
    cfg_d = _to_json(asdict(cfg))
    if cfg.format == "csv":
        buf = io.StringIO()
        buf.write("# " + json.dumps({"config": cfg_d, "version": __version__}, sort_keys=True) + "\n")
        w = csv.writer(buf, lineterminator="\n")
        if rows is None:
            rows = [list(result.keys()), [_to_json(v) for v in result.values()]]
        for r in rows:
            w.writerow([_to_json(x) for x in r])
        text = buf.getvalue()
    else:
        payload = {"config": cfg_d, "version": __version__}
        payload.update(_to_json(result))
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _run(cfg: RunConfig, fn):
    t0 = time.time()
    try:
        with mp.workprec(cfg.precision_bits):
            ok = fn()
    except SchurAsymError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(1)
    click.echo(f"wall time {time.time() - t0:.2f}s", err=True)
    if ok is False:
        sys.exit(1)


common = [
    click.option("--prec", "prec", type=int, default=None, help="working precision in bits (default $SCHURASYM_PREC or 128)"),
    click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json"),
    click.option("--output", "output", type=click.Path(dir_okay=False), default=None),
]


def with_common(f):
    for opt in reversed(common):
        f = opt(f)
    return f


def _cfg(command, params, prec, fmt, output, seed=None):
    return RunConfig(command, params, prec if prec is not None else _default_prec(), seed, output, fmt)


@click.group()
@click.version_option(__version__)
def main():
    """Normalized Schur-type characters, their asymptotics and applications."""


@main.command("eval")
@click.option("--family", type=click.Choice(["schur", "symplectic", "jacobi"]), required=True)
@click.option("--lambda", "lam", required=True, help="comma-separated signature")
@click.option("--x", "xs", multiple=True, required=True, help="variable value; repeat for several")
@click.option("--N", "N", type=int, default=None)
@click.option("--q", default=None, help="q-specialization (schur, symplectic)")
@click.option("--a", default=None, help="jacobi parameter a")
@click.option("--b", default=None, help="jacobi parameter b")
@with_common
def eval_cmd(family, lam, xs, N, q, a, b, prec, fmt, output):
    """Normalized character at the given variables."""
    from .symfunc import normalized_character
    parts = _signature(lam)
    if N is not None and N != len(parts):
        raise click.UsageError("--N must equal the signature length")
    if family == "jacobi" and (a is None or b is None):
        raise click.UsageError("jacobi needs --a and --b")
    params = {"family": family, "lambda": parts, "x": list(xs), "N": N or len(parts), "q": q, "a": a, "b": b}
    cfg = _cfg("eval", params, prec, fmt, output)

    def go():
        vals = [_scalar(x) for x in xs]
        pj = {"a": _scalar(a), "b": _scalar(b)} if family == "jacobi" else None
        v = normalized_character(family, parts, vals, q=_scalar(q) if q else None, params=pj)
        _emit(cfg, {"value": v})

    _run(cfg, go)


@main.group("asm")
def asm_group():
    """Alternating sign matrices and the six-vertex model."""


@asm_group.command("count")
@click.option("--n", type=int, required=True)
@click.option("--method", type=click.Choice(["enumerate", "transfer"]), default="enumerate")
@with_common
def asm_count(n, method, prec, fmt, output):
    from . import asm
    cfg = _cfg("asm count", {"n": n, "method": method}, prec, fmt, output)

    def go():
        c = len(asm.asm_enumerate(n)) if method == "enumerate" else asm.transfer_count(n)
        _emit(cfg, {"count": c})

    _run(cfg, go)


@asm_group.command("gaussian")
@click.option("--ladder", default="64,128,256,512")
@click.option("--s", "s_grid", default="0.25,0.5,1")
@with_common
def asm_gaussian(ladder, s_grid, prec, fmt, output):
    """(n, s, error) ladder for the staircase observable."""
    from . import asm
    ns = _signature(ladder)
    ss = [float(v) for v in s_grid.split(",")]
    cfg = _cfg("asm gaussian", {"ladder": ns, "s": ss}, prec, fmt, output)

    def go():
        rep = asm.asm_gaussian_check(ns, ss)
        rows = [("n", "s", "error", "phase", "prec", "loss_bits")] + rep.rows
        _emit(cfg, {"rows": rep.rows, "decreasing": rep.decreasing, "final_max": rep.final_max,
                    "passed": rep.passed}, rows)

    _run(cfg, go)


@main.group("asympt")
def asympt_group():
    """Steepest-descent predictions."""


@asympt_group.command("gue")
@click.option("--profile", default="halfstair", help="zero | halfstair | dense_loop | linear(a) | t:f;t:f;...")
@click.option("--h", default="0")
@click.option("--N", "N", type=int, required=True)
@with_common
def asympt_gue(profile, h, N, prec, fmt, output):
    """exp(sqrt(N) E h + S h^2/2) with E, S in closed form."""
    from .asymptotics import Profile, gue_regime
    cfg = _cfg("asympt gue", {"profile": profile, "h": h, "N": N}, prec, fmt, output)

    def go():
        f = Profile.preset(profile)
        r = gue_regime(f, _scalar(h), N)
        _emit(cfg, {"E": r.E, "S": r.S, "prediction": r.prediction})

    _run(cfg, go)


@asympt_group.command("first-order")
@click.option("--profile", default="halfstair")
@click.option("--y", required=True)
@with_common
def asympt_first(profile, y, prec, fmt, output):
    """Critical point and first-order limit at y."""
    from .asymptotics import Profile, critical_point, first_order_limit
    cfg = _cfg("asympt first-order", {"profile": profile, "y": y}, prec, fmt, output)

    def go():
        f = Profile.preset(profile)
        yv = _scalar(y)
        _emit(cfg, {"w0": critical_point(f, yv), "limit": first_order_limit(f, yv)})

    _run(cfg, go)


@main.group("tilings")
def tilings_group():
    """Uniform lozenge tilings as Gelfand-Tsetlin patterns."""


@tilings_group.command("sample")
@click.option("--lambda", "lam", required=True)
@click.option("--count", type=int, default=10)
@click.option("--seed", type=int, default=0)
@click.option("--method", type=click.Choice(["exact", "mcmc"]), default="exact")
@click.option("--sweeps", type=int, default=None)
@with_common
def tilings_sample(lam, count, seed, method, sweeps, prec, fmt, output):
    """Sample patterns; CSV rows are (sample, k, positions...)."""
    from . import tilings
    parts = _signature(lam)
    cfg = _cfg("tilings sample", {"lambda": parts, "count": count, "method": method, "sweeps": sweeps},
               prec, fmt, output, seed)

    def go():
        b = tilings.sample_tiling(parts, count, seed, method, sweeps)
        rows = [("sample", "k", "positions")] + b.to_csv_rows()
        pats = [[list(r) for r in p.rows] for p in b.patterns]
        _emit(cfg, {"method": b.method, "patterns": pats}, rows)

    _run(cfg, go)


@tilings_group.command("gue")
@click.option("--profile", default="halfstair")
@click.option("--N", "N", type=int, default=30)
@click.option("--k", type=int, default=1)
@click.option("--samples", type=int, default=20000)
@click.option("--seed", type=int, default=0)
@with_common
def tilings_gue(profile, N, k, samples, seed, prec, fmt, output):
    """Rescaled row-k statistics against GUE corners targets."""
    from . import tilings
    from .asymptotics import Profile
    cfg = _cfg("tilings gue", {"profile": profile, "N": N, "k": k, "samples": samples}, prec, fmt, output, seed)

    def go():
        rep = tilings.gue_corners_test(Profile.preset(profile), N, k, samples, seed)
        rows = [("stat", "index", "value", "target", "se", "sigmas", "pass")] + \
            [[c["stat"], c["index"], c["value"], c["target"], c["se"], c["sigmas"], c["pass"]] for c in rep["checks"]]
        _emit(cfg, rep, rows)
        return rep["pass"]

    _run(cfg, go)


@main.command("suite")
@click.argument("name", type=click.Choice(["oracles", "asymptotics", "tilings", "asm", "loop", "characters"]))
@with_common
def suite_cmd(name, prec, fmt, output):
    """Run an acceptance block; nonzero exit if any check fails."""
    from .suites import run_suite
    cfg = _cfg("suite", {"name": name}, prec, fmt, output)

    def go():
        rep = run_suite(name)
        for c in rep.checks:
            click.echo(c.line(), err=True)
        checks = [{"name": c.name, "passed": c.passed, "value": str(c.value), "threshold": str(c.threshold),
                   "detail": c.detail, "supplementary": c.supplementary} for c in rep.checks]
        _emit(cfg, {"suite": name, "passed": rep.passed, "checks": checks}, rep.rows or None)
        return rep.passed

    _run(cfg, go)


if __name__ == "__main__":
    main()
