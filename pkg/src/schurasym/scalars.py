"""Scalar kinds: exact rationals, recorded-precision mpmath values, and jets.

Exact values are plain ``int``/``Fraction``.  ``ApproxScalar`` wraps an mpmath
number together with the working precision it was produced at.  ``Jet`` is a
truncated Taylor series in an infinitesimal eps (order 1 gives dual numbers).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import mpmath as mp

from .errors import ArgumentError

def _env_prec(default=128):
    raw = os.environ.get("SCHURASYM_PREC", "")
    return max(53, int(raw)) if raw.strip().isdigit() else default


DEFAULT_PREC = _env_prec()


def is_exact(x) -> bool:
    if isinstance(x, Jet):
        return all(is_exact(c) for c in x.c)
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def as_exact(x):
    """Coerce ints, Fractions and rational strings like '3/2' to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ArgumentError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class ApproxScalar:
    re: mp.mpf
    im: mp.mpf
    precision_bits: int

    @classmethod
    def from_mp(cls, z, prec: int | None = None) -> "ApproxScalar":
        prec = prec or mp.mp.prec
        if prec < 53:
            raise ArgumentError("precision_bits must be at least 53")
        z = mp.mpmathify(z)
        if isinstance(z, mp.mpc):
            return cls(z.real, z.imag, prec)
        return cls(z, mp.mpf(0), prec)

    def to_mp(self):
        if self.im == 0:
            return mp.mpf(self.re)
        return mp.mpc(self.re, self.im)

    def _combine(self, other, op):
        if isinstance(other, ApproxScalar):
            # accuracy is bounded by the less precise operand; compute at the larger
            prec = min(self.precision_bits, other.precision_bits)
            with mp.workprec(max(self.precision_bits, other.precision_bits)):
                return ApproxScalar.from_mp(op(self.to_mp(), other.to_mp()), prec)
        with mp.workprec(self.precision_bits):
            o = mp.mpf(other.numerator) / other.denominator if isinstance(other, Fraction) else other
            return ApproxScalar.from_mp(op(self.to_mp(), o), self.precision_bits)

    def __add__(self, o):
        return self._combine(o, lambda a, b: a + b)

    def __radd__(self, o):
        return self._combine(o, lambda a, b: b + a)

    def __sub__(self, o):
        return self._combine(o, lambda a, b: a - b)

    def __rsub__(self, o):
        return self._combine(o, lambda a, b: b - a)

    def __mul__(self, o):
        return self._combine(o, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, o):
        return self._combine(o, lambda a, b: a / b)

    def __rtruediv__(self, o):
        return self._combine(o, lambda a, b: b / a)

    def __neg__(self):
        return ApproxScalar(-self.re, -self.im, self.precision_bits)

    def __abs__(self):
        with mp.workprec(self.precision_bits):
            return abs(self.to_mp())

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        with mp.workprec(self.precision_bits):
            digits = int(self.precision_bits * 0.30103)
            return mp.nstr(self.to_mp(), digits)


def to_mp(x):
    """Convert an exact or wrapped scalar to an mpmath number at current precision."""
    if isinstance(x, ApproxScalar):
        return x.to_mp()
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    if isinstance(x, Jet):
        return Jet([to_mp(c) for c in x.c])
    return mp.mpmathify(x)


def magnitude(x):
    """Size used for pivot selection; looks at the value part of jets."""
    if isinstance(x, Jet):
        return magnitude(x.c[0])
    if isinstance(x, (int, Fraction)):
        return abs(x)
    return abs(x)


class Jet:
    """Truncated power series c[0] + c[1] eps + ... + c[n] eps^n.

    Coefficients may be any ring elements, including other jets.  With
    ``order == 1`` this is the dual-number ring, eps^2 = 0.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = tuple(coeffs)

    @classmethod
    def variable(cls, x, order=1, seed=1):
        return cls((x, seed) + (0,) * (order - 1))

    @classmethod
    def const(cls, x, order=1):
        return cls((x,) + (0,) * order)

    @property
    def order(self):
        return len(self.c) - 1

    @property
    def val(self):
        return self.c[0]

    @property
    def der(self):
        return self.c[1]

    def _lift(self, o):
        if isinstance(o, Jet):
            if o.order != self.order:
                raise ArgumentError("jet order mismatch")
            return o
        return Jet((o,) + (0,) * self.order)

    def __add__(self, o):
        o = self._lift(o)
        return Jet(a + b for a, b in zip(self.c, o.c))

    __radd__ = __add__

    def __sub__(self, o):
        o = self._lift(o)
        return Jet(a - b for a, b in zip(self.c, o.c))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __neg__(self):
        return Jet(-a for a in self.c)

    def __mul__(self, o):
        if not isinstance(o, Jet):
            return Jet(a * o for a in self.c)
        o = self._lift(o)
        n = len(self.c)
        out = []
        for r in range(n):
            s = self.c[0] * o.c[r]
            for i in range(1, r + 1):
                s = s + self.c[i] * o.c[r - i]
            out.append(s)
        return Jet(out)

    __rmul__ = __mul__

    def inverse(self):
        a0 = self.c[0]
        if a0 == 0:
            raise ZeroDivisionError("jet with zero value part is not invertible")
        inv0 = 1 / a0
        out = [inv0]
        for r in range(1, len(self.c)):
            s = self.c[1] * out[r - 1]
            for i in range(2, r + 1):
                s = s + self.c[i] * out[r - i]
            out.append(-s * inv0)
        return Jet(out)

    def __truediv__(self, o):
        if not isinstance(o, Jet):
            return Jet(a / o for a in self.c)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return self.inverse() * o

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ArgumentError("jets support integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        out = Jet.const(1, self.order) if not isinstance(self.c[0], Jet) else self._lift(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o):
        if isinstance(o, Jet):
            return self.c == o.c
        return self.c[0] == o and all(a == 0 for a in self.c[1:])

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Jet({list(self.c)!r})"


def jet_log(x: Jet) -> Jet:
    """log of a first-order jet over mpmath scalars (principal branch)."""
    if x.order != 1:
        raise ArgumentError("jet_log supports order-1 jets")
    return Jet((mp.log(x.c[0]), x.c[1] / x.c[0]))


def jet_exp(x: Jet) -> Jet:
    if x.order != 1:
        raise ArgumentError("jet_exp supports order-1 jets")
    e = mp.exp(x.c[0])
    return Jet((e, e * x.c[1]))
