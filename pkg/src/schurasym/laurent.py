"""Exact Laurent polynomials: exponent -> rational coefficient."""
from __future__ import annotations

from fractions import Fraction
from math import comb

import mpmath as mp

from .errors import ArgumentError, DomainError
from .scalars import Jet, is_exact, to_mp


class LaurentPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        c = {}
        for e, v in (coeffs or {}).items():
            v = Fraction(v) if isinstance(v, int) else v
            if v != 0:
                c[int(e)] = v
        self.coeffs = c

    @classmethod
    def monomial(cls, e, c=1):
        return cls({e: c})

    @classmethod
    def x_minus_1_power(cls, n):
        """(x - 1)^n for n >= 0."""
        return cls({k: comb(n, k) * (-1) ** (n - k) for k in range(n + 1)})

    def support(self):
        return sorted(self.coeffs, reverse=True)

    def __eq__(self, o):
        if not isinstance(o, LaurentPolynomial):
            o = LaurentPolynomial({0: o})
        return self.coeffs == o.coeffs

    def __repr__(self):
        items = ", ".join(f"{e}: {c}" for e, c in sorted(self.coeffs.items(), reverse=True))
        return f"LaurentPolynomial({{{items}}})"

    def __add__(self, o):
        if not isinstance(o, LaurentPolynomial):
            o = LaurentPolynomial({0: o})
        c = dict(self.coeffs)
        for e, v in o.coeffs.items():
            c[e] = c.get(e, 0) + v
        return LaurentPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self.coeffs.items()})

    def __sub__(self, o):
        return self + (-o if isinstance(o, LaurentPolynomial) else -o)

    def __mul__(self, o):
        if not isinstance(o, LaurentPolynomial):
            return LaurentPolynomial({e: v * o for e, v in self.coeffs.items()})
        c = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in o.coeffs.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPolynomial(c)

    __rmul__ = __mul__

    def shift(self, m):
        """Multiply by x^m."""
        return LaurentPolynomial({e + m: v for e, v in self.coeffs.items()})

    def apply_D(self, power=1):
        """(x d/dx)^power."""
        return LaurentPolynomial({e: v * e ** power for e, v in self.coeffs.items()})

    def apply_eigen(self, alpha, power=1):
        """Multiply the coefficient of x^m by alpha(m)^power."""
        return LaurentPolynomial({e: v * alpha(e) ** power for e, v in self.coeffs.items()})

    def divide_x_minus_1(self, n=1):
        """Exact division by (x - 1)^n; raises if not divisible."""
        p = self
        for _ in range(n):
            p = p._div_once()
        return p

    def _div_once(self):
        if not self.coeffs:
            return self
        hi = max(self.coeffs)
        lo = min(self.coeffs)
        # synthetic division from the top exponent down
        out = {}
        carry = 0
        for e in range(hi, lo - 1, -1):
            carry = carry + self.coeffs.get(e, 0)
            if e == lo:
                if carry != 0:
                    raise ArgumentError("not divisible by (x - 1)")
                break
            out[e - 1] = carry
        return LaurentPolynomial(out)

    def is_polynomial(self):
        return all(e >= 0 for e in self.coeffs)

    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def dense(self):
        """Coefficient list [c_0, c_1, ..., c_deg] for a genuine polynomial."""
        if not self.is_polynomial():
            raise ArgumentError("negative exponents present")
        return [self.coeffs.get(e, Fraction(0)) for e in range(self.degree() + 1)]

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Horner-style evaluation; exact on rationals, jets are supported."""
        if not self.coeffs:
            return 0 * x
        if x == 0 and min(self.coeffs) < 0:
            raise DomainError("negative exponent at x = 0")
        if not (is_exact(x) or isinstance(x, Jet)):
            x = to_mp(x)
        hi = max(self.coeffs)
        lo = min(self.coeffs)
        acc = 0
        for e in range(hi, lo - 1, -1):
            acc = acc * x + self._cvt(self.coeffs.get(e, 0), x)
        if lo >= 0:
            return acc * x ** lo
        return acc / x ** (-lo)

    @staticmethod
    def _cvt(c, x):
        if is_exact(x) or isinstance(x, Jet) and is_exact(x.c[0]):
            return c
        return mp.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else c

    def evaluate_terms(self, x):
        """Sum of monomials together with the largest term magnitude (for cancellation loss)."""
        tot = 0
        big = 0
        for e, c in self.coeffs.items():
            t = self._cvt(c, x) * x ** e
            tot = tot + t
            m = abs(t)
            if m > big:
                big = m
        return tot, big
