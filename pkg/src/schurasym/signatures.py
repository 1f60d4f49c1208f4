"""Signatures (weakly decreasing integer tuples) and their strict shifts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .errors import ArgumentError


@dataclass(frozen=True)
class Signature:
    parts: tuple

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ArgumentError(f"signature must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Signature":
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(t) for t in text.split(","))

    @property
    def N(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_nonnegative(self) -> bool:
        return not self.parts or self.parts[-1] >= 0

    def require_nonnegative(self) -> "Signature":
        if not self.is_nonnegative():
            raise ArgumentError(f"nonnegative signature required: {self.parts}")
        return self

    def strict(self) -> "StrictSignature":
        N = self.N
        return StrictSignature([p + N - 1 - i for i, p in enumerate(self.parts)])

    def shifted(self, m: int) -> "Signature":
        return Signature([p + m for p in self.parts])

    def padded(self, N: int) -> "Signature":
        if N < self.N:
            raise ArgumentError("cannot pad to a shorter length")
        return Signature(self.parts + (0,) * (N - self.N))

    def __str__(self):
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class StrictSignature:
    parts: tuple

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a <= b:
                raise ArgumentError(f"strict signature must be strictly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def N(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def signature(self) -> Signature:
        N = self.N
        return Signature([m - (N - 1 - i) for i, m in enumerate(self.parts)])


def as_signature(lam) -> Signature:
    if isinstance(lam, Signature):
        return lam
    if isinstance(lam, StrictSignature):
        return lam.signature()
    if isinstance(lam, str):
        return Signature.parse(lam)
    return Signature(lam)


def interlacing_below(kappa: Sequence[int]) -> Iterator[tuple]:
    """All mu of length len(kappa)-1 with kappa[i+1] <= mu[i] <= kappa[i]."""
    ranges = [range(kappa[i + 1], kappa[i] + 1) for i in range(len(kappa) - 1)]
    for mu in product(*ranges):
        yield mu


def count_interlacing_below(kappa: Sequence[int]) -> int:
    n = 1
    for i in range(len(kappa) - 1):
        n *= kappa[i] - kappa[i + 1] + 1
    return n


def all_signatures(N: int, lo: int, hi: int) -> Iterator[Signature]:
    """Every signature of length N with parts in [lo, hi]."""
    def rec(prefix, top):
        if len(prefix) == N:
            yield Signature(prefix)
            return
        for p in range(top, lo - 1, -1):
            yield from rec(prefix + [p], p)
    yield from rec([], hi)


def asm_staircase(n: int) -> Signature:
    """(n-1, n-1, n-2, n-2, ..., 0, 0), length 2n."""
    parts = []
    for k in range(n - 1, -1, -1):
        parts += [k, k]
    return Signature(parts)


def half_staircase(L: int) -> Signature:
    """lambda_i = floor((L - i)/2), i = 1..L."""
    return Signature([(L - i) // 2 for i in range(1, L + 1)])


def frobenius_pairs(parts: Sequence[int]):
    """Modified Frobenius coordinates p_i = mu_i - i + 1/2, q_i = mu'_i - i + 1/2."""
    parts = [p for p in parts if p > 0]
    d = sum(1 for i, p in enumerate(parts) if p >= i + 1)
    conj = [sum(1 for p in parts if p >= j) for j in range(1, d + 1)]
    half = Fraction(1, 2)
    p = [parts[i] - (i + 1) + half for i in range(d)]
    q = [conj[i] - (i + 1) + half for i in range(d)]
    return p, q, d
