"""Truncated formal series indexed by root-lattice offsets below a basepoint.

The term with offset ``m`` stands for ``e^{lambda - sum m_i alpha_i}``.  Only
terms of height ``<= cutoff`` are kept.  Multiplying two series whose
offsets are all non-negative can only create terms of larger height, so the
truncated band is computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import BasepointMismatch


def _key(m) -> tuple[int, ...]:
    return tuple(int(x) for x in m)


@dataclass(frozen=True)
class FormalSeries:
    c: tuple
    cutoff: int
    coeffs: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, v in dict(self.coeffs).items():
            m = _key(m)
            if v and sum(m) <= self.cutoff:
                clean[m] = clean.get(m, 0) + v
        object.__setattr__(self, "coeffs",
                           {m: v for m, v in clean.items() if v})

    @classmethod
    def one(cls, c, cutoff: int) -> "FormalSeries":
        return cls(tuple(c), cutoff, {(0,) * len(c): 1})

    @classmethod
    def monomial(cls, c, cutoff: int, m, coeff: int = 1) -> "FormalSeries":
        return cls(tuple(c), cutoff, {_key(m): coeff})

    @classmethod
    def indicator(cls, c, cutoff: int, offsets: Iterable) -> "FormalSeries":
        return cls(tuple(c), cutoff, {_key(m): 1 for m in offsets})

    @classmethod
    def geometric(cls, c, cutoff: int, direction: Sequence[int],
                  power: int = 1) -> "FormalSeries":
        """``(1 - e^{-beta})^{-power}`` for a direction ``beta`` of positive height."""
        h = sum(direction)
        if h <= 0:
            raise ValueError("geometric series needs a direction of positive height")
        n = len(c)
        terms = {}
        k = 0
        while k * h <= cutoff:
            terms[tuple(k * x for x in direction)] = comb(k + power - 1, power - 1)
            k += 1
        if not terms:
            terms[(0,) * n] = 1
        return cls(tuple(c), cutoff, terms)

    def __getitem__(self, m) -> int:
        return self.coeffs.get(_key(m), 0)

    def _check(self, other: "FormalSeries") -> None:
        if tuple(self.c) != tuple(other.c) or self.cutoff != other.cutoff:
            raise BasepointMismatch(
                "series have different basepoints or cutoffs")

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        self._check(other)
        out = dict(self.coeffs)
        for m, v in other.coeffs.items():
            out[m] = out.get(m, 0) + v
        return FormalSeries(self.c, self.cutoff, out)

    def __neg__(self) -> "FormalSeries":
        return FormalSeries(self.c, self.cutoff,
                            {m: -v for m, v in self.coeffs.items()})

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        return self + (-other)

    def scale(self, k: int) -> "FormalSeries":
        return FormalSeries(self.c, self.cutoff,
                            {m: k * v for m, v in self.coeffs.items()})

    def shift(self, m) -> "FormalSeries":
        """Multiply by ``e^{-sum m_i alpha_i}``."""
        return FormalSeries(self.c, self.cutoff,
                            {tuple(a + b for a, b in zip(k, m)): v
                             for k, v in self.coeffs.items()})

    def __mul__(self, other: "FormalSeries") -> "FormalSeries":
        return series_product(self, other)

    def support(self) -> frozenset:
        return frozenset(self.coeffs)

    def truncate(self, cutoff: int) -> "FormalSeries":
        return FormalSeries(self.c, cutoff,
                            {m: v for m, v in self.coeffs.items()
                             if sum(m) <= cutoff})

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return (tuple(self.c) == tuple(other.c) and self.cutoff == other.cutoff
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((tuple(self.c), self.cutoff, frozenset(self.coeffs.items())))

    def to_json(self) -> list:
        return [{"offset": list(m), "coeff": v} for m, v in self.items()]


def series_product(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    a._check(b)
    N = a.cutoff
    out: dict = {}
    bitems = sorted(b.coeffs.items(), key=lambda kv: sum(kv[0]))
    for ma, va in a.coeffs.items():
        ha = sum(ma)
        for mb, vb in bitems:
            if ha + sum(mb) > N:
                break
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + va * vb
    return FormalSeries(a.c, N, out)


def product(factors: Iterable[FormalSeries], c, cutoff: int) -> FormalSeries:
    acc = FormalSeries.one(c, cutoff)
    for f in factors:
        acc = series_product(acc, f)
    return acc
