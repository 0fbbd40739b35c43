"""Truncated formal q-series with exact rational data.

A series is sum_k coeffs[k] * q^(offset + k*step); it is exact for all
exponents up to offset + order*step and silently says nothing beyond.
Arithmetic aligns operands on a common exponent lattice and truncates to
the range both sides cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    if a == 0:
        return abs(b)
    if b == 0:
        return abs(a)
    return Fraction(gcd(a.numerator * b.denominator, b.numerator * a.denominator),
                    a.denominator * b.denominator)


@dataclass(frozen=True)
class QSeries:
    offset: Fraction
    coefficients: Tuple[Fraction, ...]
    step: Fraction = Fraction(1)

    def __post_init__(self):
        if self.step <= 0:
            raise ValueError("step must be positive")
        if not self.coefficients:
            raise ValueError("series needs at least one retained coefficient")

    @classmethod
    def make(cls, offset, coefficients: Sequence, step=Fraction(1)) -> "QSeries":
        return cls(Fraction(offset), tuple(Fraction(c) for c in coefficients),
                   Fraction(step))

    @classmethod
    def constant(cls, value, order: int) -> "QSeries":
        return cls.make(0, [value] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def top_exponent(self) -> Fraction:
        """Largest exponent through which the series is exact."""
        return self.offset + self.order * self.step

    def coefficient(self, exponent) -> Fraction:
        """Coefficient at an absolute exponent (must be retained)."""
        k = (Fraction(exponent) - self.offset) / self.step
        if k.denominator != 1 or not 0 <= k <= self.order:
            raise KeyError(f"exponent {exponent} not on the retained lattice")
        return self.coefficients[int(k)]

    def shifted(self, exponent) -> "QSeries":
        return QSeries(self.offset + Fraction(exponent), self.coefficients, self.step)

    def scaled(self, c) -> "QSeries":
        return QSeries(self.offset, tuple(Fraction(c) * a for a in self.coefficients),
                       self.step)

    def truncated(self, order: int) -> "QSeries":
        if order >= self.order:
            return self
        return QSeries(self.offset, self.coefficients[: order + 1], self.step)

    def _aligned(self, other: "QSeries"):
        step = _frac_gcd(_frac_gcd(self.step, other.step),
                         other.offset - self.offset)
        if step == 0:
            step = self.step
        offset = min(self.offset, other.offset)
        top = min(self.top_exponent, other.top_exponent)
        n = int((top - offset) / step)
        return offset, step, n

    def __add__(self, other: "QSeries") -> "QSeries":
        offset, step, n = self._aligned(other)
        coeffs = [Fraction(0)] * (n + 1)
        for series in (self, other):
            ratio = series.step / step
            base = (series.offset - offset) / step
            for k, a in enumerate(series.coefficients):
                pos = base + k * ratio
                if pos.denominator == 1 and pos <= n:
                    coeffs[int(pos)] += a
        return QSeries(offset, tuple(coeffs), step)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + other.scaled(-1)

    def __mul__(self, other: "QSeries") -> "QSeries":
        step = _frac_gcd(self.step, other.step)
        offset = self.offset + other.offset
        # exactness: each factor is known through its top; the product is
        # exact through min(top_a + offset_b, top_b + offset_a)
        top = min(self.top_exponent + other.offset,
                  other.top_exponent + self.offset)
        n = int((top - offset) / step)
        coeffs = [Fraction(0)] * (n + 1)
        ra, rb = self.step / step, other.step / step
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                if b == 0:
                    continue
                pos = i * ra + j * rb
                if pos.denominator == 1 and pos <= n:
                    coeffs[int(pos)] += a * b
        return QSeries(offset, tuple(coeffs), step)

    def agrees_with(self, other: "QSeries", through_order: int) -> bool:
        """Exact equality of all terms up to min offset + through_order."""
        offset, step, n = self._aligned(other)
        n = min(n, int(Fraction(through_order) / step))
        grid = [offset + k * step for k in range(n + 1)]

        def at(series, e):
            k = (e - series.offset) / series.step
            if k.denominator == 1 and 0 <= k <= series.order:
                return series.coefficients[int(k)]
            return Fraction(0)

        return all(at(self, e) == at(other, e) for e in grid)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, a in enumerate(self.coefficients):
            if a == 0:
                continue
            e = k * self.step
            if e == 0:
                terms.append(str(a))
            else:
                q = "q" if e == 1 else f"q^{e}" if e.denominator == 1 else f"q^{{{e}}}"
                terms.append(q if a == 1 else f"{a}{q}")
        body = " + ".join(terms)
        if self.offset == 0:
            return body
        head = (f"q^{self.offset}" if self.offset.denominator == 1
                else f"q^{{{self.offset}}}")
        return f"{head}({body})"
