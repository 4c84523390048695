"""Exact combinatorial arithmetic: binomials, symmetric functions, and
truncated power series over the rationals.

Everything here is integer or Fraction arithmetic; no floats anywhere. The
series type exists to expand quotients of the form

    prod_j (1 + s_j t)^(p_j)  /  prod_j (1 + s_j t)

whose truncated coefficients drive the Chern degree computations downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "binomial",
    "complete_homogeneous",
    "elementary_symmetric",
    "TruncatedSeries",
    "series_rational_coefficients",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial is only defined here for n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def complete_homogeneous(k: int, values: Sequence[int]) -> int:
    """Complete homogeneous symmetric function h_k of the given values.

    h_0 = 1 (also on an empty value list), h_k = 0 for k < 0, and for an
    empty list h_k = 0 whenever k > 0. Computed by the one-variable-at-a-time
    recurrence h'_k = h_k + v * h'_(k-1), which is just the expansion of
    1 / prod(1 - v t).
    """
    if k < 0:
        return 0
    coeffs = [0] * (k + 1)
    coeffs[0] = 1
    for v in values:
        for j in range(1, k + 1):
            # coeffs[j-1] already holds the updated value, which is what the
            # recurrence wants.
            coeffs[j] += v * coeffs[j - 1]
    return coeffs[k]


def elementary_symmetric(k: int, values: Sequence[int]) -> int:
    """Elementary symmetric function e_k; e_0 = 1, e_k = 0 for k < 0 or k > len."""
    vals = list(values)
    if k < 0 or k > len(vals):
        return 0
    coeffs = [0] * (k + 1)
    coeffs[0] = 1
    for v in vals:
        # Descending index so each update sees the previous variable's row.
        for j in range(k, 0, -1):
            coeffs[j] += v * coeffs[j - 1]
    return coeffs[k]


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series truncated at a fixed order, coefficients exact rationals.

    coefficients[k] is the t^k coefficient; len(coefficients) == order + 1.
    Multiplication truncates at the common order. Division requires the
    divisor to have a nonzero constant term.
    """

    coefficients: tuple[Fraction, ...]
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coefficients) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficients")
        if not all(isinstance(c, Fraction) for c in self.coefficients):
            raise TypeError("coefficients must be Fractions")

    @classmethod
    def of(cls, values: Iterable[int | Fraction], order: int) -> "TruncatedSeries":
        """Build a series from any coefficient prefix, padding with zeros."""
        coeffs = [Fraction(v) for v in values][: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.of([1], order)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside truncation order {self.order}")
        return self.coefficients[k]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("series orders must match")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j in range(0, n + 1 - i):
                out[i + j] += a * other.coefficients[j]
        return TruncatedSeries(tuple(out), n)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("series orders must match")
        if other.coefficients[0] == 0:
            raise ValueError("series division needs a nonzero constant term")
        n = self.order
        b0 = other.coefficients[0]
        out: list[Fraction] = []
        for k in range(n + 1):
            acc = self.coefficients[k]
            for j in range(1, k + 1):
                acc -= other.coefficients[j] * out[k - j]
            out.append(acc / b0)
        return TruncatedSeries(tuple(out), n)


def series_rational_coefficients(
    numerator_factors: Iterable[tuple[int, int]],
    denominator_factors: Iterable[int],
    order: int,
) -> TruncatedSeries:
    """Expand prod (1 + s t)^p / prod (1 + s t) through the given order.

    Numerator factors are (scalar s, exponent p) pairs with p >= 0;
    denominator factors are the scalars s of linear terms (1 + s t). With
    integer scalars every coefficient of the quotient is an integer, since
    dividing by (1 + s t) is the integer recurrence c'_k = c_k - s c'_(k-1).
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    series = TruncatedSeries.one(order)
    for s, p in numerator_factors:
        if p < 0:
            raise ValueError("numerator exponents must be non-negative")
        factor = TruncatedSeries.of(
            [Fraction(binomial(p, k)) * Fraction(s) ** k for k in range(order + 1)],
            order,
        )
        series = series * factor
    for s in denominator_factors:
        denom = TruncatedSeries.of([1, s], order)
        # The constant term of (1 + s t) is 1 by construction; the division
        # operator guards against a zero constant term anyway.
        series = series / denom
    return series
