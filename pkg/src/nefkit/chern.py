"""Top Chern class degrees (Euler characteristics) in exact arithmetic.

Covers smooth complete intersections in projective space and smooth
hypersurfaces in weighted projective space. The complete intersection Euler
characteristic is exposed through three independent routes that must agree:

* euler_ci_formula: the symmetric-function expansion,
* euler_ci_series: the coefficient of a truncated rational series,
* euler_ci_recursive: a two-term recursion in (degrees, dimension).

On top of that sit Betti tables of the middle-heavy hypersurface shape,
signed Poincare polynomials, the normalized all-quadrics invariant b(n, r),
and closed forms for low-degree del Pezzo Euler characteristics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable

from .exactnum import (
    binomial,
    complete_homogeneous,
    elementary_symmetric,
    series_rational_coefficients,
)

__all__ = [
    "NegativeBetti",
    "NonIntegralResult",
    "CIType",
    "WeightedHypersurface",
    "BettiTable",
    "euler_ci_formula",
    "euler_ci_series",
    "euler_ci_recursive",
    "chern_degrees_ci",
    "quadrics_b",
    "betti_ci",
    "poincare_polynomial_ci",
    "euler_weighted",
    "euler_delpezzo_closed",
]


class NegativeBetti(ValueError):
    """The requested Betti table would have a negative middle entry."""


class NonIntegralResult(ValueError):
    """A weighted Euler characteristic came out non-integral."""


def _check_int(value: object, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer")
    return value


@dataclass(frozen=True)
class CIType:
    """A smooth complete intersection type.

    degrees: hypersurface degrees; stored canonically (sorted ascending,
    degree-1 factors dropped, each remaining entry >= 2).
    dimension: dimension n of the variety; the ambient space is P^(n+r).
    """

    degrees: tuple[int, ...]
    dimension: int

    def __post_init__(self) -> None:
        raw = tuple(_check_int(d, "degree") for d in self.degrees)
        if any(d < 1 for d in raw):
            raise ValueError("degrees must be >= 1")
        n = _check_int(self.dimension, "dimension")
        if n < 0:
            raise ValueError("dimension must be >= 0")
        object.__setattr__(self, "degrees", tuple(sorted(d for d in raw if d > 1)))
        object.__setattr__(self, "dimension", n)

    @property
    def codimension(self) -> int:
        return len(self.degrees)

    @property
    def ambient_dimension(self) -> int:
        return self.dimension + len(self.degrees)

    @property
    def degree_product(self) -> int:
        return math.prod(self.degrees)

    def __str__(self) -> str:
        degs = ",".join(str(d) for d in self.degrees)
        return f"({degs};{self.dimension})"


def euler_ci_formula(ci: CIType) -> int:
    """Euler characteristic via the symmetric-function expansion.

    chi = (prod d_j) * sum_{i=0}^{n} (-1)^(n-i) C(n+r+1, i) h_(n-i)(degrees).
    For r = 0 the sum collapses to n + 1, the Euler number of P^n.
    """
    n = ci.dimension
    r = ci.codimension
    total = sum(
        (-1) ** (n - i) * binomial(n + r + 1, i) * complete_homogeneous(n - i, ci.degrees)
        for i in range(n + 1)
    )
    return ci.degree_product * total


def euler_ci_series(ci: CIType) -> int:
    """Euler characteristic as (prod d_j) times a truncated series coefficient.

    The series is (1+t)^(n+r+1) / prod (1 + d_j t); its coefficients are
    integral for integer degrees, which is asserted.
    """
    n = ci.dimension
    r = ci.codimension
    series = series_rational_coefficients([(1, n + r + 1)], list(ci.degrees), n)
    value = series.coefficient(n) * ci.degree_product
    assert value.denominator == 1, "series route must land on an integer"
    return int(value)


@cache
def _chi_recursive(degrees: tuple[int, ...], n: int) -> int:
    if n == 0:
        return math.prod(degrees)
    if not degrees:
        return n + 1
    d = degrees[0]
    return d * _chi_recursive(degrees[1:], n) - (d - 1) * _chi_recursive(degrees, n - 1)


def euler_ci_recursive(ci: CIType) -> int:
    """Euler characteristic by peeling one degree at a time.

    chi(d_1..d_r; n) = d_1 chi(d_2..d_r; n) - (d_1 - 1) chi(d_1..d_r; n-1),
    with bases chi(...; 0) = prod d_j and chi(; n) = n + 1. Memoized on the
    canonical (degrees, n) key, so repeated scans are cheap.
    """
    return _chi_recursive(ci.degrees, ci.dimension)


def chern_degrees_ci(ci: CIType) -> list[int]:
    """Degrees deg(c_k(X) . h^(n-k)) for k = 0..n, h the hyperplane class.

    Entry 0 is the degree of X in its ambient projective space and entry n is
    the Euler characteristic.
    """
    n = ci.dimension
    r = ci.codimension
    series = series_rational_coefficients([(1, n + r + 1)], list(ci.degrees), n)
    out = []
    for k in range(n + 1):
        value = series.coefficient(k) * ci.degree_product
        assert value.denominator == 1
        out.append(int(value))
    return out


@cache
def _b_quadrics(n: int, r: int) -> Fraction:
    if r == 1:
        return Fraction((-1) ** n * (2 * n + 3) + 1, 4)
    if n == 1:
        return Fraction(r - 2)
    return _b_quadrics(n, r - 1) + _b_quadrics(n - 1, r)


def quadrics_b(n: int, r: int) -> Fraction:
    """Normalized Euler invariant of an n-dim intersection of r quadrics.

    b(n, r) = (-1)^n chi(2,...,2; n) / 2^r, computed by the recursion
    b(n, r) = b(n, r-1) + b(n-1, r) with bases
    b(n, 1) = ((-1)^n (2n+3) + 1) / 4 and b(1, r) = r - 2.
    """
    if _check_int(n, "n") < 1 or _check_int(r, "r") < 1:
        raise ValueError("quadrics_b needs n >= 1 and r >= 1")
    return _b_quadrics(n, r)


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers b_0..b_(2n) of a smooth complete intersection.

    Hard Lefschetz forces the palindromic hypersurface shape: b_i = 1 for
    even i != n, b_i = 0 for odd i != n, and all interest sits in b_n.
    """

    betti: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.betti) % 2 == 0:
            raise ValueError("need an odd number of entries b_0..b_(2n)")
        if any(b < 0 for b in self.betti):
            raise NegativeBetti("Betti numbers must be non-negative")
        if any(self.betti[i] != self.betti[-1 - i] for i in range(len(self.betti))):
            raise ValueError("Betti table must satisfy Poincare duality")

    @property
    def dimension(self) -> int:
        return (len(self.betti) - 1) // 2

    @property
    def middle(self) -> int:
        return self.betti[self.dimension]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))


def betti_ci(ci: CIType) -> BettiTable:
    """Betti table of a smooth complete intersection of dimension >= 1.

    Off-middle entries follow the ambient projective space; the middle entry
    is solved from the Euler characteristic: b_n = chi - n for even n and
    b_n = n + 1 - chi for odd n.
    """
    n = ci.dimension
    if n < 1:
        raise ValueError("betti_ci needs dimension >= 1")
    chi = euler_ci_formula(ci)
    middle = chi - n if n % 2 == 0 else n + 1 - chi
    if middle < 0:
        raise NegativeBetti(f"middle Betti number {middle} < 0 for {ci}")
    betti = [1 if i % 2 == 0 else 0 for i in range(2 * n + 1)]
    betti[n] = middle
    return BettiTable(tuple(betti))


def poincare_polynomial_ci(ci: CIType) -> list[int]:
    """Coefficients of p(t) = sum_i b_i (-t)^i, index k = coefficient of t^k.

    This signed convention makes p multiplicative in the fibrations the
    diagonal module analyzes, with p(t) = 1 + t^2 for the projective line.
    """
    table = betti_ci(ci)
    return [(-1) ** i * b for i, b in enumerate(table.betti)]


@dataclass(frozen=True)
class WeightedHypersurface:
    """A degree-d hypersurface in weighted projective space P(a_0..a_m).

    Needs at least five weights (ambient dimension m >= 4), all weights >= 1.
    The hypersurface has dimension m - 1.
    """

    weights: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        ws = tuple(_check_int(w, "weight") for w in self.weights)
        if len(ws) < 5:
            raise ValueError("need at least five weights")
        if any(w < 1 for w in ws):
            raise ValueError("weights must be >= 1")
        d = _check_int(self.degree, "degree")
        if d < 1:
            raise ValueError("degree must be >= 1")
        object.__setattr__(self, "weights", ws)

    @property
    def ambient_dimension(self) -> int:
        return len(self.weights) - 1

    @property
    def dimension(self) -> int:
        return len(self.weights) - 2

    @property
    def weight_product(self) -> int:
        return math.prod(self.weights)


def euler_weighted(wh: WeightedHypersurface) -> Fraction:
    """Euler characteristic of a smooth weighted hypersurface.

    chi = (sum_{i=0}^{m-1} e_(m-1-i)(a_0..a_m) (-d)^i) * d / (a_0...a_m),
    where m is the ambient dimension. The hyperplane-power degree d / prod(a)
    is kept as an exact fraction; a non-integral total signals a
    weights/degree combination outside the formula's validity and raises
    NonIntegralResult.
    """
    m = wh.ambient_dimension
    d = wh.degree
    total = sum(
        elementary_symmetric(m - 1 - i, wh.weights) * (-d) ** i for i in range(m)
    )
    value = Fraction(total * d, wh.weight_product)
    if value.denominator != 1:
        raise NonIntegralResult(
            f"chi = {value} is not an integer for weights {wh.weights}, degree {d}"
        )
    return value


def euler_delpezzo_closed(n: int, degree: int) -> int:
    """Closed-form Euler characteristics of del Pezzo manifolds of degree 1, 2.

    Degree 1 (sextic in P(3,2,1,...,1)):  chi = (3n + 2 + (-5)^n) / 3.
    Degree 2 (quartic in P(2,1,...,1)):   chi = (4n + 5 - (-3)^(n+1)) / 4.
    Both numerators are divisible exactly; n must be >= 3.
    """
    if _check_int(n, "n") < 3:
        raise ValueError("del Pezzo manifolds here have dimension >= 3")
    if degree == 1:
        numerator, modulus = 3 * n + 2 + (-5) ** n, 3
    elif degree == 2:
        numerator, modulus = 4 * n + 5 - (-3) ** (n + 1), 4
    else:
        raise ValueError("closed forms cover degrees 1 and 2 only")
    quotient, remainder = divmod(numerator, modulus)
    assert remainder == 0, "closed-form numerator must be divisible"
    return quotient
