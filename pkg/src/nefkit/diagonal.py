"""Nef-diagonal classification with machine-checkable verdicts.

A verdict is three-valued: the diagonal class of a variety is certified
not nef (with a numeric or named witness), certified nef (with a structural
reason), or the question is open. Criteria are applied in a fixed priority
order: positive structural families first, then the exception table, then the
sign of the diagonal self-intersection, then the projection degree bound.

The module also hosts the del Pezzo classification table, the nef-and-big
filter, the consistency scans, and the Poincare polynomial obstruction to
fibering an odd-dimensional intersection of two quadrics in projective lines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import cache
from importlib import resources
from itertools import combinations_with_replacement
from typing import Iterator, Mapping, NamedTuple

from .chern import (
    CIType,
    euler_ci_formula,
    euler_delpezzo_closed,
    poincare_polynomial_ci,
    quadrics_b,
)

__all__ = [
    "Status",
    "Reason",
    "Verdict",
    "InvalidDelPezzo",
    "ScanViolation",
    "ProjectionBoundCheck",
    "DelPezzoRow",
    "DELPEZZO_TABLE",
    "FibrationObstruction",
    "ScanReport",
    "UNCLASSIFIED_REFERENCE",
    "OPEN_TWO_QUADRICS_REFERENCE",
    "verdict_curve",
    "projection_bound_violated",
    "verdict_ci",
    "verdict_delpezzo",
    "nef_big_filter",
    "cp_fibration_obstruction",
    "scan_ci",
]


class Status(str, Enum):
    NOT_NEF = "NotNef"
    NEF = "Nef"
    OPEN = "Open"


class Reason(str, Enum):
    NEGATIVE_SELF_INTERSECTION = "NegativeSelfIntersection"
    PROJECTION_BOUND = "ProjectionBound"
    NEGATIVE_EFFECTIVE_PAIR = "NegativeEffectivePair"
    BIRATIONAL_CONTRACTION = "BirationalContraction"
    HOMOGENEOUS = "Homogeneous"
    FAKE_PROJECTIVE_SPACE = "FakeProjectiveSpace"
    GROUP_VARIETY = "GroupVariety"
    OPEN_QUESTION = "OpenQuestion"
    K3_SURFACE = "K3Surface"
    NON_NEGATIVE_PAIRINGS = "NonNegativePairings"


_REASONS_BY_STATUS = {
    Status.NOT_NEF: {
        Reason.NEGATIVE_SELF_INTERSECTION,
        Reason.PROJECTION_BOUND,
        Reason.NEGATIVE_EFFECTIVE_PAIR,
        Reason.BIRATIONAL_CONTRACTION,
        Reason.K3_SURFACE,
    },
    Status.NEF: {
        Reason.HOMOGENEOUS,
        Reason.FAKE_PROJECTIVE_SPACE,
        Reason.GROUP_VARIETY,
        Reason.NON_NEGATIVE_PAIRINGS,
    },
    Status.OPEN: {Reason.OPEN_QUESTION},
}

# Stable reference ids carried by Open verdicts.
OPEN_TWO_QUADRICS_REFERENCE = "odd-intersection-of-two-quadrics"
UNCLASSIFIED_REFERENCE = "unclassified-by-implemented-criteria"


class InvalidDelPezzo(ValueError):
    """(dimension, degree) is not a del Pezzo manifold of the classification."""


class ScanViolation(Exception):
    """A scan law failed; this signals an implementation bug, not bad input."""

    def __init__(self, law: str, subject: object, message: str) -> None:
        super().__init__(f"{law} violated at {subject}: {message}")
        self.law = law
        self.subject = subject


@dataclass(frozen=True)
class Verdict:
    """Outcome of a nef-diagonal test.

    Every NotNef verdict carries a witness a referee can re-check: a negative
    intersection number, a violated numeric bound, or a named table entry.
    Nef and Open verdicts carry the structural reason or the open reference.
    """

    status: Status
    reason: Reason
    detail: str
    witness: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.reason not in _REASONS_BY_STATUS[self.status]:
            raise ValueError(f"reason {self.reason.value} invalid for {self.status.value}")
        w = self.witness
        if self.reason is Reason.NEGATIVE_SELF_INTERSECTION:
            if not isinstance(w.get("chi"), int) or w["chi"] >= 0:
                raise ValueError("NegativeSelfIntersection needs witness chi < 0")
        elif self.reason is Reason.PROJECTION_BOUND:
            if not (isinstance(w.get("chi"), int) and isinstance(w.get("bound"), int)):
                raise ValueError("ProjectionBound needs integer chi and bound")
            if w["chi"] <= w["bound"]:
                raise ValueError("ProjectionBound witness must have chi > bound")
        elif self.reason is Reason.NEGATIVE_EFFECTIVE_PAIR:
            classes = w.get("classes")
            if not (isinstance(classes, (list, tuple)) and len(classes) == 2):
                raise ValueError("NegativeEffectivePair needs a pair of class names")
            if not isinstance(w.get("value"), int) or w["value"] >= 0:
                raise ValueError("NegativeEffectivePair needs witness value < 0")
        elif self.reason is Reason.K3_SURFACE:
            if not w.get("table_entry"):
                raise ValueError("K3Surface verdicts must name their table entry")
        elif self.reason is Reason.BIRATIONAL_CONTRACTION:
            if not w.get("contraction"):
                raise ValueError("BirationalContraction must name the contraction")
        elif self.reason is Reason.OPEN_QUESTION:
            if not w.get("reference"):
                raise ValueError("Open verdicts must carry a reference id")

    @property
    def is_unclassified(self) -> bool:
        return self.witness.get("reference") == UNCLASSIFIED_REFERENCE

    def to_payload(self) -> dict:
        return {
            "status": self.status.value,
            "reason": self.reason.value,
            "detail": self.detail,
            "witness": dict(self.witness),
        }


class ProjectionBoundCheck(NamedTuple):
    """Result of the degree bound test for a complete intersection."""

    violated: bool
    chi: int
    bound: int


# ---------------------------------------------------------------------------
# Exception table


@dataclass(frozen=True)
class ExceptionEntry:
    degrees: tuple[int, ...]
    reason: Reason
    detail: str
    dimension: int | None = None
    dimension_parity: str | None = None
    min_dimension: int = 0
    classes: tuple[str, str] | None = None
    value: int | None = None

    def matches(self, ci: CIType) -> bool:
        if ci.degrees != self.degrees:
            return False
        if self.dimension is not None:
            return ci.dimension == self.dimension
        if self.dimension_parity is not None:
            parity = 0 if self.dimension_parity == "even" else 1
            return ci.dimension % 2 == parity and ci.dimension >= self.min_dimension
        return ci.dimension >= self.min_dimension

    def verdict(self) -> Verdict:
        if self.reason is Reason.NEGATIVE_EFFECTIVE_PAIR:
            assert self.classes is not None and self.value is not None
            witness = {"classes": list(self.classes), "value": self.value}
        else:
            witness = {"table_entry": self.detail}
        return Verdict(Status.NOT_NEF, self.reason, self.detail, witness)


@cache
def _exception_table() -> tuple[ExceptionEntry, ...]:
    text = resources.files("nefkit").joinpath("data/ci_exceptions.json").read_text("utf-8")
    doc = json.loads(text)
    entries = []
    for raw in doc["entries"]:
        classes = raw.get("classes")
        entries.append(
            ExceptionEntry(
                degrees=tuple(sorted(raw["degrees"])),
                reason=Reason(raw["reason"]),
                detail=raw["detail"],
                dimension=raw.get("dimension"),
                dimension_parity=raw.get("dimension_parity"),
                min_dimension=raw.get("min_dimension", 0),
                classes=tuple(classes) if classes else None,
                value=raw.get("value"),
            )
        )
    return tuple(entries)


def _exception_entry(ci: CIType) -> ExceptionEntry | None:
    for entry in _exception_table():
        if entry.matches(ci):
            return entry
    return None


# ---------------------------------------------------------------------------
# Verdicts


def verdict_curve(genus: int) -> Verdict:
    """Nef-diagonal verdict for a smooth projective curve of the given genus."""
    if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
        raise ValueError("genus must be a non-negative integer")
    if genus == 0:
        return Verdict(
            Status.NEF,
            Reason.HOMOGENEOUS,
            "a genus-0 curve is the projective line, a homogeneous variety",
        )
    if genus == 1:
        return Verdict(
            Status.NEF,
            Reason.GROUP_VARIETY,
            "a genus-1 curve is an elliptic curve, hence a group variety",
        )
    chi = 2 - 2 * genus
    return Verdict(
        Status.NOT_NEF,
        Reason.NEGATIVE_SELF_INTERSECTION,
        f"deg Delta^2 = chi = {chi} < 0 on a curve of genus {genus}",
        {"chi": chi, "genus": genus},
    )


def projection_bound_violated(ci: CIType) -> ProjectionBoundCheck:
    """Check chi > (n+1) * deg X, the bound a nef diagonal cannot exceed.

    A degree-m finite cover of P^n with nef diagonal satisfies
    chi <= (n+1) m; linear projection makes a complete intersection such a
    cover with m = prod(degrees).
    """
    chi = euler_ci_formula(ci)
    bound = (ci.dimension + 1) * ci.degree_product
    return ProjectionBoundCheck(chi > bound, chi, bound)


def verdict_ci(ci: CIType) -> Verdict:
    """Classify the diagonal of a smooth complete intersection.

    Positive structural families come first (projective space, quadrics,
    curves of genus <= 1, the open odd-dimensional (2,2) family), then the
    exception table, then the sign test, then the projection bound. Inside
    the scanned classification range the final fallback never fires.
    """
    n = ci.dimension
    if n < 1:
        raise ValueError("verdict_ci needs dimension >= 1")
    if ci.codimension == 0:
        return Verdict(
            Status.NEF, Reason.HOMOGENEOUS, "projective space is a homogeneous variety"
        )
    if ci.degrees == (2,):
        return Verdict(
            Status.NEF, Reason.HOMOGENEOUS, "a smooth quadric is a homogeneous variety"
        )
    if n == 1:
        chi = euler_ci_formula(ci)
        assert chi % 2 == 0
        return verdict_curve((2 - chi) // 2)
    if ci.degrees == (2, 2) and n % 2 == 1:
        return Verdict(
            Status.OPEN,
            Reason.OPEN_QUESTION,
            "whether an odd-dimensional smooth intersection of two quadrics has"
            " nef diagonal is an open problem for every dimension >= 3",
            {"reference": OPEN_TWO_QUADRICS_REFERENCE},
        )
    entry = _exception_entry(ci)
    if entry is not None:
        return entry.verdict()
    chi = euler_ci_formula(ci)
    if chi < 0:
        return Verdict(
            Status.NOT_NEF,
            Reason.NEGATIVE_SELF_INTERSECTION,
            f"deg Delta^2 = chi = {chi} < 0",
            {"chi": chi},
        )
    check = projection_bound_violated(ci)
    if check.violated:
        return Verdict(
            Status.NOT_NEF,
            Reason.PROJECTION_BOUND,
            f"chi = {check.chi} exceeds (n+1) deg X = {check.bound}, impossible"
            " for a nef diagonal under linear projection to P^n",
            {"chi": check.chi, "bound": check.bound, "cover_degree": ci.degree_product},
        )
    return Verdict(
        Status.OPEN,
        Reason.OPEN_QUESTION,
        "no implemented criterion decides this type",
        {"reference": UNCLASSIFIED_REFERENCE},
    )


# ---------------------------------------------------------------------------
# Del Pezzo manifolds (index n-1), classified by degree 1..7


@dataclass(frozen=True)
class DelPezzoRow:
    degree: int
    dimensions: str
    description: str
    variants: tuple[str, ...] = ()

    def admits(self, n: int) -> bool:
        if n < 3:
            return False
        if self.degree <= 4:
            return True
        if self.degree == 5:
            return n <= 6
        if self.degree == 6:
            return n in (3, 4)
        return n == 3


DELPEZZO_TABLE: tuple[DelPezzoRow, ...] = (
    DelPezzoRow(1, "n >= 3", "a weighted hypersurface of degree 6 in P(3,2,1,...,1)"),
    DelPezzoRow(2, "n >= 3", "a weighted hypersurface of degree 4 in P(2,1,...,1)"),
    DelPezzoRow(3, "n >= 3", "a cubic hypersurface in P^(n+1)"),
    DelPezzoRow(4, "n >= 3", "a complete intersection of two quadrics in P^(n+2)"),
    DelPezzoRow(
        5,
        "3 <= n <= 6",
        "a linear section of the Grassmannian G(2,C^5) in its Pluecker embedding in P^9",
    ),
    DelPezzoRow(
        6,
        "n = 3 or n = 4",
        "P^1 x P^1 x P^1, P^2 x P^2, or P(T_P2)",
        ("P1xP1xP1", "P2xP2", "P(T_P2)"),
    ),
    DelPezzoRow(7, "n = 3", "the blow-up of P^3 at a point"),
)


def _delpezzo_row(n: int, degree: int) -> DelPezzoRow:
    for row in DELPEZZO_TABLE:
        if row.degree == degree:
            if not row.admits(n):
                raise InvalidDelPezzo(
                    f"degree {degree} del Pezzo manifolds only exist for {row.dimensions}"
                )
            return row
    raise InvalidDelPezzo(f"no del Pezzo manifold of degree {degree}")


def verdict_delpezzo(n: int, degree: int, variant: str | None = None) -> Verdict:
    """Nef-diagonal verdict for the del Pezzo manifold of the given data.

    The optional variant label (degree 6 comes in three varieties) is echoed
    in the detail text only; it never changes the verdict.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise ValueError("dimension must be an integer")
    row = _delpezzo_row(n, degree)
    if degree in (1, 2):
        chi = euler_delpezzo_closed(n, degree)
        if n % 2 == 1:
            return Verdict(
                Status.NOT_NEF,
                Reason.NEGATIVE_SELF_INTERSECTION,
                f"deg Delta^2 = chi = {chi} < 0",
                {"chi": chi},
            )
        cover = 2**n if degree == 1 else 2
        bound = (n + 1) * cover
        return Verdict(
            Status.NOT_NEF,
            Reason.PROJECTION_BOUND,
            f"chi = {chi} exceeds (n+1) * {cover} = {bound}, impossible for a"
            f" nef diagonal on a degree-{cover} cover of P^n",
            {"chi": chi, "bound": bound, "cover_degree": cover},
        )
    if degree == 3:
        return verdict_ci(CIType((3,), n))
    if degree == 4:
        return verdict_ci(CIType((2, 2), n))
    if degree == 5:
        if n == 3:
            return Verdict(
                Status.NEF,
                Reason.FAKE_PROJECTIVE_SPACE,
                "the degree-5 del Pezzo threefold has the sheaf-theoretic"
                " positivity of projective space (it is a fake projective"
                " space in the diagonal sense)",
            )
        if n == 4:
            return Verdict(
                Status.NOT_NEF,
                Reason.NEGATIVE_EFFECTIVE_PAIR,
                "two effective families of planes pair negatively:"
                " deg sigma(3,1).sigma(2,2) = -1",
                {"classes": ["sigma(3,1)", "sigma(2,2)"], "value": -1},
            )
        if n == 5:
            return Verdict(
                Status.NOT_NEF,
                Reason.NEGATIVE_EFFECTIVE_PAIR,
                "two effective orbit-closure classes pair negatively:"
                " deg tau(3,-1).tau(2,1) = -1",
                {"classes": ["tau(3,-1)", "tau(2,1)"], "value": -1},
            )
        return Verdict(
            Status.NEF,
            Reason.HOMOGENEOUS,
            "the Grassmannian G(2,C^5) is a homogeneous variety",
        )
    if degree == 6:
        label = f" ({variant})" if variant else ""
        return Verdict(
            Status.NEF,
            Reason.HOMOGENEOUS,
            f"every degree-6 del Pezzo manifold{label} is a homogeneous variety",
        )
    return Verdict(
        Status.NOT_NEF,
        Reason.BIRATIONAL_CONTRACTION,
        row.description + " admits an extremal birational contraction",
        {"contraction": "blow-down of the exceptional divisor to a point of P^3"},
    )


def nef_big_filter(kind: str, params: object) -> bool:
    """True exactly on the varieties whose diagonal is both nef and big.

    kind "ci": params is a CIType; true for projective space and
    odd-dimensional quadrics. kind "delpezzo": params is (dimension, degree);
    true only for the degree-5 threefold.
    """
    if kind == "ci":
        if not isinstance(params, CIType):
            raise ValueError("kind 'ci' needs a CIType parameter")
        if params.codimension == 0:
            return True
        return params.degrees == (2,) and params.dimension % 2 == 1
    if kind == "delpezzo":
        try:
            n, degree = params  # type: ignore[misc]
        except (TypeError, ValueError) as exc:
            raise ValueError("kind 'delpezzo' needs (dimension, degree)") from exc
        _delpezzo_row(n, degree)
        return (n, degree) == (3, 5)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# Poincare polynomial obstruction to P^1-fibrations


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_mod(p: list[int], divisor: list[int]) -> list[int]:
    """Remainder of p modulo a divisor with leading coefficient 1."""
    assert divisor[-1] == 1
    rem = list(p)
    dd = len(divisor) - 1
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            for j in range(dd + 1):
                rem[k - dd + j] -= c * divisor[j]
    rem = rem[:dd]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return rem


@dataclass(frozen=True)
class FibrationObstruction:
    """Why a (2n+1)-dim intersection of two quadrics is no P^1-bundle over
    anything with the Betti numbers of a 2(n-1)-dim one as fiber factor.

    If the total space fibered in projective lines compatibly, its signed
    Poincare polynomial would be divisible by p(P^1) = 1 + t^2 times the
    fiber polynomial; the remainder below is nonzero, so it is not.
    """

    n: int
    total_dimension: int
    p_total: tuple[int, ...]
    p_fiber: tuple[int, ...]
    remainder: tuple[int, ...]

    @property
    def nonzero(self) -> bool:
        return any(self.remainder)


def cp_fibration_obstruction(n: int) -> FibrationObstruction:
    """Obstruction report for the (2n+1)-dimensional intersection of two quadrics.

    The candidate fiber is the 2(n-1)-dimensional intersection of two
    quadrics; in the degenerate case n = 1 that is four points, so the fiber
    polynomial is the constant 4. The product of the two signed Poincare
    polynomials is reduced modulo 1 + t^2 and the remainder is certified
    nonzero.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    p_total = poincare_polynomial_ci(CIType((2, 2), 2 * n + 1))
    p_fiber = [4] if n == 1 else poincare_polynomial_ci(CIType((2, 2), 2 * (n - 1)))
    remainder = _poly_mod(_poly_mul(p_total, p_fiber), [1, 0, 1])
    report = FibrationObstruction(
        n=n,
        total_dimension=2 * n + 1,
        p_total=tuple(p_total),
        p_fiber=tuple(p_fiber),
        remainder=tuple(remainder),
    )
    assert report.nonzero, "the fibration obstruction must not vanish"
    return report


# ---------------------------------------------------------------------------
# Scans


@dataclass(frozen=True)
class ScanReport:
    max_dimension: int
    max_degree: int
    max_codimension: int
    quadrics_max_codimension: int
    cases: int
    law_checks: dict[str, int]
    verdict_counts: dict[str, int]

    def to_payload(self) -> dict:
        return {
            "max_dimension": self.max_dimension,
            "max_degree": self.max_degree,
            "max_codimension": self.max_codimension,
            "quadrics_max_codimension": self.quadrics_max_codimension,
            "cases": self.cases,
            "law_checks": dict(sorted(self.law_checks.items())),
            "verdict_counts": dict(sorted(self.verdict_counts.items())),
        }


def _ci_grid(max_dimension: int, max_degree: int, max_codimension: int) -> Iterator[CIType]:
    for n in range(1, max_dimension + 1):
        for r in range(0, max_codimension + 1):
            for degrees in combinations_with_replacement(range(2, max_degree + 1), r):
                yield CIType(degrees, n)


def scan_ci(
    max_dimension: int = 12,
    max_degree: int = 6,
    max_codimension: int = 5,
    quadrics_max_codimension: int = 8,
) -> ScanReport:
    """Exhaustively verify the sign laws, bound laws, and verdict coverage.

    Laws checked on every canonical type in range:

    * hypersurface_sign: r = 1, d >= 3, (n, d) != (1, 3) forces
      sign(chi) = (-1)^n strictly.
    * multidegree_sign: r >= 2 with top degree >= 3 forces the same strict
      sign.
    * even_dimension_bound: even n under either hypothesis above (with
      (2, 3) excluded) forces chi > (n+1) * prod(degrees).
    * quadrics_positive / quadrics_even_bound: for r >= 3 quadrics,
      b(n, r) > 0, and b(n, r) > n + 1 for even n unless (n, r) = (2, 3);
      this sweep goes deeper in r than the general grid.
    * verdict_classified: verdict_ci never lands on the unclassified
      fallback.

    Any failure raises ScanViolation naming the law and the offending type;
    a clean run returns counts per law and per verdict status.
    """
    if min(max_dimension, max_degree, max_codimension, quadrics_max_codimension) < 1:
        raise ValueError("scan bounds must be positive")
    law_checks = {
        "hypersurface_sign": 0,
        "multidegree_sign": 0,
        "even_dimension_bound": 0,
        "quadrics_positive": 0,
        "quadrics_even_bound": 0,
        "verdict_classified": 0,
    }
    verdict_counts = {status.value: 0 for status in Status}
    cases = 0
    for ci in _ci_grid(max_dimension, max_degree, max_codimension):
        cases += 1
        n = ci.dimension
        degrees = ci.degrees
        r = ci.codimension
        chi = euler_ci_formula(ci)
        sign_law = None
        if r == 1 and degrees[0] >= 3 and (n, degrees[0]) != (1, 3):
            sign_law = "hypersurface_sign"
        elif r >= 2 and degrees[-1] >= 3:
            sign_law = "multidegree_sign"
        if sign_law is not None:
            if (-1) ** n * chi <= 0:
                raise ScanViolation(sign_law, ci, f"chi = {chi}")
            law_checks[sign_law] += 1
            cubic_surface = sign_law == "hypersurface_sign" and (n, degrees[0]) == (2, 3)
            if n % 2 == 0 and not cubic_surface:
                check = projection_bound_violated(ci)
                if not check.violated:
                    raise ScanViolation(
                        "even_dimension_bound", ci, f"chi = {check.chi} <= {check.bound}"
                    )
                law_checks["even_dimension_bound"] += 1
        verdict = verdict_ci(ci)
        if verdict.is_unclassified:
            raise ScanViolation("verdict_classified", ci, "fell through every criterion")
        law_checks["verdict_classified"] += 1
        verdict_counts[verdict.status.value] += 1
    for n in range(1, max_dimension + 1):
        for r in range(3, quadrics_max_codimension + 1):
            b = quadrics_b(n, r)
            if b <= 0:
                raise ScanViolation("quadrics_positive", (n, r), f"b = {b}")
            law_checks["quadrics_positive"] += 1
            if n % 2 == 0 and (n, r) != (2, 3):
                if b <= n + 1:
                    raise ScanViolation("quadrics_even_bound", (n, r), f"b = {b}")
                law_checks["quadrics_even_bound"] += 1
    return ScanReport(
        max_dimension=max_dimension,
        max_degree=max_degree,
        max_codimension=max_codimension,
        quadrics_max_codimension=quadrics_max_codimension,
        cases=cases,
        law_checks=law_checks,
        verdict_counts=verdict_counts,
    )
