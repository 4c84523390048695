"""Cycle-cone computations from Schubert-class pairing datasets.

A dataset lists the effective cycle classes of a variety (label, two-part
partition, codimension) together with the intersection numbers of classes in
complementary codimension. From that, the nef cone in each codimension is the
dual of the effective cone of the complementary codimension under the pairing
matrix, computed here exactly over the rationals.

The dual-cone routine is a brute-force double description: candidate extremal
rays are the kernels of (m-1)-subsets of the inequality normals, kept when
feasible. In ambient dimension 2 this degenerates to rotating each normal by
a quarter turn, which is the textbook picture.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import combinations
from math import gcd
from pathlib import Path
from typing import Iterator, Mapping, NamedTuple, Sequence

from .diagonal import Reason, Status, Verdict

__all__ = [
    "SchemaError",
    "InconsistentPairing",
    "MissingPairing",
    "InvalidPartition",
    "SchubertClass",
    "CycleDataset",
    "RationalCone",
    "DelPezzo5Cones",
    "load_dataset",
    "load_dataset_file",
    "builtin_dataset",
    "pair",
    "tau_top_pairing",
    "dual_cone",
    "effective_cone_of_codim",
    "nef_cone_of_codim",
    "spherical_nef_diagonal_check",
    "delpezzo5_cones",
]


class SchemaError(ValueError):
    """The dataset document is structurally malformed."""


class InconsistentPairing(ValueError):
    """The same unordered pair of classes is listed with conflicting values."""


class MissingPairing(LookupError):
    """A required complementary pairing is absent from the dataset."""


class InvalidPartition(ValueError):
    """A partition does not describe a Schubert class of the expected shape."""


def _check_int(value: object, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{name} must be an integer")
    return value


@dataclass(frozen=True)
class SchubertClass:
    """An effective cycle class labeled by a two-part partition.

    Partitions are weakly decreasing and non-negative, except that the second
    part may be exactly -1 (the extra orbit-closure class of odd symplectic
    Grassmannians). The codimension always equals the partition weight.
    """

    label: str
    partition: tuple[int, int]
    codim: int

    def __post_init__(self) -> None:
        if not self.label or not isinstance(self.label, str):
            raise InvalidPartition("classes need a non-empty string label")
        a, b = self.partition
        if b == -1:
            if a < 1:
                raise InvalidPartition(f"{self.label}: negative tail needs first part >= 1")
        elif not a >= b >= 0:
            raise InvalidPartition(f"{self.label}: partition must be weakly decreasing, >= 0")
        if self.codim != a + b:
            raise InvalidPartition(f"{self.label}: codim {self.codim} != |partition| {a + b}")


@dataclass(frozen=True)
class CycleDataset:
    """Named classes plus intersection numbers in complementary codimension.

    Pairings are stored symmetrically under a sorted label key; class order
    follows the document and fixes the coordinate bases downstream.
    """

    variety: str
    dimension: int
    classes: tuple[SchubertClass, ...]
    pairings: Mapping[tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dimension < 0:
            raise SchemaError("dimension must be >= 0")
        if not self.classes:
            raise SchemaError("a dataset needs at least one class")
        labels = [c.label for c in self.classes]
        if len(set(labels)) != len(labels):
            raise SchemaError("class labels must be unique")
        for c in self.classes:
            if c.codim > self.dimension:
                raise SchemaError(f"{c.label}: codim {c.codim} exceeds dimension")
        by_label = {c.label: c for c in self.classes}
        for (la, lb), value in self.pairings.items():
            if la not in by_label or lb not in by_label:
                raise SchemaError(f"pairing refers to unknown class ({la}, {lb})")
            if (la, lb) != tuple(sorted((la, lb))):
                raise SchemaError("pairing keys must be sorted label pairs")
            if by_label[la].codim + by_label[lb].codim != self.dimension:
                raise SchemaError(
                    f"pairing ({la}, {lb}) is not of complementary codimension"
                )
            _check_int(value, f"pairing ({la}, {lb})")

    def class_by_label(self, label: str) -> SchubertClass:
        for c in self.classes:
            if c.label == label:
                return c
        raise SchemaError(f"no class labeled {label!r}")

    def classes_of_codim(self, codim: int) -> tuple[SchubertClass, ...]:
        return tuple(c for c in self.classes if c.codim == codim)

    def complementary_pairs(self) -> Iterator[tuple[SchubertClass, SchubertClass]]:
        """All unordered complementary-codimension pairs, in dataset order."""
        for k in range(0, self.dimension // 2 + 1):
            front = self.classes_of_codim(k)
            back = self.classes_of_codim(self.dimension - k)
            for i, a in enumerate(front):
                for j, b in enumerate(back):
                    if 2 * k == self.dimension and j < i:
                        continue
                    yield a, b

    def pairing_value(self, label_a: str, label_b: str) -> int:
        key = tuple(sorted((label_a, label_b)))
        if key not in self.pairings:
            raise MissingPairing(f"no pairing recorded for ({label_a}, {label_b})")
        return self.pairings[key]


def load_dataset(text: str) -> CycleDataset:
    """Parse and validate a JSON dataset document.

    Malformed structure raises SchemaError; duplicate pair entries with
    conflicting values (including asymmetric duplicates) raise
    InconsistentPairing. Duplicates that agree are tolerated.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("dataset document must be a JSON object")
    for key in ("variety", "dimension", "classes", "pairings"):
        if key not in doc:
            raise SchemaError(f"missing dataset field {key!r}")
    classes = []
    try:
        for raw in doc["classes"]:
            partition = raw.get("partition", ())
            if len(partition) != 2:
                raise SchemaError("partitions here have exactly two parts")
            classes.append(
                SchubertClass(
                    label=raw.get("label", ""),
                    partition=(_check_int(partition[0], "partition part"),
                               _check_int(partition[1], "partition part")),
                    codim=_check_int(raw.get("codim"), "codim"),
                )
            )
    except InvalidPartition as exc:
        raise SchemaError(str(exc)) from exc
    except (TypeError, AttributeError) as exc:
        raise SchemaError(f"malformed class entry: {exc}") from exc
    pairings: dict[tuple[str, str], int] = {}
    for raw in doc["pairings"]:
        if not isinstance(raw, dict) or "a" not in raw or "b" not in raw or "value" not in raw:
            raise SchemaError("each pairing needs fields a, b, value")
        if not isinstance(raw["a"], str) or not isinstance(raw["b"], str):
            raise SchemaError("pairing endpoints must be class labels")
        key = tuple(sorted((raw["a"], raw["b"])))
        value = _check_int(raw["value"], f"pairing {key}")
        if key in pairings and pairings[key] != value:
            raise InconsistentPairing(
                f"pairing {key} listed with values {pairings[key]} and {value}"
            )
        pairings[key] = value
    return CycleDataset(
        variety=str(doc["variety"]),
        dimension=_check_int(doc["dimension"], "dimension"),
        classes=tuple(classes),
        pairings=pairings,
    )


def load_dataset_file(path: str | Path) -> CycleDataset:
    return load_dataset(Path(path).read_text("utf-8"))


def builtin_dataset(name: str) -> CycleDataset:
    """Load one of the datasets shipped with the package (e.g. "gw2c5")."""
    filename = name if name.endswith(".json") else f"{name}.json"
    record = resources.files("nefkit").joinpath(f"data/{filename}")
    if not record.is_file():
        raise FileNotFoundError(f"no shipped dataset named {name!r}")
    return load_dataset(record.read_text("utf-8"))


def pair(a: SchubertClass, b: SchubertClass, ds: CycleDataset) -> int:
    """Intersection number of two complementary classes of the dataset."""
    if a.codim + b.codim != ds.dimension:
        raise MissingPairing(
            f"({a.label}, {b.label}) is not a complementary pair in dimension {ds.dimension}"
        )
    return ds.pairing_value(a.label, b.label)


def tau_top_pairing(n: int, a: int, b: int) -> int:
    """Pairing of tau(a,b) with the extra class tau(2n-1,-1), for the
    (4n-3)-dimensional odd symplectic Grassmannian of lines in C^(2n+1).

    Defined for ordinary partitions a >= b >= 0 of weight a + b = 2n - 1;
    the value is (-1)^(a-1).
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if not a >= b >= 0:
        raise InvalidPartition(f"({a},{b}) is not weakly decreasing and non-negative")
    if a + b != 2 * n - 1:
        raise InvalidPartition(
            f"({a},{b}) has weight {a + b}, complementary weight is {2 * n - 1}"
        )
    return (-1) ** (a - 1)


# ---------------------------------------------------------------------------
# Exact linear algebra over small integer matrices


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, keeping direction."""
    lcm = 1
    for x in vec:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    assert g > 0, "cannot normalize the zero vector"
    return tuple(x // g for x in ints)


def _echelon(rows: Sequence[Sequence[int | Fraction]], width: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        pivot_row = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = mat[rank][col]
        mat[rank] = [x / inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    return mat, pivots


def _rank(rows: Sequence[Sequence[int]], width: int) -> int:
    if not rows:
        return 0
    return len(_echelon(rows, width)[1])


def _kernel_line(rows: Sequence[Sequence[int]], width: int) -> tuple[int, ...] | None:
    """Primitive spanning vector of the kernel, if it is exactly a line."""
    mat, pivots = _echelon(rows, width)
    if len(pivots) != width - 1:
        return None
    free = next(c for c in range(width) if c not in pivots)
    vec = [Fraction(0)] * width
    vec[free] = Fraction(1)
    for row_index, col in enumerate(pivots):
        vec[col] = -mat[row_index][free]
    return _primitive(vec)


# ---------------------------------------------------------------------------
# Cones


@dataclass(frozen=True)
class RationalCone:
    """A polyhedral cone given by its primitive extremal generators.

    Generators are primitive integer vectors, sorted lexicographically; their
    orientation comes from the pairing convention and is never flipped. A
    cone may legitimately fail to be full-dimensional (for instance the dual
    of a non-pointed effective cone); is_full_dimensional reports that.
    """

    ambient_dimension: int
    generators: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.ambient_dimension < 1:
            raise ValueError("ambient dimension must be >= 1")
        for g in self.generators:
            if len(g) != self.ambient_dimension:
                raise ValueError("generator length must match the ambient dimension")
            if not any(g):
                raise ValueError("generators must be nonzero")
        if self.generators != tuple(sorted(self.generators)):
            raise ValueError("generators must be sorted")
        if self.basis_labels is not None and len(self.basis_labels) != self.ambient_dimension:
            raise ValueError("need one basis label per coordinate")

    @property
    def is_full_dimensional(self) -> bool:
        return _rank(self.generators, self.ambient_dimension) == self.ambient_dimension

    def contains(self, vector: Sequence[int]) -> bool:
        """Exact membership test; implemented for full-dimensional cones."""
        if len(vector) != self.ambient_dimension:
            raise ValueError("vector length must match the ambient dimension")
        if not self.is_full_dimensional:
            raise ValueError("membership test needs a full-dimensional cone")
        identity = tuple(
            tuple(int(i == j) for j in range(self.ambient_dimension))
            for i in range(self.ambient_dimension)
        )
        facet_normals = dual_cone(self.generators, identity).generators
        return all(_dot(normal, vector) >= 0 for normal in facet_normals)

    def generator_expressions(self) -> list[str]:
        """Generators written in the labeled class basis, e.g. "a + 2*b"."""
        if self.basis_labels is None:
            raise ValueError("this cone has no basis labels")
        out = []
        for g in self.generators:
            terms = []
            for coeff, label in zip(g, self.basis_labels):
                if coeff == 0:
                    continue
                if coeff == 1:
                    terms.append(label)
                elif coeff == -1:
                    terms.append(f"-{label}")
                else:
                    terms.append(f"{coeff}*{label}")
            out.append(" + ".join(terms).replace("+ -", "- "))
        return out


def dual_cone(
    effective_generators: Sequence[Sequence[int]],
    pairing_matrix: Sequence[Sequence[int]],
    basis_labels: tuple[str, ...] | None = None,
) -> RationalCone:
    """Dual of the cone spanned by the given generators, under a pairing.

    The pairing matrix has one row per coordinate of the dual side and one
    column per coordinate of the effective side; the result is the cone
    {x : <x, M g> >= 0 for every generator g}, described by its primitive
    extremal rays. Raises ValueError when that dual contains a whole line
    (non-pointed duals have no extremal-ray description).
    """
    matrix = [tuple(row) for row in pairing_matrix]
    if not matrix or not matrix[0]:
        raise ValueError("pairing matrix must be non-empty")
    m = len(matrix)
    width = len(matrix[0])
    if any(len(row) != width for row in matrix):
        raise ValueError("pairing matrix must be rectangular")
    gens = [tuple(g) for g in effective_generators]
    if not gens:
        raise ValueError("need at least one effective generator")
    for g in gens:
        if len(g) != width:
            raise ValueError("generator length must match the pairing matrix columns")
        if not any(g):
            raise ValueError("effective generators must be nonzero")
    normals: list[tuple[int, ...]] = []
    for g in gens:
        normal = tuple(_dot(row, g) for row in matrix)
        if any(normal) and normal not in normals:
            normals.append(normal)
    if not normals:
        raise ValueError("every generator pairs to zero; the dual is all of space")
    if _rank(normals, m) < m:
        raise ValueError("dual cone contains a linear subspace")
    rays: set[tuple[int, ...]] = set()
    for subset in combinations(range(len(normals)), m - 1):
        candidate = _kernel_line([normals[i] for i in subset], m)
        if candidate is None:
            continue
        for ray in (candidate, tuple(-x for x in candidate)):
            if all(_dot(normal, ray) >= 0 for normal in normals):
                rays.add(ray)
    return RationalCone(m, tuple(sorted(rays)), basis_labels)


# ---------------------------------------------------------------------------
# Applications to the shipped datasets


def spherical_nef_diagonal_check(ds: CycleDataset) -> Verdict:
    """Nef-diagonal test for a spherical variety from its pairing table.

    On a spherical variety the diagonal is nef exactly when every pairing of
    complementary effective (orbit-closure) classes is non-negative. The
    first negative pair in dataset order is returned as the witness; a
    missing required pairing raises MissingPairing.
    """
    for a, b in ds.complementary_pairs():
        value = ds.pairing_value(a.label, b.label)
        if value < 0:
            return Verdict(
                Status.NOT_NEF,
                Reason.NEGATIVE_EFFECTIVE_PAIR,
                f"effective classes {a.label} and {b.label} pair to {value}",
                {"classes": [a.label, b.label], "value": value},
            )
    return Verdict(
        Status.NEF,
        Reason.NON_NEGATIVE_PAIRINGS,
        "every complementary pairing of effective classes is non-negative,"
        " which certifies a nef diagonal on a spherical variety",
    )


def _identity(m: int) -> list[tuple[int, ...]]:
    return [tuple(int(i == j) for j in range(m)) for i in range(m)]


def effective_cone_of_codim(ds: CycleDataset, codim: int) -> RationalCone:
    """Effective cone in the given codimension: the simplicial cone spanned
    by the dataset's classes, in their own coordinate basis."""
    classes = ds.classes_of_codim(codim)
    if not classes:
        raise ValueError(f"dataset has no classes of codimension {codim}")
    labels = tuple(c.label for c in classes)
    return RationalCone(len(classes), tuple(sorted(_identity(len(classes)))), labels)


def nef_cone_of_codim(ds: CycleDataset, codim: int) -> RationalCone:
    """Nef cone in the given codimension: dual of the effective cone of the
    complementary codimension under the dataset's pairing matrix."""
    if not 0 <= codim <= ds.dimension:
        raise ValueError(f"codimension must lie in 0..{ds.dimension}")
    rows = ds.classes_of_codim(codim)
    cols = ds.classes_of_codim(ds.dimension - codim)
    if not rows or not cols:
        raise ValueError(f"dataset has no classes of codimension {codim} or its complement")
    matrix = [[pair(a, b, ds) for b in cols] for a in rows]
    return dual_cone(_identity(len(cols)), matrix, tuple(c.label for c in rows))


class DelPezzo5Cones(NamedTuple):
    nef2: RationalCone
    eff2: RationalCone
    nef3: RationalCone
    eff3: RationalCone


def delpezzo5_cones() -> DelPezzo5Cones:
    """Nef and effective cones in codimensions 2 and 3 of the degree-5
    del Pezzo fivefold, from the shipped pairing dataset.

    Effective cones are spanned by the orbit-closure classes themselves (the
    coordinate basis); each nef cone is the dual of the complementary
    effective cone under the pairing matrix.
    """
    ds = builtin_dataset("gw2c5")
    return DelPezzo5Cones(
        nef2=nef_cone_of_codim(ds, 2),
        eff2=effective_cone_of_codim(ds, 2),
        nef3=nef_cone_of_codim(ds, 3),
        eff3=effective_cone_of_codim(ds, 3),
    )
