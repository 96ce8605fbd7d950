"""Pairwise-comparison domain types and the classical single-vector baselines.

Judgement values are stored as exact rationals (``fractions.Fraction``), so
reciprocity and downstream tree arithmetic are exact and ties are genuine
ties rather than floating-point accidents.  Only the eigenvector machinery
works in floating point.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import (
    BadDiagonal,
    DisconnectedGraph,
    IncompleteMatrix,
    NoConvergence,
    NonPositiveEntry,
    ReciprocityViolation,
    UnsupportedSize,
)

# Saaty's random-index table, indexed by matrix size.
RANDOM_INDEX = {
    3: 0.58,
    4: 0.90,
    5: 1.12,
    6: 1.24,
    7: 1.32,
    8: 1.41,
    9: 1.45,
    10: 1.49,
}

# Relative tolerance for accepting a redundantly supplied reciprocal pair.
RECIPROCITY_RTOL = 1e-9

RawEntry = "int | float | str | Fraction | None"


def as_ratio(value) -> Fraction:
    """Coerce a raw judgement entry to an exact positive ratio.

    Accepts ints, fraction strings ("1/7"), decimal strings, Fractions, and
    floats.  Floats are read through their shortest decimal representation,
    so a JSON 0.25 becomes exactly 1/4 rather than a binary approximation.
    """
    if isinstance(value, Fraction):
        ratio = value
    elif isinstance(value, bool):
        raise NonPositiveEntry(f"judgement value must be a positive number, got {value!r}")
    elif isinstance(value, int):
        ratio = Fraction(value)
    elif isinstance(value, float):
        try:
            ratio = Fraction(Decimal(str(value)))
        except (InvalidOperation, ValueError) as exc:
            raise NonPositiveEntry(f"judgement value {value!r} is not a finite number") from exc
    elif isinstance(value, str):
        try:
            ratio = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise NonPositiveEntry(f"cannot parse judgement value {value!r}") from exc
    else:
        raise NonPositiveEntry(f"unsupported judgement value {value!r}")
    if ratio <= 0:
        raise NonPositiveEntry(f"judgement value must be positive, got {value!r}")
    return ratio


@dataclass(frozen=True)
class Judgement:
    """One directed judgement: item ``row`` is ``value`` times as preferred
    as item ``col``."""

    row: int
    col: int
    value: Fraction

    def __post_init__(self):
        if self.row == self.col:
            raise BadDiagonal(f"judgement compares item {self.row} with itself")
        if self.value <= 0:
            raise NonPositiveEntry(f"judgement value must be positive, got {self.value}")

    @property
    def reciprocal(self) -> "Judgement":
        return Judgement(self.col, self.row, 1 / self.value)


@dataclass(frozen=True)
class PairwiseMatrix:
    """A reciprocal judgement matrix, possibly with missing pairs.

    ``entries`` maps (row, col) to the stored ratio for both orientations of
    every judged pair; the diagonal is implicit.  Instances are immutable
    after validation and safe to share across workers.
    """

    size: int
    entries: Mapping[tuple[int, int], Fraction]
    labels: tuple[str, ...]

    def value(self, row: int, col: int) -> Fraction:
        """Stored ratio, with the implicit diagonal of 1."""
        if row == col:
            return Fraction(1)
        return self.entries[(row, col)]

    def get(self, row: int, col: int) -> Fraction | None:
        if row == col:
            return Fraction(1)
        return self.entries.get((row, col))

    def has(self, row: int, col: int) -> bool:
        return row == col or (row, col) in self.entries

    def pairs(self) -> Iterator[Judgement]:
        """Stored judgements, upper triangle only, row-major order."""
        for i in range(self.size):
            for j in range(i + 1, self.size):
                v = self.entries.get((i, j))
                if v is not None:
                    yield Judgement(i, j, v)

    @property
    def is_complete(self) -> bool:
        return len(self.entries) == self.size * (self.size - 1)

    def missing_pairs(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.size)
            for j in range(i + 1, self.size)
            if (i, j) not in self.entries
        ]

    def to_array(self) -> np.ndarray:
        """Dense float matrix with unit diagonal; requires completeness."""
        if not self.is_complete:
            raise IncompleteMatrix(
                f"matrix has missing pairs {self.missing_pairs()}; cannot densify"
            )
        out = np.ones((self.size, self.size), dtype=float)
        for (i, j), v in self.entries.items():
            out[i, j] = float(v)
        return out

    def drop_pair(self, row: int, col: int, require_connected: bool = True) -> "PairwiseMatrix":
        """Copy of this matrix with the (row, col)/(col, row) pair removed."""
        entries = {k: v for k, v in self.entries.items() if k not in {(row, col), (col, row)}}
        if require_connected:
            _check_connected(self.size, entries)
        return PairwiseMatrix(self.size, entries, self.labels)


@dataclass(frozen=True)
class PriorityVector:
    """Positive weights over items, normalized so they sum to exactly 1."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.weights:
            raise ValueError("priority vector cannot be empty")
        if any(w <= 0 for w in self.weights):
            raise ValueError("priority weights must be positive")
        if sum(self.weights) != 1:
            raise ValueError("priority weights must sum to 1; use from_raw to normalize")

    @classmethod
    def from_raw(cls, values: Sequence) -> "PriorityVector":
        """Normalize raw positive values (floats, ints, or Fractions)."""
        fractions = [v if isinstance(v, Fraction) else Fraction(v) for v in values]
        total = sum(fractions)
        if total <= 0:
            raise ValueError("cannot normalize non-positive weights")
        return cls(tuple(w / total for w in fractions))

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> Fraction:
        return self.weights[i]

    def __iter__(self):
        return iter(self.weights)

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(w) for w in self.weights)


@dataclass(frozen=True)
class Problem:
    """A one-level prioritisation problem: one judgement matrix per
    criterion over the alternatives, plus one matrix over the criteria."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    criterion_matrices: tuple[PairwiseMatrix, ...]
    weight_matrix: PairwiseMatrix

    def __post_init__(self):
        n, m = len(self.alternatives), len(self.criteria)
        if len(self.criterion_matrices) != m:
            raise ValueError(f"expected {m} criterion matrices, got {len(self.criterion_matrices)}")
        for label, matrix in zip(self.criteria, self.criterion_matrices):
            if matrix.size != n:
                raise ValueError(f"criterion matrix {label!r} has size {matrix.size}, expected {n}")
        if self.weight_matrix.size != m:
            raise ValueError(f"weight matrix has size {self.weight_matrix.size}, expected {m}")

    @property
    def n_alternatives(self) -> int:
        return len(self.alternatives)

    @property
    def n_criteria(self) -> int:
        return len(self.criteria)

    def matrices(self) -> Iterator[tuple[str, PairwiseMatrix]]:
        """All matrices, criterion matrices first, then the weight matrix."""
        yield from zip(self.criteria, self.criterion_matrices)
        yield "weights", self.weight_matrix

    def fingerprint(self) -> str:
        """Stable digest of labels and exact judgement values, used to tell
        whether two results came from the same problem."""

        def matrix_key(matrix: PairwiseMatrix) -> list[str]:
            return [f"{j.row},{j.col}:{j.value}" for j in matrix.pairs()]

        payload = json.dumps(
            {
                "alternatives": list(self.alternatives),
                "criteria": list(self.criteria),
                "matrices": [matrix_key(m) for m in self.criterion_matrices],
                "weights": matrix_key(self.weight_matrix),
            },
            sort_keys=True,
            separators=(",", ":"),
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def _check_connected(size: int, entries: Mapping[tuple[int, int], Fraction]) -> None:
    if size == 0:
        raise DisconnectedGraph("matrix has no items")
    adjacency: list[list[int]] = [[] for _ in range(size)]
    for (i, j) in entries:
        if i < j:
            adjacency[i].append(j)
            adjacency[j].append(i)
    seen = [False] * size
    stack = [0]
    seen[0] = True
    reached = 1
    while stack:
        node = stack.pop()
        for other in adjacency[node]:
            if not seen[other]:
                seen[other] = True
                reached += 1
                stack.append(other)
    if reached != size:
        isolated = [i for i, s in enumerate(seen) if not s]
        raise DisconnectedGraph(
            f"comparison graph is disconnected; items {isolated} unreachable from item 0"
        )


def is_connected(matrix: PairwiseMatrix) -> bool:
    """Whether the comparison graph relates every pair of items."""
    try:
        _check_connected(matrix.size, matrix.entries)
    except DisconnectedGraph:
        return False
    return True


def validate(
    rows: Sequence[Sequence],
    labels: Sequence[str] | None = None,
    require_connected: bool = True,
) -> PairwiseMatrix:
    """Build a PairwiseMatrix from raw row data.

    ``rows`` is a square array of numbers, fraction strings, or None for
    missing judgements.  If only one of a reciprocal pair is given, the other
    is filled in; if both are given, their product must equal 1 within a
    relative tolerance of 1e-9, and the upper-triangle value is kept as
    canonical so stored reciprocals multiply to exactly 1.

    ``require_connected=False`` permits disconnected judgement sets; such
    matrices are unusable for prioritisation but let editors build up
    judgements incrementally.
    """
    size = len(rows)
    if size < 1:
        raise ValueError("matrix must have at least one row")
    for idx, row in enumerate(rows):
        if len(row) != size:
            raise ValueError(f"row {idx} has {len(row)} entries, expected {size}")
    if labels is None:
        labels = tuple(str(i + 1) for i in range(size))
    else:
        labels = tuple(labels)
        if len(labels) != size:
            raise ValueError(f"expected {size} labels, got {len(labels)}")

    entries: dict[tuple[int, int], Fraction] = {}
    for i in range(size):
        diag = rows[i][i]
        if diag is not None and as_ratio(diag) != 1:
            raise BadDiagonal(
                f"diagonal entry ({i}, {i}) is {diag!r}; a reciprocal matrix has an "
                "implicit diagonal of 1, so a different value is usually a row shift "
                "or a typo in the source data"
            )
        for j in range(i + 1, size):
            upper = rows[i][j]
            lower = rows[j][i]
            if upper is None and lower is None:
                continue
            if upper is not None and lower is not None:
                u, l = as_ratio(upper), as_ratio(lower)
                product = u * l
                if abs(product - 1) > RECIPROCITY_RTOL:
                    raise ReciprocityViolation(
                        f"entries ({i}, {j})={upper!r} and ({j}, {i})={lower!r} "
                        f"multiply to {float(product):.12g}, not 1"
                    )
                value = u
            elif upper is not None:
                value = as_ratio(upper)
            else:
                value = 1 / as_ratio(lower)
            entries[(i, j)] = value
            entries[(j, i)] = 1 / value

    if require_connected:
        _check_connected(size, entries)
    return PairwiseMatrix(size, entries, labels)


def _require_complete(matrix: PairwiseMatrix) -> None:
    if not matrix.is_complete:
        raise IncompleteMatrix(
            f"operation requires a complete matrix; missing pairs {matrix.missing_pairs()}"
        )


def principal_eigen(
    matrix: PairwiseMatrix, rtol: float = 1e-12, max_iterations: int = 10_000
) -> tuple[float, np.ndarray]:
    """Principal eigenvalue and sum-normalized eigenvector by power iteration.

    Positive matrices have a simple dominant eigenvalue (Perron-Frobenius),
    so the iteration converges from the uniform start vector.
    """
    _require_complete(matrix)
    a = matrix.to_array()
    n = matrix.size
    v = np.full(n, 1.0 / n)
    lam = float(n)
    for _ in range(max_iterations):
        av = a @ v
        lam = av.sum()  # v sums to 1, so this is the Rayleigh quotient for the 1-norm
        nxt = av / lam
        if np.max(np.abs(nxt - v) / nxt) < rtol:
            return float(lam), nxt
        v = nxt
    raise NoConvergence(f"power iteration did not converge within {max_iterations} iterations")


def priority_eigen(matrix: PairwiseMatrix) -> PriorityVector:
    """Right-eigenvector priorities of a complete matrix."""
    _, vector = principal_eigen(matrix)
    return PriorityVector.from_raw([Fraction(x) for x in vector])


def priority_geomean(matrix: PairwiseMatrix) -> PriorityVector:
    """Row-geometric-mean priorities of a complete matrix."""
    _require_complete(matrix)
    logs = np.log(matrix.to_array())
    weights = np.exp(logs.mean(axis=1))
    return PriorityVector.from_raw([Fraction(x) for x in weights])


def consistency_ratio(matrix: PairwiseMatrix) -> float:
    """Eigenvalue-based consistency ratio (CR) against Saaty's random index.

    Uses the classical estimate of the maximum eigenvalue: average the
    normalized columns into a weight vector, then average the component
    ratios of A*w to w.  This is the procedure behind the published CR
    values for the standard didactic matrices; it is exactly n (so CR is 0)
    precisely on cardinally consistent matrices, and for inconsistent ones
    it sits within a fraction of a percent of the principal eigenvalue.
    0 means cardinally consistent; below 0.1 is conventionally acceptable.
    """
    _require_complete(matrix)
    if matrix.size not in RANDOM_INDEX:
        raise UnsupportedSize(
            f"consistency ratio is defined here for sizes {min(RANDOM_INDEX)}..{max(RANDOM_INDEX)}, "
            f"got {matrix.size}"
        )
    a = matrix.to_array()
    n = matrix.size
    weights = (a / a.sum(axis=0)).mean(axis=1)
    lam = float(np.mean((a @ weights) / weights))
    ci = (lam - n) / (n - 1)
    # lam >= n mathematically; clamp the float noise a consistent matrix leaves
    return max(ci / RANDOM_INDEX[n], 0.0)


def check_transitivity(matrix: PairwiseMatrix) -> list[tuple[int, int, int]]:
    """Ordinal-consistency check: directed triads (i, j, k) where i is
    weakly preferred to j and j to k, yet k is strictly preferred to i.

    Each violating preference cycle is reported once, as its first violating
    rotation; an empty list means the judgements are ordinally consistent.
    """
    n = matrix.size
    by_cycle: dict[tuple[int, int, int], tuple[int, int, int]] = {}
    for triple in (
        (i, j, k)
        for i in range(n)
        for j in range(n)
        for k in range(n)
        if i != j and j != k and i != k
    ):
        if not _violates(matrix, triple):
            continue
        cycle = triple
        while cycle[0] != min(triple):
            cycle = (cycle[1], cycle[2], cycle[0])
        current = by_cycle.get(cycle)
        if current is None or triple < current:
            by_cycle[cycle] = triple
    return sorted(by_cycle.values())


def _violates(matrix: PairwiseMatrix, triple: tuple[int, int, int]) -> bool:
    i, j, k = triple
    cij, cjk, cik = matrix.get(i, j), matrix.get(j, k), matrix.get(i, k)
    if cij is None or cjk is None or cik is None:
        return False
    return cij >= 1 and cjk >= 1 and cik < 1
