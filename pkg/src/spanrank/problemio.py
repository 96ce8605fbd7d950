"""JSON documents: problem files, validation status, and result files.

Problem file schema::

    {
      "alternatives": ["School A", ...],
      "criteria": ["learning", ...],
      "matrices": {"learning": [[1, "1/3", 0.5], ...], ...},
      "weights": [[...]]
    }

Matrix entries may be numbers or exact fraction strings ("1/7"); ``null``
marks a missing judgement; diagonals must be 1 or null.  Result files carry
exact integer counts next to probabilities rounded to 6 decimals, plus the
mode, plan, seed, and toolkit version that produced them.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__
from .acceptability import AcceptabilityResult
from .errors import InvalidDocument, MixedProblems, SpanrankError, UnsupportedSize
from .pcm import (
    PairwiseMatrix,
    Problem,
    check_transitivity,
    consistency_ratio,
    is_connected,
    validate,
)
from .sampling import SamplePlan
from .spantree import count_trees, to_graph

WEIGHTS_KEY = "weights"


def _parse_structure(doc) -> list[dict]:
    violations = []
    if not isinstance(doc, dict):
        return [{"code": "BadStructure", "location": "$", "detail": "document must be an object"}]
    for key in ("alternatives", "criteria", "matrices", "weights"):
        if key not in doc:
            violations.append(
                {"code": "MissingField", "location": key, "detail": f"field {key!r} is required"}
            )
    if violations:
        return violations
    for key in ("alternatives", "criteria"):
        value = doc[key]
        if (
            not isinstance(value, list)
            or not value
            or not all(isinstance(x, str) and x for x in value)
        ):
            violations.append(
                {"code": "BadLabels", "location": key, "detail": "must be a non-empty list of names"}
            )
        elif len(set(value)) != len(value):
            violations.append(
                {"code": "DuplicateLabels", "location": key, "detail": "names must be unique"}
            )
    if not isinstance(doc["matrices"], dict):
        violations.append(
            {
                "code": "BadStructure",
                "location": "matrices",
                "detail": "must map criterion names to matrices",
            }
        )
    if not violations:
        wanted = set(doc["criteria"])
        got = set(doc["matrices"])
        for missing in sorted(wanted - got):
            violations.append(
                {
                    "code": "MissingMatrix",
                    "location": f"matrices.{missing}",
                    "detail": f"no matrix for criterion {missing!r}",
                }
            )
        for extra in sorted(got - wanted):
            violations.append(
                {
                    "code": "UnknownMatrix",
                    "location": f"matrices.{extra}",
                    "detail": f"matrix {extra!r} matches no criterion",
                }
            )
    return violations


def parse_components(
    doc, require_connected: bool = True
) -> tuple[tuple[str, ...], tuple[str, ...], dict[str, PairwiseMatrix], PairwiseMatrix]:
    """Parse and validate a problem document into its matrices.

    Raises InvalidDocument carrying every violation found.  With
    ``require_connected=False``, disconnected matrices pass (for editors
    that build judgements up incrementally).
    """
    violations = _parse_structure(doc)
    if violations:
        raise InvalidDocument(violations)

    alternatives = tuple(doc["alternatives"])
    criteria = tuple(doc["criteria"])
    matrices: dict[str, PairwiseMatrix] = {}

    def parse_matrix(rows, labels, location) -> PairwiseMatrix | None:
        if not isinstance(rows, list) or len(rows) != len(labels) or any(
            not isinstance(r, list) or len(r) != len(labels) for r in rows
        ):
            violations.append(
                {
                    "code": "BadShape",
                    "location": location,
                    "detail": f"must be a {len(labels)}x{len(labels)} array",
                }
            )
            return None
        try:
            return validate(rows, labels, require_connected=require_connected)
        except SpanrankError as exc:
            violations.append({"code": exc.code, "location": location, "detail": str(exc)})
            return None

    for name in criteria:
        matrix = parse_matrix(doc["matrices"][name], alternatives, f"matrices.{name}")
        if matrix is not None:
            matrices[name] = matrix
    weight_matrix = parse_matrix(doc["weights"], criteria, WEIGHTS_KEY)

    if violations:
        raise InvalidDocument(violations)
    assert weight_matrix is not None
    return alternatives, criteria, matrices, weight_matrix


def parse_problem(doc) -> Problem:
    """Strictly parse a problem document (all matrices connected)."""
    alternatives, criteria, matrices, weight_matrix = parse_components(doc)
    return Problem(
        alternatives=alternatives,
        criteria=criteria,
        criterion_matrices=tuple(matrices[name] for name in criteria),
        weight_matrix=weight_matrix,
    )


def load_problem(path) -> Problem:
    with open(path, encoding="utf-8") as handle:
        return parse_problem(json.load(handle))


def entry_json(value: Fraction):
    """A judgement value as it appears in documents: int when whole,
    exact "p/q" string otherwise."""
    if value.denominator == 1:
        return value.numerator
    return str(value)


def matrix_rows(matrix: PairwiseMatrix) -> list[list]:
    """Matrix as JSON-ready rows; exact fractions become "p/q" strings."""
    rows = []
    for i in range(matrix.size):
        row = []
        for j in range(matrix.size):
            if i == j:
                row.append(1)
            else:
                value = matrix.get(i, j)
                row.append(None if value is None else entry_json(value))
        rows.append(row)
    return rows


def problem_to_document(problem: Problem) -> dict:
    return {
        "alternatives": list(problem.alternatives),
        "criteria": list(problem.criteria),
        "matrices": {
            name: matrix_rows(matrix)
            for name, matrix in zip(problem.criteria, problem.criterion_matrices)
        },
        "weights": matrix_rows(problem.weight_matrix),
    }


# ---------------------------------------------------------------------------
# Validation status reporting


@dataclass(frozen=True)
class MatrixStatus:
    """How usable one judgement matrix currently is."""

    key: str
    size: int
    judged_pairs: int
    complete: bool
    connected: bool
    consistency_ratio: float | None  # complete matrices within the RI table only
    transitivity_violations: list[tuple[int, int, int]]
    tree_count: int  # 0 when disconnected

    def to_json(self) -> dict:
        data = asdict(self)
        data["transitivity_violations"] = [list(t) for t in self.transitivity_violations]
        return data


def matrix_status(key: str, matrix: PairwiseMatrix) -> MatrixStatus:
    cr = None
    if matrix.is_complete:
        try:
            cr = consistency_ratio(matrix)
        except UnsupportedSize:
            cr = None
    return MatrixStatus(
        key=key,
        size=matrix.size,
        judged_pairs=len(matrix.entries) // 2,
        complete=matrix.is_complete,
        connected=is_connected(matrix),
        consistency_ratio=cr,
        transitivity_violations=check_transitivity(matrix),
        tree_count=count_trees(to_graph(matrix)),
    )


def problem_statuses(
    criteria: Sequence[str],
    matrices: dict[str, PairwiseMatrix],
    weight_matrix: PairwiseMatrix,
) -> tuple[list[MatrixStatus], int]:
    """Status of every matrix plus the total combination space (0 when any
    matrix is disconnected)."""
    statuses = [matrix_status(name, matrices[name]) for name in criteria]
    statuses.append(matrix_status(WEIGHTS_KEY, weight_matrix))
    total_space = 1
    for status in statuses:
        total_space *= status.tree_count
    return statuses, total_space


# ---------------------------------------------------------------------------
# Result documents


def _probability_matrix(counts, total: int) -> list[list[float]] | None:
    if total == 0:
        return None
    return [[round(c / total, 6) for c in row] for row in counts]


def _plan_json(plan: SamplePlan | None) -> dict | None:
    if plan is None:
        return None
    return {
        "accuracy": str(plan.accuracy),
        "confidence": str(plan.confidence),
        "z": str(plan.z_value),
        "iterations": plan.iterations,
        "iterations_overridden": plan.iterations_overridden,
        "seed": plan.seed,
    }


def _plan_from_json(data: dict | None) -> SamplePlan | None:
    if data is None:
        return None
    return SamplePlan(
        accuracy=Fraction(data["accuracy"]),
        confidence=Fraction(data["confidence"]),
        iterations=int(data["iterations"]),
        seed=int(data["seed"]),
        z_value=Fraction(data["z"]),
        iterations_overridden=bool(data.get("iterations_overridden", False)),
    )


def result_entry(result: AcceptabilityResult) -> dict:
    total = result.combinations_evaluated
    return {
        "mode": result.mode,
        "combinations_evaluated": total,
        "total_space": str(result.total_space),
        "preference_counts": [list(row) for row in result.preference_counts],
        "indifference_counts": [list(row) for row in result.indifference_counts],
        "rank_counts": [list(row) for row in result.rank_counts],
        "preference_probabilities": _probability_matrix(result.preference_counts, total),
        "indifference_probabilities": _probability_matrix(result.indifference_counts, total),
        "rank_probabilities": _probability_matrix(result.rank_counts, total),
        "plan": _plan_json(result.plan),
        "seed": result.plan.seed if result.plan is not None else None,
    }


def results_to_document(results: Sequence[AcceptabilityResult]) -> dict:
    if not results:
        raise ValueError("no results to serialize")
    first = results[0]
    for other in results[1:]:
        if other.problem_digest != first.problem_digest:
            raise MixedProblems("results come from different problems")
    return {
        "toolkit_version": __version__,
        "problem_digest": first.problem_digest,
        "alternatives": list(first.alternatives),
        "runs": [result_entry(r) for r in results],
    }


def parse_result_document(doc: dict) -> list[AcceptabilityResult]:
    alternatives = tuple(doc["alternatives"])
    digest = doc["problem_digest"]

    def freeze(rows):
        return tuple(tuple(int(c) for c in row) for row in rows)

    results = []
    for entry in doc["runs"]:
        results.append(
            AcceptabilityResult(
                alternatives=alternatives,
                mode=entry["mode"],
                combinations_evaluated=int(entry["combinations_evaluated"]),
                total_space=int(entry["total_space"]),
                preference_counts=freeze(entry["preference_counts"]),
                indifference_counts=freeze(entry["indifference_counts"]),
                rank_counts=freeze(entry["rank_counts"]),
                plan=_plan_from_json(entry.get("plan")),
                problem_digest=digest,
            )
        )
    return results


def dump_document(doc: dict, path) -> None:
    """Write a document deterministically: same content, same bytes."""
    Path(path).write_text(serialize_document(doc), encoding="utf-8")


def serialize_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_results(path) -> list[AcceptabilityResult]:
    with open(path, encoding="utf-8") as handle:
        return parse_result_document(json.load(handle))
