"""Evaluate tree combinations into scores and acceptability probabilities.

Each combination of spanning trees (one per criterion matrix, one for the
weight matrix) yields one overall score vector.  Over all combinations, or a
uniform sample of them, we count how often each alternative beats each other
and how often it lands on each rank; probabilities are counts divided by the
number of combinations evaluated.

Scores are exact rationals compared with strict ``>`` and ``==``: ties are
genuine ties, never floating-point noise.
"""

from __future__ import annotations

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .errors import MixedProblems, SpaceTooLarge
from .pcm import PriorityVector, Problem
from .sampling import SamplePlan, TreeCombination, combination_at
from .spantree import ComparisonGraph, count_trees, enumerate_trees, to_graph, tree_priority

DEFAULT_SPACE_CAP = 10_000_000

ProgressFn = Callable[[float], None]

# Overall scores are convex combinations of priority vectors, so they form a
# priority vector themselves; the alias keeps call sites self-describing.
ScoreVector = PriorityVector


@dataclass(frozen=True)
class AcceptabilityResult:
    """Counts and derived probabilities from one enumeration or sample.

    ``preference_counts[i][j]`` counts combinations scoring alternative i
    strictly above j; ``indifference_counts`` is symmetric with zero
    diagonal; ``rank_counts[i][p-1]`` counts combinations placing i at rank
    p.  ``total_space`` is the exact size of the full combination space,
    whether or not it was enumerated.
    """

    alternatives: tuple[str, ...]
    mode: str  # "enumerated" | "sampled"
    combinations_evaluated: int
    total_space: int
    preference_counts: tuple[tuple[int, ...], ...]
    indifference_counts: tuple[tuple[int, ...], ...]
    rank_counts: tuple[tuple[int, ...], ...]
    plan: SamplePlan | None
    problem_digest: str

    def preference_probability(self, i: int, j: int) -> float:
        return self.preference_counts[i][j] / self.combinations_evaluated

    def indifference_probability(self, i: int, j: int) -> float:
        return self.indifference_counts[i][j] / self.combinations_evaluated

    def rank_probability(self, i: int, rank: int) -> float:
        """Probability that alternative i attains the 1-based ``rank``."""
        return self.rank_counts[i][rank - 1] / self.combinations_evaluated

    def preference_matrix(self) -> list[list[float]]:
        n = len(self.alternatives)
        return [[self.preference_probability(i, j) if i != j else 0.0 for j in range(n)] for i in range(n)]

    def rank_matrix(self) -> list[list[float]]:
        n = len(self.alternatives)
        return [[self.rank_probability(i, p) for p in range(1, n + 1)] for i in range(n)]


class CountAccumulator:
    """Mergeable tallies of preference, indifference, and rank counts."""

    __slots__ = ("n", "total", "preference", "indifference", "rank")

    def __init__(self, n: int):
        self.n = n
        self.total = 0
        self.preference = [[0] * n for _ in range(n)]
        self.indifference = [[0] * n for _ in range(n)]
        self.rank = [[0] * n for _ in range(n)]

    def record(self, scores: Sequence[Fraction], multiplicity: int = 1) -> None:
        n = self.n
        self.total += multiplicity
        beaten_by = [0] * n  # how many alternatives score strictly above each one
        for i in range(n):
            si = scores[i]
            for j in range(i + 1, n):
                sj = scores[j]
                if si > sj:
                    self.preference[i][j] += multiplicity
                    beaten_by[j] += 1
                elif sj > si:
                    self.preference[j][i] += multiplicity
                    beaten_by[i] += 1
                else:
                    self.indifference[i][j] += multiplicity
                    self.indifference[j][i] += multiplicity
        for i in range(n):
            self.rank[i][beaten_by[i]] += multiplicity

    def merge(self, other: "CountAccumulator") -> None:
        if other.n != self.n:
            raise ValueError("cannot merge accumulators of different sizes")
        self.total += other.total
        for mine, theirs in (
            (self.preference, other.preference),
            (self.indifference, other.indifference),
            (self.rank, other.rank),
        ):
            for i in range(self.n):
                row_m, row_t = mine[i], theirs[i]
                for j in range(self.n):
                    row_m[j] += row_t[j]

    def counts(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        def freeze(rows):
            return tuple(tuple(row) for row in rows)

        return freeze(self.preference), freeze(self.indifference), freeze(self.rank)


def overall_priority(combination: TreeCombination, problem: Problem) -> ScoreVector:
    """Overall score vector of one tree combination.

    The weight-tree vector is dotted with the per-criterion tree vectors;
    everything is exact, and the convex combination sums to exactly 1.
    """
    weight_vector = tree_priority(combination.weight_tree, to_graph(problem.weight_matrix))
    n = problem.n_alternatives
    scores = [Fraction(0)] * n
    for j, (tree, matrix) in enumerate(zip(combination.criterion_trees, problem.criterion_matrices)):
        evaluation = tree_priority(tree, to_graph(matrix))
        wj = weight_vector[j]
        for i in range(n):
            scores[i] += wj * evaluation[i]
    return ScoreVector(tuple(scores))


def rank_of(scores: Sequence[Fraction], alternative: int) -> int:
    """1 plus the number of alternatives scoring strictly higher; tied
    alternatives share a rank and the next rank down is skipped."""
    target = scores[alternative]
    return 1 + sum(1 for s in scores if s > target)


def combination_space(problem: Problem) -> int:
    """Exact size of the combination space: the product of each matrix's
    spanning-tree count (k^(k-2) per complete matrix, smaller when pairs
    are missing)."""
    space = count_trees(to_graph(problem.weight_matrix))
    for matrix in problem.criterion_matrices:
        space *= count_trees(to_graph(matrix))
    return space


def _distinct_vectors(graph: ComparisonGraph, cap: int) -> list[tuple[tuple[Fraction, ...], int]]:
    """Tree vectors of a graph, deduplicated with multiplicities.

    Many trees of a near-consistent matrix imply the same vector, so the
    cross-product over distinct vectors (weighted by multiplicity) evaluates
    far fewer score vectors than the raw combination space while producing
    identical counts.
    """
    seen: dict[tuple[Fraction, ...], int] = {}
    for tree in enumerate_trees(graph, cap=cap):
        weights = tree_priority(tree, graph).weights
        seen[weights] = seen.get(weights, 0) + 1
    return list(seen.items())


def acceptability_enumerate(
    problem: Problem,
    cap: int = DEFAULT_SPACE_CAP,
    progress: ProgressFn | None = None,
) -> AcceptabilityResult:
    """Exact acceptability over every combination of spanning trees."""
    total_space = combination_space(problem)
    if total_space > cap:
        raise SpaceTooLarge(
            f"combination space {total_space} exceeds the cap of {cap}; "
            "switch to sampled mode"
        )

    weight_options = _distinct_vectors(to_graph(problem.weight_matrix), cap)
    criterion_options = [_distinct_vectors(to_graph(m), cap) for m in problem.criterion_matrices]

    n = problem.n_alternatives
    m = problem.n_criteria
    accumulator = CountAccumulator(n)
    report_step = max(total_space // 100, 1)
    next_report = report_step
    # Odometer order: weight vectors outermost, then criterion 1..m.
    for weight_vector, weight_mult in weight_options:
        for chosen in product(*criterion_options):
            multiplicity = weight_mult
            for _, option_mult in chosen:
                multiplicity *= option_mult
            scores = [
                sum(weight_vector[j] * chosen[j][0][i] for j in range(m))
                for i in range(n)
            ]
            accumulator.record(scores, multiplicity)
            if progress is not None and accumulator.total >= next_report:
                progress(accumulator.total / total_space)
                next_report += report_step
    if progress is not None:
        progress(1.0)

    assert accumulator.total == total_space
    preference, indifference, rank = accumulator.counts()
    return AcceptabilityResult(
        alternatives=problem.alternatives,
        mode="enumerated",
        combinations_evaluated=total_space,
        total_space=total_space,
        preference_counts=preference,
        indifference_counts=indifference,
        rank_counts=rank,
        plan=None,
        problem_digest=problem.fingerprint(),
    )


class _CombinationScorer:
    """Scores sampled combinations, memoizing each tree's priority vector.

    Sampling on small graphs revisits the same trees constantly; caching by
    edge tuple makes the vector arithmetic a lookup.
    """

    def __init__(self, problem: Problem):
        self.problem = problem
        self.criterion_graphs = [to_graph(m) for m in problem.criterion_matrices]
        self.weight_graph = to_graph(problem.weight_matrix)
        self._cache: list[dict] = [{} for _ in range(len(self.criterion_graphs) + 1)]

    def _vector(self, slot: int, graph: ComparisonGraph, tree) -> tuple[Fraction, ...]:
        cached = self._cache[slot].get(tree.edges)
        if cached is None:
            cached = tree_priority(tree, graph).weights
            self._cache[slot][tree.edges] = cached
        return cached

    def scores_at(self, seed: int, index: int) -> list[Fraction]:
        combination = combination_at(self.criterion_graphs, self.weight_graph, seed, index)
        weight_vector = self._vector(len(self.criterion_graphs), self.weight_graph, combination.weight_tree)
        n = self.problem.n_alternatives
        scores = [Fraction(0)] * n
        for j, tree in enumerate(combination.criterion_trees):
            evaluation = self._vector(j, self.criterion_graphs[j], tree)
            wj = weight_vector[j]
            for i in range(n):
                scores[i] += wj * evaluation[i]
        return scores


def _sample_range(problem: Problem, seed: int, start: int, stop: int) -> CountAccumulator:
    scorer = _CombinationScorer(problem)
    accumulator = CountAccumulator(problem.n_alternatives)
    for index in range(start, stop):
        accumulator.record(scorer.scores_at(seed, index))
    return accumulator


def acceptability_sample(
    problem: Problem,
    plan: SamplePlan,
    workers: int = 1,
    progress: ProgressFn | None = None,
) -> AcceptabilityResult:
    """Estimated acceptability from ``plan.iterations`` sampled combinations.

    Output is identical for any ``workers`` value: iteration indices own
    their random streams, and partial counts merge by addition.
    """
    n = problem.n_alternatives
    iterations = plan.iterations
    accumulator = CountAccumulator(n)
    if workers <= 1 or iterations < 2 * workers:
        scorer = _CombinationScorer(problem)
        report_step = max(iterations // 100, 1)
        for index in range(iterations):
            accumulator.record(scorer.scores_at(plan.seed, index))
            if progress is not None and accumulator.total % report_step == 0:
                progress(accumulator.total / iterations)
    else:
        bounds = [round(iterations * k / workers) for k in range(workers + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_sample_range, problem, plan.seed, bounds[k], bounds[k + 1])
                for k in range(workers)
            ]
            for done, future in enumerate(futures, start=1):
                accumulator.merge(future.result())
                if progress is not None:
                    progress(done / workers)
    if progress is not None and iterations > 0:
        progress(1.0)

    preference, indifference, rank = accumulator.counts()
    return AcceptabilityResult(
        alternatives=problem.alternatives,
        mode="sampled",
        combinations_evaluated=iterations,
        total_space=combination_space(problem),
        preference_counts=preference,
        indifference_counts=indifference,
        rank_counts=rank,
        plan=plan,
        problem_digest=problem.fingerprint(),
    )


@dataclass(frozen=True)
class ResultSummary:
    """Per-cell mean (and standard deviation, for repeated runs) of the
    probability matrices across results of the same problem."""

    alternatives: tuple[str, ...]
    runs: int
    preference_mean: tuple[tuple[float, ...], ...]
    preference_sd: tuple[tuple[float, ...], ...] | None
    rank_mean: tuple[tuple[float, ...], ...]
    rank_sd: tuple[tuple[float, ...], ...] | None
    indifference_mean: tuple[tuple[float, ...], ...]
    indifference_sd: tuple[tuple[float, ...], ...] | None


def summarize(results: Sequence[AcceptabilityResult]) -> ResultSummary:
    """Aggregate repeated runs cell by cell; single runs report mean only."""
    if not results:
        raise ValueError("no results to summarize")
    first = results[0]
    for other in results[1:]:
        if other.problem_digest != first.problem_digest or other.alternatives != first.alternatives:
            raise MixedProblems("results come from different problems")

    def cellwise(extract) -> tuple:
        matrices = [extract(r) for r in results]
        rows = len(matrices[0])
        cols = len(matrices[0][0])
        mean = tuple(
            tuple(statistics.fmean(m[i][j] for m in matrices) for j in range(cols))
            for i in range(rows)
        )
        if len(matrices) < 2:
            return mean, None
        sd = tuple(
            tuple(statistics.stdev([m[i][j] for m in matrices]) for j in range(cols))
            for i in range(rows)
        )
        return mean, sd

    def indifference_matrix(r: AcceptabilityResult) -> list[list[float]]:
        n = len(r.alternatives)
        return [
            [r.indifference_probability(i, j) if i != j else 0.0 for j in range(n)]
            for i in range(n)
        ]

    preference_mean, preference_sd = cellwise(lambda r: r.preference_matrix())
    rank_mean, rank_sd = cellwise(lambda r: r.rank_matrix())
    indifference_mean, indifference_sd = cellwise(indifference_matrix)
    return ResultSummary(
        alternatives=first.alternatives,
        runs=len(results),
        preference_mean=preference_mean,
        preference_sd=preference_sd,
        rank_mean=rank_mean,
        rank_sd=rank_sd,
        indifference_mean=indifference_mean,
        indifference_sd=indifference_sd,
    )
