from fractions import Fraction

import pytest

from spanrank.errors import MixedProblems, SpaceTooLarge
from spanrank.pcm import Problem, priority_eigen, validate
from spanrank.sampling import SamplePlan, sample_combinations
from spanrank.acceptability import (
    acceptability_enumerate,
    acceptability_sample,
    combination_space,
    overall_priority,
    rank_of,
    summarize,
)

# Exact reference counts for the school problem over all 944,784 combinations.
SCHOOL_PREFERENCE_COUNTS = (
    (0, 483246, 855063),
    (461538, 0, 842130),
    (89721, 102654, 0),
)
SCHOOL_RANK_COUNTS = (
    (483084, 372141, 89559),
    (461268, 381132, 102384),
    (432, 191511, 752841),
)


def consistent_problem():
    """Every matrix consistent and score vector tie-free: probabilities must
    all collapse to 0 or 1."""

    def consistent(weights):
        n = len(weights)
        return validate([[Fraction(weights[i], weights[j]) for j in range(n)] for i in range(n)])

    return Problem(
        alternatives=("a", "b", "c"),
        criteria=("x", "y"),
        criterion_matrices=(consistent([4, 2, 1]), consistent([5, 3, 1])),
        weight_matrix=consistent([3, 1]),
    )


class TestOverallPriority:
    def test_single_criterion_passthrough(self, school):
        problem = Problem(
            alternatives=school.alternatives,
            criteria=("learning",),
            criterion_matrices=(school.criterion_matrices[0],),
            weight_matrix=validate([[1]]),
        )
        combo = next(iter(sample_combinations(problem, SamplePlan.create(iterations=1, seed=4))))
        from spanrank.spantree import to_graph, tree_priority

        expected = tree_priority(combo.criterion_trees[0], to_graph(problem.criterion_matrices[0]))
        assert overall_priority(combo, problem).weights == expected.weights

    def test_all_ones_criteria_score_uniformly(self, school):
        ones = validate([[1, 1, 1]] * 3)
        problem = Problem(
            alternatives=("a", "b", "c"),
            criteria=school.criteria,
            criterion_matrices=(ones,) * 6,
            weight_matrix=school.weight_matrix,
        )
        combo = next(iter(sample_combinations(problem, SamplePlan.create(iterations=1, seed=9))))
        assert overall_priority(combo, problem).weights == (Fraction(1, 3),) * 3

    def test_classical_baseline_aggregate(self, school):
        # eigenvector weights dotted with eigenvector scores, the single-vector path
        weights = priority_eigen(school.weight_matrix)
        scores = [priority_eigen(m) for m in school.criterion_matrices]
        overall = [
            sum(float(weights[j]) * float(scores[j][i]) for j in range(6)) for i in range(3)
        ]
        assert overall == pytest.approx((0.37, 0.38, 0.25), abs=5e-3)


class TestRankOf:
    def test_tie_shares_rank_and_skips_next(self):
        scores = (Fraction(2, 5), Fraction(2, 5), Fraction(1, 5))
        assert [rank_of(scores, i) for i in range(3)] == [1, 1, 3]

    def test_strict_ordering(self):
        scores = (Fraction(1, 2), Fraction(3, 10), Fraction(1, 5))
        assert [rank_of(scores, i) for i in range(3)] == [1, 2, 3]

    def test_all_tied(self):
        scores = (Fraction(1, 3),) * 3
        assert [rank_of(scores, i) for i in range(3)] == [1, 1, 1]


class TestEnumerate:
    def test_school_total_space(self, school):
        assert combination_space(school) == 944_784

    def test_school_exact_counts(self, school):
        result = acceptability_enumerate(school)
        assert result.combinations_evaluated == 944_784
        assert result.preference_counts == SCHOOL_PREFERENCE_COUNTS
        assert result.rank_counts == SCHOOL_RANK_COUNTS
        assert result.mode == "enumerated"

    def test_school_probabilities(self, school):
        result = acceptability_enumerate(school)
        assert result.preference_probability(0, 1) == pytest.approx(0.51, abs=5e-3)
        assert result.preference_probability(2, 0) == pytest.approx(0.09, abs=5e-3)
        assert result.rank_probability(2, 3) == pytest.approx(0.80, abs=5e-3)
        assert result.rank_probability(2, 1) == pytest.approx(0.00, abs=5e-3)

    def test_count_identities(self, school):
        result = acceptability_enumerate(school)
        n = len(result.alternatives)
        total = result.combinations_evaluated
        for i in range(n):
            assert sum(result.rank_counts[i]) == total
            for j in range(n):
                if i != j:
                    assert (
                        result.preference_counts[i][j]
                        + result.preference_counts[j][i]
                        + result.indifference_counts[i][j]
                        == total
                    )

    def test_space_cap(self, school):
        with pytest.raises(SpaceTooLarge):
            acceptability_enumerate(school, cap=1000)

    def test_progress_reported(self, school):
        seen = []
        acceptability_enumerate(school, progress=seen.append)
        assert seen and seen[-1] == pytest.approx(1.0)
        assert all(b >= a for a, b in zip(seen, seen[1:]))

    def test_incomplete_problem_enumerates_smaller_space(self, school):
        smaller = school.criterion_matrices[3].drop_pair(0, 1)
        problem = Problem(
            alternatives=school.alternatives,
            criteria=school.criteria,
            criterion_matrices=(
                school.criterion_matrices[:3] + (smaller,) + school.criterion_matrices[4:]
            ),
            weight_matrix=school.weight_matrix,
        )
        assert combination_space(problem) == 944_784 // 3
        result = acceptability_enumerate(problem)
        assert result.combinations_evaluated == 944_784 // 3


class TestSample:
    def test_deterministic_given_seed(self, school):
        plan = SamplePlan.create(iterations=300, seed=42)
        a = acceptability_sample(school, plan)
        b = acceptability_sample(school, plan)
        assert a == b

    def test_worker_count_does_not_change_counts(self, school):
        plan = SamplePlan.create(iterations=200, seed=42)
        serial = acceptability_sample(school, plan, workers=1)
        parallel = acceptability_sample(school, plan, workers=3)
        assert serial == parallel

    def test_consistent_problem_is_degenerate(self):
        problem = consistent_problem()
        plan = SamplePlan.create(iterations=400, seed=8)
        result = acceptability_sample(problem, plan)
        n = len(result.alternatives)
        for i in range(n):
            for j in range(n):
                if i != j:
                    assert result.preference_counts[i][j] in (0, 400)
            assert set(result.rank_counts[i]) <= {0, 400}

    def test_sampled_close_to_enumerated(self, school):
        plan = SamplePlan.create(iterations=16641, seed=1)
        sampled = acceptability_sample(school, plan)
        enumerated = acceptability_enumerate(school)
        assert sampled.preference_probability(0, 1) == pytest.approx(
            enumerated.preference_probability(0, 1), abs=0.01
        )
        assert sampled.rank_probability(2, 3) == pytest.approx(
            enumerated.rank_probability(2, 3), abs=0.01
        )

    def test_plan_recorded(self, school):
        plan = SamplePlan.create(iterations=10, seed=3)
        result = acceptability_sample(school, plan)
        assert result.plan == plan
        assert result.mode == "sampled"
        assert result.total_space == 944_784


class TestSamplingOracleBand:
    def test_sampled_probabilities_track_enumeration(self):
        """100 random small problems: a 16,641-iteration sample lands within
        ±0.01 of the exact enumerated probabilities in at least 99 of them
        (the confidence the plan formula promises at λ=0.01, C=99)."""
        import random as stdlib_random

        rng = stdlib_random.Random(424242)
        pool = [Fraction(k) for k in range(1, 10)] + [Fraction(1, k) for k in range(2, 10)]

        def random_matrix(size):
            rows = [[None] * size for _ in range(size)]
            for i in range(size):
                rows[i][i] = 1
                for j in range(i + 1, size):
                    rows[i][j] = rng.choice(pool)
            return validate(rows)

        within_band = 0
        for trial in range(100):
            n = rng.randint(2, 3)
            m = rng.randint(2, 3)
            problem = Problem(
                alternatives=tuple(f"a{i}" for i in range(n)),
                criteria=tuple(f"g{j}" for j in range(m)),
                criterion_matrices=tuple(random_matrix(n) for _ in range(m)),
                weight_matrix=random_matrix(m),
            )
            assert combination_space(problem) <= 50_000
            exact = acceptability_enumerate(problem)
            sampled = acceptability_sample(
                problem, SamplePlan.create(accuracy="0.01", confidence=99, seed=trial)
            )
            assert sampled.plan.iterations == 16641
            worst = 0.0
            for i in range(n):
                for j in range(n):
                    if i != j:
                        worst = max(
                            worst,
                            abs(sampled.preference_probability(i, j)
                                - exact.preference_probability(i, j)),
                        )
                    worst = max(
                        worst,
                        abs(sampled.rank_probability(i, j + 1) - exact.rank_probability(i, j + 1)),
                    )
            within_band += worst <= 0.01
        assert within_band >= 99


class TestSummarize:
    def test_two_identical_runs_have_zero_deviation(self, school):
        plan = SamplePlan.create(iterations=100, seed=21)
        result = acceptability_sample(school, plan)
        summary = summarize([result, result])
        assert summary.runs == 2
        assert all(sd == 0 for row in summary.preference_sd for sd in row)

    def test_single_run_reports_mean_only(self, school):
        result = acceptability_sample(school, SamplePlan.create(iterations=50, seed=2))
        summary = summarize([result])
        assert summary.preference_sd is None
        assert summary.rank_sd is None

    def test_mixed_problems_rejected(self, school):
        a = acceptability_sample(school, SamplePlan.create(iterations=20, seed=1))
        b = acceptability_sample(consistent_problem(), SamplePlan.create(iterations=20, seed=1))
        with pytest.raises(MixedProblems):
            summarize([a, b])

    def test_mean_matches_hand_average(self, school):
        r1 = acceptability_sample(school, SamplePlan.create(iterations=100, seed=1))
        r2 = acceptability_sample(school, SamplePlan.create(iterations=100, seed=2))
        summary = summarize([r1, r2])
        expected = (r1.preference_probability(0, 1) + r2.preference_probability(0, 1)) / 2
        assert summary.preference_mean[0][1] == pytest.approx(expected)
