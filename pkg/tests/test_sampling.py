from collections import Counter
from fractions import Fraction

import pytest

from spanrank.errors import BadAccuracy, BadConfidence, WalkStall
from spanrank.pcm import validate
from spanrank.sampling import (
    RandomStream,
    SamplePlan,
    iteration_stream,
    random_tree,
    required_iterations,
    sample_combinations,
)
from spanrank.spantree import enumerate_trees, to_graph


def k_n(n):
    return to_graph(validate([[1] * n for _ in range(n)]))


class TestRequiredIterations:
    def test_paper_setting(self):
        assert required_iterations("0.01", 99) == 16641

    def test_float_inputs_mean_their_decimal_value(self):
        assert required_iterations(0.01, 99) == 16641

    def test_z_override(self):
        assert required_iterations(0.5, 99, z_override=2) == 4
        assert required_iterations("0.01", 95, z_override=1.96) == 9604

    def test_true_quantile_at_95(self):
        # 1.9599639845...^2 / 0.0004 rounds up to the same 9604
        assert required_iterations("0.01", 95) == 9604

    @pytest.mark.parametrize("bad", [0, 1, -0.5, "3/2"])
    def test_bad_accuracy(self, bad):
        with pytest.raises(BadAccuracy):
            required_iterations(bad, 99)

    @pytest.mark.parametrize("bad", [0, 100, -5, 250])
    def test_bad_confidence(self, bad):
        with pytest.raises(BadConfidence):
            required_iterations(0.01, bad)


class TestSamplePlan:
    def test_derived_iterations(self):
        plan = SamplePlan.create(accuracy="0.02", confidence=99, seed=3)
        assert plan.iterations == required_iterations("0.02", 99)
        assert not plan.iterations_overridden
        assert plan.z_value == Fraction(258, 100)

    def test_override_recorded(self):
        plan = SamplePlan.create(iterations=500, seed=3)
        assert plan.iterations == 500
        assert plan.iterations_overridden

    def test_zero_iterations_allowed_as_override(self):
        assert SamplePlan.create(iterations=0).iterations == 0

    def test_seed_range(self):
        with pytest.raises(ValueError):
            SamplePlan.create(seed=-1)
        with pytest.raises(ValueError):
            SamplePlan.create(seed=1 << 64)


class TestRandomStream:
    def test_same_key_same_sequence(self):
        a = RandomStream(12345)
        b = RandomStream(12345)
        assert [a.randint(7) for _ in range(500)] == [b.randint(7) for _ in range(500)]

    def test_different_keys_differ(self):
        a = RandomStream(1)
        b = RandomStream(2)
        assert [a.randint(1000) for _ in range(50)] != [b.randint(1000) for _ in range(50)]

    def test_bounds_respected(self):
        s = RandomStream(9)
        values = [s.randint(5) for _ in range(1000)]
        assert set(values) <= {0, 1, 2, 3, 4}
        assert set(values) == {0, 1, 2, 3, 4}


class TestRandomTree:
    def test_path_graph_always_unique_tree(self):
        g = to_graph(validate([[1, 2, None], [None, 1, 2], [None, None, 1]]))
        stream = iteration_stream(0, 0)
        for _ in range(100):
            assert random_tree(g, stream).edges == ((0, 1), (1, 2))

    def test_k3_frequencies_near_uniform(self):
        g = k_n(3)
        stream = iteration_stream(42, 0)
        counts = Counter(random_tree(g, stream).edges for _ in range(30_000))
        assert len(counts) == 3
        for votes in counts.values():
            assert abs(votes / 30_000 - 1 / 3) < 0.01

    def test_every_tree_is_valid_for_incomplete_graph(self):
        m = validate(
            [
                [1, 2, None, 2],
                [None, 1, 2, None],
                [None, None, 1, 2],
                [None, None, None, 1],
            ]
        )
        g = to_graph(m)
        valid = {t.edges for t in enumerate_trees(g)}
        stream = iteration_stream(3, 5)
        drawn = {random_tree(g, stream).edges for _ in range(2000)}
        assert drawn == valid  # all trees seen, nothing invalid

    def test_uniform_on_incomplete_graph(self):
        # K_4 minus one edge has 8 spanning trees; chi-square at 0.001 with
        # 7 degrees of freedom has critical value 24.32
        m = validate([[1, 1, None, 1], [None, 1, 1, 1], [None, None, 1, 1], [None, None, None, 1]])
        g = to_graph(m)
        trees = [t.edges for t in enumerate_trees(g)]
        assert len(trees) == 8
        draws = 80_000
        stream = iteration_stream(99, 0)
        counts = Counter(random_tree(g, stream).edges for _ in range(draws))
        expected = draws / 8
        chi2 = sum((counts.get(t, 0) - expected) ** 2 / expected for t in trees)
        assert chi2 < 24.32

    def test_walk_stall_guard(self):
        class StuckStream:
            def randint(self, bound):
                return 0

        g = to_graph(validate([[1, 2, None], [None, 1, 2], [None, None, 1]]))
        with pytest.raises(WalkStall):
            random_tree(g, StuckStream(), step_cap=1000)

    def test_single_node_graph(self):
        g = to_graph(validate([[1]]))
        assert random_tree(g, iteration_stream(0, 0)).edges == ()


class TestSampleCombinations:
    def test_iteration_count_and_shape(self, school):
        plan = SamplePlan.create(iterations=50, seed=11)
        combos = list(sample_combinations(school, plan))
        assert len(combos) == 50
        for c in combos:
            assert len(c.criterion_trees) == 6
            assert all(len(t.edges) == 2 for t in c.criterion_trees)
            assert len(c.weight_tree.edges) == 5

    def test_zero_iterations_empty(self, school):
        plan = SamplePlan.create(iterations=0, seed=11)
        assert list(sample_combinations(school, plan)) == []

    def test_fixed_seed_reproduces(self, school):
        plan = SamplePlan.create(iterations=40, seed=123)
        assert list(sample_combinations(school, plan)) == list(sample_combinations(school, plan))

    def test_streams_keyed_by_iteration_not_position(self, school):
        # combination k is the same whether or not combinations 0..k-1 were drawn
        from spanrank.sampling import combination_at
        from spanrank.spantree import to_graph as graph_of

        graphs = [graph_of(m) for m in school.criterion_matrices]
        weight_graph = graph_of(school.weight_matrix)
        plan = SamplePlan.create(iterations=10, seed=77)
        streamed = list(sample_combinations(school, plan))
        direct = [combination_at(graphs, weight_graph, 77, k) for k in range(10)]
        assert streamed == direct

    def test_cross_matrix_independence(self):
        # joint (criterion-0 tree, weight tree) frequencies factorize
        rows3 = [[1, 2, 4], [None, 1, 2], [None, None, 1]]
        doc_matrices = [validate(rows3) for _ in range(3)]
        from spanrank.pcm import Problem

        problem = Problem(
            alternatives=("a", "b", "c"),
            criteria=("x", "y", "z"),
            criterion_matrices=tuple(doc_matrices),
            weight_matrix=validate([[1, 3, 1], [None, 1, 2], [None, None, 1]]),
        )
        plan = SamplePlan.create(iterations=20_000, seed=5)
        joint = Counter()
        left = Counter()
        right = Counter()
        for combo in sample_combinations(problem, plan):
            a = combo.criterion_trees[0].edges
            b = combo.weight_tree.edges
            joint[(a, b)] += 1
            left[a] += 1
            right[b] += 1
        n = plan.iterations
        for (a, b), c in joint.items():
            assert abs(c / n - (left[a] / n) * (right[b] / n)) < 0.015
