"""Uniform random spanning trees and sample-size planning.

Tree draws use the first-entry random walk (Aldous-Broder): walk the graph
uniformly at random and keep the edge by which each node is first reached.
The resulting tree is uniform over all spanning trees of the graph, complete
or not.  Streams are counter-based (Philox) and keyed by (seed, iteration
index), so a sample is reproducible and independent of how iterations are
partitioned across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from statistics import NormalDist
from typing import Iterator, Sequence

import numpy as np

from .errors import BadAccuracy, BadConfidence, WalkStall
from .pcm import Problem
from .spantree import ComparisonGraph, SpanningTree, to_graph

_MASK64 = (1 << 64) - 1

# Z for a 99% two-sided interval, kept at the conventional two-decimal value
# so the worked iteration count 16,641 at (0.01, 99) reproduces exactly.
_Z99 = Fraction(258, 100)


def _exact(value) -> Fraction:
    """Exact rational from user input; floats are read as their shortest
    decimal representation (0.01 means 1/100, not its binary neighbour)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(Decimal(str(value)))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError, InvalidOperation) as exc:
            raise ValueError(f"cannot parse {value!r} as a number") from exc
    raise ValueError(f"cannot parse {value!r} as a number")


def z_score(confidence: Fraction, z_override=None) -> Fraction:
    """Two-sided z-score for a confidence percentage."""
    if z_override is not None:
        z = _exact(z_override)
        if z <= 0:
            raise BadConfidence(f"z override must be positive, got {z_override!r}")
        return z
    if confidence == 99:
        return _Z99
    quantile = NormalDist().inv_cdf(float((1 + confidence / 100) / 2))
    return _exact(str(quantile))


def required_iterations(accuracy, confidence, z_override=None) -> int:
    """Iterations needed to estimate probabilities within ``accuracy`` at a
    ``confidence``-percent level: ceil(Z^2 / (4 * accuracy^2)).

    Evaluated in exact rational arithmetic so boundary cases such as
    (0.01, 99) -> 16641 never drift across platforms.
    """
    lam = _exact(accuracy)
    if not 0 < lam < 1:
        raise BadAccuracy(f"accuracy must lie strictly between 0 and 1, got {accuracy!r}")
    conf = _exact(confidence)
    if not 0 < conf < 100:
        raise BadConfidence(f"confidence must lie strictly between 0 and 100, got {confidence!r}")
    z = z_score(conf, z_override)
    return math.ceil(z * z / (4 * lam * lam))


@dataclass(frozen=True)
class SamplePlan:
    """How a sampled analysis is sized and seeded.

    ``iterations`` defaults to the confidence-planning formula; passing it
    explicitly overrides the formula (recorded as-is for provenance).
    """

    accuracy: Fraction
    confidence: Fraction
    iterations: int
    seed: int
    z_value: Fraction
    iterations_overridden: bool = False

    @classmethod
    def create(
        cls,
        accuracy="0.01",
        confidence=99,
        z_override=None,
        iterations: int | None = None,
        seed: int = 0,
    ) -> "SamplePlan":
        lam = _exact(accuracy)
        conf = _exact(confidence)
        derived = required_iterations(lam, conf, z_override)
        if iterations is None:
            iterations = derived
            overridden = False
        else:
            if iterations < 0:
                raise ValueError(f"iterations must be nonnegative, got {iterations}")
            overridden = True
        if not 0 <= seed <= _MASK64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
        return cls(lam, conf, int(iterations), seed, z_score(conf, z_override), overridden)


@dataclass(frozen=True)
class TreeCombination:
    """One spanning tree per criterion matrix plus one for the weight matrix."""

    criterion_trees: tuple[SpanningTree, ...]
    weight_tree: SpanningTree


class RandomStream:
    """Buffered uniform integers from one counter-based Philox stream."""

    __slots__ = ("_gen", "_buffer", "_pos")
    _BLOCK = 128

    def __init__(self, key: int):
        self._gen = np.random.Generator(np.random.Philox(key=key))
        self._buffer = self._gen.integers(0, 1 << 64, size=self._BLOCK, dtype=np.uint64)
        self._pos = 0

    def randint(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection."""
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            if self._pos == self._BLOCK:
                self._buffer = self._gen.integers(0, 1 << 64, size=self._BLOCK, dtype=np.uint64)
                self._pos = 0
            value = int(self._buffer[self._pos])
            self._pos += 1
            if value < limit:
                return value % bound


def iteration_stream(seed: int, index: int) -> RandomStream:
    """The dedicated random stream for one sampling iteration.

    Keys combine (seed, index), so any partitioning of the index range over
    workers reproduces the same combinations.
    """
    return RandomStream(((seed & _MASK64) << 64) | (index & _MASK64))


def random_tree(
    graph: ComparisonGraph, stream: RandomStream, step_cap: int = 1_000_000_000
) -> SpanningTree:
    """One uniformly distributed spanning tree via a first-entry random walk.

    Start at a uniformly random node and repeatedly hop to a uniformly
    random neighbour; the entry edges of first visits form the tree.
    Connected graphs terminate with probability 1; ``step_cap`` guards a
    pathological stream.
    """
    n = graph.nodes
    if n == 1:
        return SpanningTree(())
    adjacency = graph.adjacency
    current = stream.randint(n)
    visited = [False] * n
    visited[current] = True
    unvisited = n - 1
    edges = []
    steps = 0
    while unvisited:
        if steps >= step_cap:
            raise WalkStall(f"random walk exceeded {step_cap} steps without covering the graph")
        neighbours = adjacency[current]
        nxt = neighbours[stream.randint(len(neighbours))]
        if not visited[nxt]:
            visited[nxt] = True
            unvisited -= 1
            edges.append((current, nxt) if current < nxt else (nxt, current))
        current = nxt
        steps += 1
    edges.sort()
    return SpanningTree(tuple(edges))


def combination_at(
    criterion_graphs: Sequence[ComparisonGraph],
    weight_graph: ComparisonGraph,
    seed: int,
    index: int,
) -> TreeCombination:
    """The deterministic tree combination for one iteration index."""
    stream = iteration_stream(seed, index)
    criterion_trees = tuple(random_tree(g, stream) for g in criterion_graphs)
    weight_tree = random_tree(weight_graph, stream)
    return TreeCombination(criterion_trees, weight_tree)


def sample_combinations(problem: Problem, plan: SamplePlan) -> Iterator[TreeCombination]:
    """Yield ``plan.iterations`` independent tree combinations.

    Each combination draws one tree from every criterion graph and one from
    the weight graph, all from the iteration's own stream.
    """
    criterion_graphs = [to_graph(m) for m in problem.criterion_matrices]
    weight_graph = to_graph(problem.weight_matrix)
    for index in range(plan.iterations):
        yield combination_at(criterion_graphs, weight_graph, plan.seed, index)
