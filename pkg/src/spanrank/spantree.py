"""Graph view of a judgement matrix and spanning-tree machinery.

A spanning tree of the comparison graph is a minimal set of judgements that
still relates every item, and it admits exactly one consistent priority
vector.  Counting uses the matrix-tree theorem on the unweighted Laplacian
(tree multiplicity depends on topology only); enumeration is deterministic
and lexicographic so downstream outputs are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Mapping

from .errors import CapExceeded
from .pcm import PairwiseMatrix, PriorityVector

Edge = tuple[int, int]


@dataclass(frozen=True)
class ComparisonGraph:
    """Items as nodes, judged pairs as undirected edges.

    ``ratios[(i, j)]`` with i < j stores the judged ratio weight_i/weight_j.
    """

    nodes: int
    edges: tuple[Edge, ...]
    ratios: Mapping[Edge, Fraction]

    def ratio(self, i: int, j: int) -> Fraction:
        """Judged ratio weight_i/weight_j for any edge orientation."""
        if i < j:
            return self.ratios[(i, j)]
        return 1 / self.ratios[(j, i)]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.nodes)]
        for i, j in self.edges:
            out[i].append(j)
            out[j].append(i)
        return tuple(tuple(neighbours) for neighbours in out)


@dataclass(frozen=True)
class SpanningTree:
    """Exactly nodes-1 edges forming one acyclic connected component."""

    edges: tuple[Edge, ...]


def to_graph(matrix: PairwiseMatrix) -> ComparisonGraph:
    """Comparison graph of a validated matrix; complete matrix gives K_n."""
    edges = []
    ratios = {}
    for j in matrix.pairs():
        edges.append((j.row, j.col))
        ratios[(j.row, j.col)] = j.value
    edges.sort()
    return ComparisonGraph(matrix.size, tuple(edges), ratios)


def _minor_determinant(laplacian: list[list[int]]) -> int:
    """Exact determinant of an integer matrix, Bareiss fraction-free style.

    All intermediate divisions are exact, so the arithmetic stays in Python
    ints of arbitrary precision and the count can never overflow.
    """
    m = [row[:] for row in laplacian]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def count_trees(graph: ComparisonGraph) -> int:
    """Exact spanning-tree count via the matrix-tree theorem.

    Any principal minor of the graph Laplacian works; we drop row/column 0.
    Equals k^(k-2) on the complete graph K_k, and 0 when the graph is
    disconnected.
    """
    n = graph.nodes
    laplacian = [[0] * n for _ in range(n)]
    for i, j in graph.edges:
        laplacian[i][i] += 1
        laplacian[j][j] += 1
        laplacian[i][j] -= 1
        laplacian[j][i] -= 1
    minor = [row[1:] for row in laplacian[1:]]
    return _minor_determinant(minor)


def enumerate_trees(graph: ComparisonGraph, cap: int = 10_000_000) -> Iterator[SpanningTree]:
    """Yield every spanning tree exactly once, lexicographic by edge list.

    Refuses up front (CapExceeded) when the matrix-tree count exceeds
    ``cap``, directing the caller to sampling instead.
    """
    total = count_trees(graph)
    if total > cap:
        raise CapExceeded(f"graph has {total} spanning trees, above the cap of {cap}")
    return _tree_iter(graph)


def _tree_iter(graph: ComparisonGraph) -> Iterator[SpanningTree]:
    n = graph.nodes
    edges = graph.edges  # already sorted, so index order is lexicographic order
    if n == 1:
        yield SpanningTree(())
        return

    def connectable(chosen_parent: list[int], from_index: int) -> bool:
        # Can the current forest still be joined using edges[from_index:]?
        reps = {_find(chosen_parent, v) for v in range(n)}
        if len(reps) == 1:
            return True
        parent = chosen_parent[:]
        components = len(reps)
        for i, j in edges[from_index:]:
            ri, rj = _find(parent, i), _find(parent, j)
            if ri != rj:
                parent[ri] = rj
                components -= 1
                if components == 1:
                    return True
        return False

    def recurse(index: int, chosen: list[Edge], parent: list[int]) -> Iterator[SpanningTree]:
        if len(chosen) == n - 1:
            yield SpanningTree(tuple(chosen))
            return
        if index == len(edges) or len(edges) - index < (n - 1) - len(chosen):
            return
        i, j = edges[index]
        ri, rj = _find(parent, i), _find(parent, j)
        if ri != rj:
            taken = parent[:]
            taken[ri] = rj
            chosen.append((i, j))
            yield from recurse(index + 1, chosen, taken)
            chosen.pop()
        # Skip this edge; prune if the rest can no longer span.
        if connectable(parent, index + 1):
            yield from recurse(index + 1, chosen, parent)

    yield from recurse(0, [], list(range(n)))


def _find(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def tree_priority(tree: SpanningTree, graph: ComparisonGraph) -> PriorityVector:
    """The unique consistent priority vector implied by one spanning tree.

    Fix item 0 at weight 1 and propagate along tree edges: crossing edge
    (i, j) with judged ratio r = w_i/w_j forces w_j = w_i / r.  Tree ratios
    admit exactly one consistent extension, so the result is independent of
    traversal order; exact rationals keep each edge ratio reproduced
    exactly.
    """
    n = graph.nodes
    if len(tree.edges) != n - 1:
        raise ValueError(f"tree has {len(tree.edges)} edges, expected {n - 1}")
    adjacency: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
    for i, j in tree.edges:
        r = graph.ratio(i, j)
        adjacency[i].append((j, r))
        adjacency[j].append((i, 1 / r))
    weights: list[Fraction | None] = [None] * n
    weights[0] = Fraction(1)
    stack = [0]
    while stack:
        node = stack.pop()
        for other, ratio in adjacency[node]:
            if weights[other] is None:
                # ratio is w_node / w_other
                weights[other] = weights[node] / ratio
                stack.append(other)
    if any(w is None for w in weights):
        raise ValueError("edges do not span the graph")
    return PriorityVector.from_raw(weights)
