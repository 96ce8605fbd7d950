#!/usr/bin/env python3
"""Goodness-of-fit check for the random-walk tree sampler.

Draws trees from a chosen complete graph and compares the empirical tree
frequencies against the uniform distribution with a chi-square statistic.
"""

import argparse
from collections import Counter

from spanrank.pcm import validate
from spanrank.sampling import iteration_stream, random_tree
from spanrank.spantree import count_trees, enumerate_trees, to_graph

# 0.001 critical values by degrees of freedom (tree count - 1)
CRITICAL = {2: 13.82, 15: 39.25, 124: 186.54}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=4, choices=[3, 4, 5])
    parser.add_argument("--draws-per-tree", type=int, default=10_000)
    parser.add_argument("--repetitions", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    graph = to_graph(validate([[1] * args.nodes for _ in range(args.nodes)]))
    trees = [t.edges for t in enumerate_trees(graph)]
    total_trees = count_trees(graph)
    draws = args.draws_per_tree * total_trees
    expected = draws / total_trees
    critical = CRITICAL[total_trees - 1]

    print(f"K_{args.nodes}: {total_trees} spanning trees, {draws} draws per repetition")
    passed = 0
    for rep in range(args.repetitions):
        stream = iteration_stream(args.seed + rep, 0)
        counts = Counter(random_tree(graph, stream).edges for _ in range(draws))
        chi2 = sum((counts.get(t, 0) - expected) ** 2 / expected for t in trees)
        verdict = "ok" if chi2 < critical else "REJECT"
        passed += chi2 < critical
        print(f"  rep {rep + 1:2d}: chi-square = {chi2:7.2f}  {verdict}")
    print(f"{passed}/{args.repetitions} repetitions below the 0.001 critical value {critical}")


if __name__ == "__main__":
    main()
