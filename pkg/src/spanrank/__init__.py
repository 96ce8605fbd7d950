"""spanrank: rank-acceptability analysis of pairwise comparison judgements.

Inconsistent judgements admit many defensible priority vectors, one per
spanning tree of each comparison graph.  This toolkit evaluates all (or a
uniform sample of) cross-matrix tree combinations and reports the
probability that each alternative attains each rank and beats each other
alternative.
"""

__version__ = "0.1.0"

from .errors import (
    BadAccuracy,
    BadConfidence,
    BadDiagonal,
    CapExceeded,
    DisconnectedGraph,
    IncompleteMatrix,
    InvalidDocument,
    MixedProblems,
    NoConvergence,
    NonPositiveEntry,
    ReciprocityViolation,
    SpaceTooLarge,
    SpanrankError,
    UnsupportedSize,
    WalkStall,
)
from .pcm import (
    Judgement,
    PairwiseMatrix,
    PriorityVector,
    Problem,
    check_transitivity,
    consistency_ratio,
    is_connected,
    priority_eigen,
    priority_geomean,
    validate,
)
from .spantree import (
    ComparisonGraph,
    SpanningTree,
    count_trees,
    enumerate_trees,
    to_graph,
    tree_priority,
)
from .sampling import (
    RandomStream,
    SamplePlan,
    TreeCombination,
    iteration_stream,
    random_tree,
    required_iterations,
    sample_combinations,
)
from .acceptability import (
    AcceptabilityResult,
    ResultSummary,
    ScoreVector,
    acceptability_enumerate,
    acceptability_sample,
    combination_space,
    overall_priority,
    rank_of,
    summarize,
)

__all__ = [
    "__version__",
    "AcceptabilityResult",
    "BadAccuracy",
    "BadConfidence",
    "BadDiagonal",
    "CapExceeded",
    "ComparisonGraph",
    "DisconnectedGraph",
    "IncompleteMatrix",
    "InvalidDocument",
    "Judgement",
    "MixedProblems",
    "NoConvergence",
    "NonPositiveEntry",
    "PairwiseMatrix",
    "PriorityVector",
    "Problem",
    "RandomStream",
    "ReciprocityViolation",
    "ResultSummary",
    "SamplePlan",
    "ScoreVector",
    "SpaceTooLarge",
    "SpanningTree",
    "SpanrankError",
    "TreeCombination",
    "UnsupportedSize",
    "WalkStall",
    "acceptability_enumerate",
    "acceptability_sample",
    "check_transitivity",
    "combination_space",
    "consistency_ratio",
    "count_trees",
    "enumerate_trees",
    "is_connected",
    "iteration_stream",
    "overall_priority",
    "priority_eigen",
    "priority_geomean",
    "random_tree",
    "rank_of",
    "required_iterations",
    "sample_combinations",
    "summarize",
    "to_graph",
    "tree_priority",
    "validate",
]
