"""Exception types raised across the toolkit.

Every error carries a stable ``code`` (its class name) so callers such as
the HTTP service can report machine-readable violations.
"""


class SpanrankError(Exception):
    """Base class for all toolkit errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NonPositiveEntry(SpanrankError):
    """A judgement value is zero, negative, or not a number."""


class ReciprocityViolation(SpanrankError):
    """Entries (i, j) and (j, i) were both given but do not multiply to 1."""


class BadDiagonal(SpanrankError):
    """A diagonal entry other than 1 was supplied.

    Diagonals of a reciprocal judgement matrix are 1 by definition, so a
    different value almost always means a row was shifted or a cell was
    typed into the wrong place.
    """


class DisconnectedGraph(SpanrankError):
    """The comparison graph does not connect all items; no priority vector
    can relate items across disconnected components."""


class IncompleteMatrix(SpanrankError):
    """The operation requires every off-diagonal judgement to be present."""


class NoConvergence(SpanrankError):
    """Power iteration failed to converge within the iteration budget."""


class UnsupportedSize(SpanrankError):
    """Matrix size outside the range covered by the random-index table."""


class CapExceeded(SpanrankError):
    """The graph has more spanning trees than the enumeration cap allows."""


class SpaceTooLarge(SpanrankError):
    """The combination space exceeds the enumeration cap; use sampling."""


class BadAccuracy(SpanrankError):
    """Accuracy must lie strictly between 0 and 1."""


class BadConfidence(SpanrankError):
    """Confidence must be a percentage strictly between 0 and 100."""


class WalkStall(SpanrankError):
    """A random walk exceeded the hard step cap without covering the graph."""


class MixedProblems(SpanrankError):
    """Results from different problems cannot be summarized together."""


class InvalidDocument(SpanrankError):
    """A problem document violates the schema.

    ``violations`` lists every problem found, each as a dict with ``code``,
    ``location``, and ``detail`` keys.
    """

    def __init__(self, violations: list[dict]):
        self.violations = violations
        summary = "; ".join(f"{v['location']}: {v['detail']}" for v in violations)
        super().__init__(f"invalid problem document: {summary}")
