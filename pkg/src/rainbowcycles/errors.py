"""Exception hierarchy shared by all modules."""

from __future__ import annotations

from typing import Any, Optional


class RainbowError(Exception):
    """Base class for every error raised by the package."""


# graph construction ---------------------------------------------------------

class GraphError(RainbowError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class NegativeId(GraphError):
    pass


class EmptyOutNeighborhood(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} has no out-neighbors")
        self.vertex = vertex


class FormatError(GraphError):
    """Malformed text graph file."""


# contraction / lifting ------------------------------------------------------

class UnassignedVertex(GraphError):
    pass


class NonAdjacentAssignment(GraphError):
    pass


class LiftFailure(RainbowError, AssertionError):
    """A lifted cycle failed verification. Always a bug, never expected."""


class InternalConsistencyError(RainbowError, AssertionError):
    pass


# search ---------------------------------------------------------------------

class TooLarge(RainbowError, ValueError):
    pass


class BudgetExceeded(RainbowError):
    """The node budget ran out before the search could finish.

    ``best`` is the best certificate seen so far (may be None) and
    ``lower_bound`` is a length below which no rainbow cycle exists.
    """

    def __init__(self, best: Any = None, lower_bound: int = 3, nodes: int = 0):
        super().__init__(
            f"node budget exhausted after {nodes} nodes "
            f"(no rainbow cycle shorter than {lower_bound})"
        )
        self.best = best
        self.lower_bound = lower_bound
        self.nodes = nodes


# bounds ---------------------------------------------------------------------

class DomainError(RainbowError, ValueError):
    pass


class HypothesisViolated(RainbowError, ValueError):
    pass


# reductions -----------------------------------------------------------------

class PreconditionError(RainbowError, ValueError):
    pass


class ColorNotHit(RainbowError, ValueError):
    def __init__(self, color: int):
        super().__init__(f"no edge of color {color} touches the vertex set")
        self.color = color


class PipelineFailure(RainbowError):
    """A pipeline ended without a certificate. ``report`` has the details."""

    status = "failure"

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class NoCycleFound(PipelineFailure):
    status = "no_cycle"


class SampleFailure(PipelineFailure):
    status = "sample_failure"


# generators -----------------------------------------------------------------

class GeneratorError(RainbowError, ValueError):
    pass


class DigonRisk(GeneratorError):
    def __init__(self, s: int, n: int):
        super().__init__(f"steps {s} and {n - s} would create digons")
        self.pair = (s, n - s)


class InfeasibleDegree(GeneratorError):
    pass


class TooDense(GeneratorError):
    pass


# harness --------------------------------------------------------------------

class ConfigError(RainbowError, ValueError):
    pass
