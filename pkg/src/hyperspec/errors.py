"""Exception hierarchy shared by every hyperspec module."""


class HyperspecError(Exception):
    """Base class for all errors raised by hyperspec."""


class HypergraphError(HyperspecError, ValueError):
    pass


class EdgeOutOfRange(HypergraphError):
    pass


class EmptyEdge(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class RepeatedVertex(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError, IndexError):
    pass


class EdgeIndexOutOfRange(HypergraphError, IndexError):
    pass


class EmptySubset(HypergraphError):
    pass


class NotUniform(HypergraphError):
    pass


class ParseError(HypergraphError):
    """Malformed ``.uhg`` or JSON hypergraph input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SpectralError(HyperspecError, ArithmeticError):
    pass


class Disconnected(SpectralError):
    pass


class NoConvergence(SpectralError):
    pass


class NotUnit(SpectralError):
    pass


class FamilyError(HyperspecError, ValueError):
    pass


class BadDivisibility(FamilyError):
    pass


class BadDelta(FamilyError):
    pass


class TooSmall(FamilyError):
    pass


class BadA(FamilyError):
    pass


class BadAnchorDegrees(FamilyError):
    pass


class BadS(FamilyError):
    pass


class GraftError(HyperspecError, ValueError):
    pass


class PreconditionViolated(GraftError):
    pass


class ResultingDuplicateEdge(GraftError):
    pass


class ComponentHypothesisFailed(GraftError):
    pass


class EnumerationTooLarge(HyperspecError, ValueError):
    pass


class NoRootFound(HyperspecError, ArithmeticError):
    pass
