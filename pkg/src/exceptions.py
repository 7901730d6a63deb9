"""Exception hierarchy shared by the graph, complex, homology and sweep layers."""

from typing import Any


class SerreError(Exception):
    """Base exception for every failure raised by this package."""

    def __init__(self, message: str, context: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.context = context or {}


class GraphSpecError(SerreError, ValueError):
    """Raised for an invalid vertex count or generating set."""
    pass


class ParameterDomainError(GraphSpecError):
    """Raised when family or theorem parameters fall outside their domain."""
    pass


class VertexBudgetError(SerreError, ValueError):
    """Raised when an input exceeds a vertex budget (bit-vector width or isomorphism search)."""
    pass


class ComplexError(SerreError, ValueError):
    """Raised for invalid simplicial complexes or operations undefined on them."""
    pass


class FaceNotInComplexError(ComplexError):
    """Raised when a face is not contained in any facet."""
    pass


class FieldSpecError(SerreError, ValueError):
    """Raised for a characteristic that is neither 0 nor prime."""
    pass


class SearchBudgetExceeded(SerreError):
    """Raised inside exhaustive searches when the node budget runs out."""

    def __init__(self, message: str, nodes: int) -> None:
        super().__init__(message, {"nodes": nodes})
        self.nodes = nodes


class CacheError(SerreError):
    """Raised when the report cache cannot be opened or written."""
    pass


class WitnessError(SerreError, ValueError):
    """Raised for malformed witness payloads or witness files."""
    pass
