from src.circulant.graph import Graph
from src.classify.witnesses import Decision, impure_pair
from src.complexes.independence import independence_complex
from src.complexes.simplicial import SimplicialComplex


def is_well_covered(graph: Graph, complex_: SimplicialComplex | None = None) -> Decision:
    """Well-covered iff Ind(G) is pure; pass ``complex_`` to reuse an already built Ind(G)."""
    ind = complex_ if complex_ is not None else independence_complex(graph)
    witness = impure_pair(ind, "well_covered")
    return Decision(witness is None, witness)
