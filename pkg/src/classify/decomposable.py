"""Vertex decomposability via shedding vertices, memoized over facet sets."""

from src.complexes.bits import bits_of
from src.complexes.simplicial import SimplicialComplex, canonical_facets, compact_facets, facets_connected
from src.exceptions import ComplexError, SearchBudgetExceeded
from src.models.common import Outcome
from src.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_BUDGET = 10_000_000


def is_vertex_decomposable(complex_: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> Outcome:
    """
    Decide pure vertex decomposability.

    A complex is vertex decomposable when it is a simplex, or some vertex v
    is shedding (every facet of link v lies in a facet avoiding v) and both
    link v and the deletion of v are vertex decomposable. Non-pure input is
    reported FALSE, and so is any disconnected facet set of dimension >= 1
    met during the search.
    """
    if complex_.is_void:
        raise ComplexError("Vertex decomposability is undefined for the void complex")
    if not complex_.is_pure():
        return Outcome.FALSE

    memo: dict[tuple[int, ...], bool] = {}
    nodes = 0

    def decomposable(facets: tuple[int, ...]) -> bool:
        nonlocal nodes
        if len(facets) == 1:
            return True
        key = compact_facets(facets)
        if key in memo:
            return memo[key]
        if max(f.bit_count() for f in facets) > 1 and not facets_connected(facets):
            memo[key] = False
            return False
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"Vertex decomposition search exceeded {budget} nodes", nodes)

        vertices = 0
        for f in facets:
            vertices |= f
        result = False
        for v in bits_of(vertices):
            bit = 1 << v
            rest = [f for f in facets if not f & bit]
            if not rest:
                continue
            link = [f & ~bit for f in facets if f & bit]
            if not all(any(g & ~r == 0 for r in rest) for g in link):
                continue
            if decomposable(canonical_facets(link)) and decomposable(canonical_facets(rest)):
                result = True
                break
        memo[key] = result
        return result

    try:
        return Outcome.TRUE if decomposable(complex_.facets) else Outcome.FALSE
    except SearchBudgetExceeded as e:
        logger.info(f"Vertex decomposition search timed out after {e.nodes} nodes")
        return Outcome.TIMEOUT
