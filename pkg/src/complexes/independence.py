"""Independence complexes via maximal-clique enumeration on the complement graph."""

from typing import Iterator

from src.circulant.graph import Graph, MAX_VERTICES
from src.complexes.bits import bits_of
from src.complexes.simplicial import SimplicialComplex, canonical_facets
from src.exceptions import VertexBudgetError


def complement_adjacency(graph: Graph) -> tuple[int, ...]:
    full = (1 << graph.n) - 1
    return tuple(full & ~row & ~(1 << v) for v, row in enumerate(graph.adjacency))


def maximal_independent_sets(graph: Graph) -> Iterator[int]:
    """Bron–Kerbosch with pivoting over the complement graph; yields vertex masks."""
    comp = complement_adjacency(graph)

    def expand(clique: int, candidates: int, excluded: int) -> Iterator[int]:
        if not candidates and not excluded:
            yield clique
            return
        pool = candidates | excluded
        pivot = max(bits_of(pool), key=lambda u: (comp[u] & candidates).bit_count())
        for v in bits_of(candidates & ~comp[pivot]):
            yield from expand(clique | 1 << v, candidates & comp[v], excluded & comp[v])
            candidates &= ~(1 << v)
            excluded |= 1 << v

    yield from expand(0, (1 << graph.n) - 1, 0)


def independence_complex(graph: Graph) -> SimplicialComplex:
    """Ind(G): facets are the maximal independent sets of G."""
    if graph.n > MAX_VERTICES:
        raise VertexBudgetError(f"Graph on {graph.n} vertices exceeds {MAX_VERTICES}")
    return SimplicialComplex(n_vertices=graph.n, facets=canonical_facets(maximal_independent_sets(graph)))
