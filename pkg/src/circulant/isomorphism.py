"""Backtracking isomorphism test for small graphs, returning a checkable bijection."""

from typing import NamedTuple

from src.circulant.graph import Graph
from src.complexes.bits import bits_of
from src.exceptions import VertexBudgetError

DEFAULT_VERTEX_BUDGET = 16


class IsomorphismResult(NamedTuple):
    isomorphic: bool
    mapping: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def _vertex_invariants(graph: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degrees = [row.bit_count() for row in graph.adjacency]
    return [
        (degrees[v], tuple(sorted(degrees[w] for w in bits_of(graph.adjacency[v]))))
        for v in range(graph.n)
    ]


def _search_order(graph: Graph) -> list[int]:
    """Breadth-first order so that every vertex after a component's root has a placed neighbour."""
    order: list[int] = []
    seen = 0
    for root in range(graph.n):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in bits_of(graph.adjacency[v] & ~seen):
                seen |= 1 << w
                queue.append(w)
    return order


def graphs_isomorphic(
    first: Graph, second: Graph, max_vertices: int = DEFAULT_VERTEX_BUDGET
) -> IsomorphismResult:
    """
    Decide whether two graphs are isomorphic.

    Args:
        first: Source graph
        second: Target graph
        max_vertices: Search budget; larger inputs are rejected

    Returns:
        Result with ``mapping[v]`` the image of vertex v when isomorphic

    Raises:
        VertexBudgetError: Either graph has more than ``max_vertices`` vertices
    """
    if max(first.n, second.n) > max_vertices:
        raise VertexBudgetError(
            f"Isomorphism search limited to {max_vertices} vertices, got {first.n} and {second.n}"
        )
    if first.n != second.n:
        return IsomorphismResult(False)

    inv_first = _vertex_invariants(first)
    inv_second = _vertex_invariants(second)
    if sorted(inv_first) != sorted(inv_second):
        return IsomorphismResult(False)

    n = first.n
    order = _search_order(first)
    mapping = [-1] * n
    all_targets = (1 << n) - 1

    def extend(k: int, mapped: int, used: int) -> bool:
        if k == n:
            return True
        v = order[k]
        placed_neighbours = first.adjacency[v] & mapped
        image = 0
        for x in bits_of(placed_neighbours):
            image |= 1 << mapping[x]
        if placed_neighbours:
            anchor = mapping[(placed_neighbours & -placed_neighbours).bit_length() - 1]
            candidates = second.adjacency[anchor] & ~used
        else:
            candidates = all_targets & ~used
        for w in bits_of(candidates):
            if inv_second[w] != inv_first[v]:
                continue
            if second.adjacency[w] & used != image:
                continue
            mapping[v] = w
            if extend(k + 1, mapped | 1 << v, used | 1 << w):
                return True
            mapping[v] = -1
        return False

    if extend(0, 0, 0):
        return IsomorphismResult(True, tuple(mapping))
    return IsomorphismResult(False)


def verify_isomorphism(first: Graph, second: Graph, mapping: tuple[int, ...]) -> bool:
    """Certificate check: ``mapping`` is a bijection carrying edges onto edges."""
    if first.n != second.n or len(mapping) != first.n:
        return False
    if sorted(mapping) != list(range(first.n)):
        return False
    first_edges = 0
    for u, row in enumerate(first.adjacency):
        for v in bits_of(row >> (u + 1) << (u + 1)):
            first_edges += 1
            if not second.adjacency[mapping[u]] >> mapping[v] & 1:
                return False
    second_edges = sum(row.bit_count() for row in second.adjacency) // 2
    return first_edges == second_edges
