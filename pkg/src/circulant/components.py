from typing import NamedTuple

from src.circulant.graph import Graph, SimpleGraph
from src.complexes.bits import bits_of


class Component(NamedTuple):
    vertices: tuple[int, ...]
    graph: SimpleGraph


def component_masks(graph: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest vertex."""
    remaining = (1 << graph.n) - 1
    masks = []
    while remaining:
        seed = remaining & -remaining
        reached = seed
        frontier = seed
        while frontier:
            grown = 0
            for v in bits_of(frontier):
                grown |= graph.adjacency[v]
            frontier = grown & ~reached
            reached |= frontier
        masks.append(reached)
        remaining &= ~reached
    return masks


def induced_subgraph(graph: Graph, vertices: tuple[int, ...]) -> SimpleGraph:
    """Induced graph relabeled 0..k-1 in increasing order of the original labels."""
    position = {v: k for k, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        row = 0
        for w in bits_of(graph.adjacency[v]):
            if w in position:
                row |= 1 << position[w]
        rows.append(row)
    return SimpleGraph(n=len(vertices), adjacency=tuple(rows))


def connected_components(graph: Graph) -> list[Component]:
    return [
        Component(vertices=bits_of(mask), graph=induced_subgraph(graph, bits_of(mask)))
        for mask in component_masks(graph)
    ]


def is_connected_graph(graph: Graph) -> bool:
    return len(component_masks(graph)) <= 1
