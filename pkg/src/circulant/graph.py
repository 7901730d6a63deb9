"""Graphs on vertices 0..n-1 with bit-vector adjacency rows."""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Protocol

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.exceptions import GraphSpecError, VertexBudgetError

MAX_VERTICES = 63


class Graph(Protocol):
    """Anything with a vertex count and one adjacency bitmask per vertex."""

    @property
    def n(self) -> int: ...

    @property
    def adjacency(self) -> tuple[int, ...]: ...


class AdjacencyOps:
    """Queries shared by every graph type; relies on ``n`` and ``adjacency``."""

    def is_adjacent(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adjacency)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            higher = row >> (u + 1)
            v = u + 1
            while higher:
                if higher & 1:
                    yield (u, v)
                higher >>= 1
                v += 1

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges_frame(self) -> pd.DataFrame:
        return pd.DataFrame(list(self.edges()), columns=["u", "v"])

    def edges_csv(self) -> str:
        """Edge list as CSV with a ``u,v`` header, rows sorted lexicographically."""
        return self.edges_frame().to_csv(index=False)


@dataclass(frozen=True)
class SimpleGraph(AdjacencyOps):
    """General simple graph; produced by component extraction and disjoint unions."""

    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n > MAX_VERTICES:
            raise VertexBudgetError(f"Graph on {self.n} vertices exceeds the {MAX_VERTICES}-vertex limit")
        if len(self.adjacency) != self.n:
            raise GraphSpecError(f"Expected {self.n} adjacency rows, got {len(self.adjacency)}")
        for u, row in enumerate(self.adjacency):
            if row >> self.n:
                raise GraphSpecError(f"Vertex {u} has a neighbour outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphSpecError(f"Loop at vertex {u}")
            v = 0
            rest = row
            while rest:
                if rest & 1 and not self.adjacency[v] >> u & 1:
                    raise GraphSpecError(f"Adjacency is not symmetric at ({u}, {v})")
                rest >>= 1
                v += 1

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphSpecError(f"Loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n=n, adjacency=tuple(rows))

    @classmethod
    def of(cls, graph: Graph) -> "SimpleGraph":
        if isinstance(graph, SimpleGraph):
            return graph
        return cls(n=graph.n, adjacency=tuple(graph.adjacency))


def check_circulant_spec(n: int, gens: Iterable[int]) -> tuple[int, ...]:
    """Validate a circulant specification and return the sorted generator tuple.

    Raises:
        GraphSpecError: n < 1 or a generator outside 1..n//2
        VertexBudgetError: n above the bit-vector width
    """
    if n < 1:
        raise GraphSpecError(f"Vertex count must be positive, got {n}")
    if n > MAX_VERTICES:
        raise VertexBudgetError(f"n={n} exceeds the {MAX_VERTICES}-vertex limit")
    unique = sorted(set(gens))
    bad = [s for s in unique if not 1 <= s <= n // 2]
    if bad:
        raise GraphSpecError(
            f"Generators {bad} outside 1..{n // 2} for n={n}", {"n": n, "gens": unique}
        )
    return tuple(unique)


class CirculantGraph(BaseModel, AdjacencyOps):
    """C_n(S): vertex i adjacent to i +/- s (mod n) for every s in S."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="Vertex count")
    gens: tuple[int, ...] = Field(..., description="Sorted generating set, each in 1..n//2")

    @field_validator("gens", mode="before")
    @classmethod
    def sort_gens(cls, v: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(set(v)))

    @model_validator(mode="after")
    def validate_spec(self) -> "CirculantGraph":
        check_circulant_spec(self.n, self.gens)
        return self

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        rows = []
        for i in range(self.n):
            row = 0
            for s in self.gens:
                row |= 1 << ((i + s) % self.n)
                row |= 1 << ((i - s) % self.n)
            rows.append(row)
        return tuple(rows)

    @property
    def label(self) -> str:
        return f"C_{self.n}({','.join(str(s) for s in self.gens)})"

    def key(self) -> str:
        """Canonical serialization, used as the cache key."""
        return self.model_dump_json()

    def rotate(self, v: int, r: int) -> int:
        return (v + r) % self.n


def make_circulant(n: int, gens: Iterable[int]) -> CirculantGraph:
    """Build C_n(S), rejecting generators outside 1..n//2 and n < 1."""
    return CirculantGraph(n=n, gens=check_circulant_spec(n, gens))


def disjoint_union(first: Graph, second: Graph) -> SimpleGraph:
    """Disjoint union with the second graph's vertices shifted past the first's."""
    offset = first.n
    rows = list(first.adjacency) + [row << offset for row in second.adjacency]
    return SimpleGraph(n=first.n + second.n, adjacency=tuple(rows))


def graph_label(graph: Graph) -> str:
    if isinstance(graph, CirculantGraph):
        return graph.label
    return f"G_{graph.n}[{sum(r.bit_count() for r in graph.adjacency) // 2} edges]"
