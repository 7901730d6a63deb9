"""Facet-based simplicial complexes over vertices 0..n_vertices-1.

Faces and facets are bitmasks. A complex is stored by its facets in canonical
form: an antichain sorted lexicographically by sorted vertex tuples. The void
complex has no facets; the irrelevant complex {∅} has the single facet 0.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Any, Iterable, Iterator

from src.complexes.bits import bits_of, mask_of, rotate_mask
from src.exceptions import ComplexError, FaceNotInComplexError, VertexBudgetError

MAX_VERTICES = 63


def canonical_facets(masks: Iterable[int]) -> tuple[int, ...]:
    """Sort an antichain of masks into canonical order (duplicates dropped)."""
    return tuple(sorted(set(masks), key=bits_of))


def maximal_sets(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of a family of masks, in canonical order."""
    by_size = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in by_size:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return canonical_facets(kept)


@lru_cache(maxsize=4096)
def faces_of_size(facets: tuple[int, ...], size: int) -> tuple[int, ...]:
    """All faces with ``size`` vertices, deduplicated over facet subsets, in lexicographic order."""
    if size == 0:
        return (0,) if facets else ()
    found: set[int] = set()
    for f in facets:
        if f.bit_count() < size:
            continue
        for combo in combinations(bits_of(f), size):
            m = 0
            for v in combo:
                m |= 1 << v
            found.add(m)
    return tuple(sorted(found, key=bits_of))


def compact_facets(facets: Iterable[int]) -> tuple[int, ...]:
    """Relabel the vertices in use to 0..m-1, keeping their order."""
    facets = tuple(facets)
    union = 0
    for f in facets:
        union |= f
    rank = {v: k for k, v in enumerate(bits_of(union))}
    return canonical_facets(mask_of(rank[v] for v in bits_of(f)) for f in facets)


def facets_connected(facets: Iterable[int]) -> bool:
    """1-skeleton connectivity of the complex generated by ``facets``.

    Two facets sharing a vertex lie in one component, and each facet is a
    clique of the 1-skeleton, so absorbing overlapping facets suffices.
    """
    pending = [f for f in facets if f]
    if not pending:
        return False
    reached = pending.pop()
    grew = True
    while pending and grew:
        grew = False
        rest = []
        for f in pending:
            if f & reached:
                reached |= f
                grew = True
            else:
                rest.append(f)
        pending = rest
    return not pending


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable complex; construct through :meth:`from_facets` unless facets are already canonical."""

    n_vertices: int
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_vertices > MAX_VERTICES:
            raise VertexBudgetError(f"Complex on {self.n_vertices} vertices exceeds {MAX_VERTICES}")
        if self.facets and max(self.facets) >> self.n_vertices:
            raise ComplexError(f"Facet uses a vertex outside 0..{self.n_vertices - 1}")

    # construction

    @classmethod
    def from_facets(cls, n_vertices: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Complex generated by the given vertex sets (non-maximal ones are absorbed)."""
        masks = [mask_of(f) for f in facets]
        return cls(n_vertices=n_vertices, facets=maximal_sets(masks))

    @classmethod
    def from_masks(cls, n_vertices: int, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(n_vertices=n_vertices, facets=maximal_sets(masks))

    @classmethod
    def simplex(cls, vertices: Iterable[int], n_vertices: int | None = None) -> "SimplicialComplex":
        mask = mask_of(vertices)
        return cls(n_vertices=n_vertices if n_vertices is not None else mask.bit_length(), facets=(mask,))

    @classmethod
    def void(cls, n_vertices: int = 0) -> "SimplicialComplex":
        return cls(n_vertices=n_vertices, facets=())

    @classmethod
    def irrelevant(cls, n_vertices: int = 0) -> "SimplicialComplex":
        return cls(n_vertices=n_vertices, facets=(0,))

    # basic queries

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @cached_property
    def vertex_mask(self) -> int:
        mask = 0
        for f in self.facets:
            mask |= f
        return mask

    @property
    def vertices(self) -> tuple[int, ...]:
        return bits_of(self.vertex_mask)

    def facet_lists(self) -> list[list[int]]:
        return [list(bits_of(f)) for f in self.facets]

    def contains_face(self, face: int) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    def dim(self) -> int:
        if self.is_void:
            raise ComplexError("The void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    def faces_of_size(self, size: int) -> tuple[int, ...]:
        return faces_of_size(self.facets, size)

    def faces(self, descending: bool = False) -> Iterator[int]:
        """Every face, grouped by size (ascending or descending), lexicographic within a size."""
        if self.is_void:
            return
        sizes = range(self.dim() + 1, -1, -1) if descending else range(0, self.dim() + 2)
        for size in sizes:
            yield from faces_of_size(self.facets, size)

    def f_vector(self) -> list[int]:
        """Face counts f_{-1}, f_0, ..., f_dim."""
        if self.is_void:
            return []
        return [len(faces_of_size(self.facets, size)) for size in range(0, self.dim() + 2)]

    # constructions

    def link(self, face: int) -> "SimplicialComplex":
        if not self.contains_face(face):
            raise FaceNotInComplexError(f"{list(bits_of(face))} is not a face", {"face": list(bits_of(face))})
        return SimplicialComplex(
            n_vertices=self.n_vertices,
            facets=canonical_facets(f & ~face for f in self.facets if f & face == face),
        )

    def deletion(self, vertex: int) -> "SimplicialComplex":
        """Faces not containing ``vertex``."""
        bit = 1 << vertex
        return SimplicialComplex.from_masks(self.n_vertices, (f & ~bit for f in self.facets))

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        if self.vertex_mask & other.vertex_mask:
            raise ComplexError(
                "Join needs disjoint vertex sets; relabel one factor with shifted()",
                {"shared": list(bits_of(self.vertex_mask & other.vertex_mask))},
            )
        n = max(self.n_vertices, other.n_vertices)
        return SimplicialComplex(
            n_vertices=n, facets=canonical_facets(f | g for f in self.facets for g in other.facets)
        )

    def shifted(self, offset: int) -> "SimplicialComplex":
        """Relabel v -> v + offset."""
        return SimplicialComplex(
            n_vertices=self.n_vertices + offset, facets=canonical_facets(f << offset for f in self.facets)
        )

    def rotated(self, r: int, n: int) -> "SimplicialComplex":
        return SimplicialComplex(
            n_vertices=self.n_vertices, facets=canonical_facets(rotate_mask(f, r, n) for f in self.facets)
        )

    def is_rotation_invariant(self, n: int) -> bool:
        """Whether v -> v + 1 (mod n) maps the complex onto itself."""
        if self.vertex_mask >> n:
            return False
        return set(rotate_mask(f, 1, n) for f in self.facets) == set(self.facets)

    # connectivity

    def is_connected(self) -> bool:
        """Connectivity of the 1-skeleton; isolated vertices only count as connected when there is one."""
        if self.is_void or not self.vertex_mask:
            raise ComplexError("Connectivity is undefined for the void and irrelevant complexes")
        return facets_connected(self.facets)

    def is_strongly_connected(self) -> bool:
        if self.is_void:
            raise ComplexError("Strong connectivity is undefined for the void complex")
        if not self.is_pure():
            raise ComplexError("Strong connectivity is defined for pure complexes only")
        ridge = self.facets[0].bit_count() - 1
        reached = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for j, g in enumerate(self.facets):
                if j not in reached and (self.facets[i] & g).bit_count() == ridge:
                    reached.add(j)
                    frontier.append(j)
        return len(reached) == len(self.facets)

    # serialization

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n_vertices, "facets": self.facet_lists()}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SimplicialComplex":
        try:
            return cls.from_facets(int(data["n"]), data["facets"])
        except (KeyError, TypeError) as e:
            raise ComplexError(f"Malformed complex document: {e}") from e

    def to_text(self) -> str:
        lines = [str(self.n_vertices)]
        for f in self.facets:
            lines.append(" ".join(str(v) for v in bits_of(f)) if f else "{}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SimplicialComplex":
        """Parse ``n`` on the first line, then one facet per line; ``{}`` is the empty facet."""
        lines = [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]
        if not lines:
            raise ComplexError("Empty complex file")
        try:
            n = int(lines[0])
            facets = [[] if line == "{}" else [int(tok) for tok in line.split()] for line in lines[1:]]
        except ValueError as e:
            raise ComplexError(f"Malformed complex text: {e}") from e
        return cls.from_facets(n, facets)

    def __str__(self) -> str:
        body = ", ".join("".join(str(v) for v in bits_of(f)) if self.n_vertices <= 10 else str(list(bits_of(f)))
                         for f in self.facets)
        return f"<{body}>"
