"""Deterministic face scans shared by the link-based deciders."""

from functools import lru_cache
from typing import Iterator, NamedTuple

from src.complexes.bits import bits_of, min_rotation
from src.complexes.simplicial import SimplicialComplex, canonical_facets, compact_facets, faces_of_size
from src.exceptions import ComplexError
from src.homology.profile import HomologyProfile, reduced_homology


class LinkView(NamedTuple):
    face: int
    facets: tuple[int, ...]
    dim: int

    def complex(self, n_vertices: int) -> SimplicialComplex:
        return SimplicialComplex(n_vertices=n_vertices, facets=self.facets)


def require_rotation_invariant(complex_: SimplicialComplex, n: int) -> None:
    if not complex_.is_rotation_invariant(n):
        raise ComplexError(f"Complex is not invariant under v -> v+1 mod {n}")


def link_view(facets: tuple[int, ...], face: int) -> LinkView:
    containing = [f & ~face for f in facets if f & face == face]
    top = max(f.bit_count() for f in containing)
    return LinkView(face=face, facets=canonical_facets(containing), dim=top - 1)


def scan_links(
    complex_: SimplicialComplex,
    rotation_order: int | None = None,
    min_link_dim: int = -1,
) -> Iterator[LinkView]:
    """
    Yield the link of every face, largest faces first, lexicographic within a size.

    Args:
        complex_: Nonvoid complex
        rotation_order: When set, only faces that are the smallest encoding of
            their rotation orbit are visited (the complex must be invariant)
        min_link_dim: Skip faces whose link has smaller dimension

    Yields:
        LinkView per visited face
    """
    if complex_.is_void:
        raise ComplexError("Cannot scan the void complex")
    facets = complex_.facets
    top = complex_.dim() + 1
    # a face of size k has link dimension at most top - k - 1
    largest = min(top, top - 1 - min_link_dim)
    for size in range(largest, -1, -1):
        for face in faces_of_size(facets, size):
            if rotation_order is not None and min_rotation(face, rotation_order) != face:
                continue
            view = link_view(facets, face)
            if view.dim >= min_link_dim:
                yield view


def face_list(face: int) -> list[int]:
    return list(bits_of(face))


@lru_cache(maxsize=1 << 14)
def _compact_homology(facets: tuple[int, ...], max_dim: int | None) -> HomologyProfile:
    complex_ = SimplicialComplex(n_vertices=max(facets).bit_length(), facets=facets)
    return reduced_homology(complex_, max_dim=max_dim)


def link_homology(view: LinkView, max_dim: int | None = None) -> HomologyProfile:
    """Reduced integral homology of a link, computed once per relabeling class of its facets."""
    return _compact_homology(compact_facets(view.facets), max_dim)
