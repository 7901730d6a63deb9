"""Augmented simplicial chain complex of a facet-based complex."""

from src.complexes.bits import bits_of
from src.complexes.simplicial import SimplicialComplex, faces_of_size
from src.exceptions import ComplexError


def faces_of_dimension(complex_: SimplicialComplex, i: int) -> tuple[int, ...]:
    """Basis of C_i in lexicographic order; C_{-1} is spanned by the empty face."""
    if i < -1:
        return ()
    return faces_of_size(complex_.facets, i + 1)


def boundary_matrix(complex_: SimplicialComplex, i: int) -> list[list[int]]:
    """
    Reduced boundary map ∂_i : C_i -> C_{i-1} as a dense integer matrix.

    Rows are indexed by (i-1)-faces and columns by i-faces, both in
    lexicographic order. The face with sorted vertices v_0 < ... < v_i maps to
    the sum of (-1)^k [face minus v_k]; ∂_0 sends every vertex to the empty face.

    Raises:
        ComplexError: i outside -1..dim
    """
    if complex_.is_void:
        raise ComplexError("The void complex has no chain complex")
    if not -1 <= i <= complex_.dim():
        raise ComplexError(f"Dimension {i} outside -1..{complex_.dim()}")
    columns = faces_of_dimension(complex_, i)
    rows = faces_of_dimension(complex_, i - 1)
    if i == -1:
        return []
    index = {face: r for r, face in enumerate(rows)}
    matrix = [[0] * len(columns) for _ in rows]
    for c, face in enumerate(columns):
        for k, v in enumerate(bits_of(face)):
            matrix[index[face & ~(1 << v)]][c] = -1 if k % 2 else 1
    return matrix
