"""Betti numbers by direct elimination over a field.

This path shares nothing with the Smith normal form code beyond the boundary
matrices, so the two can be checked against each other.
"""

from sympy import GF, QQ, ZZ
from sympy.polys.matrices import DM

from src.complexes.simplicial import SimplicialComplex
from src.homology.chains import boundary_matrix, faces_of_dimension
from src.homology.profile import FieldSpec


def field_rank(matrix: list[list[int]], characteristic: int) -> int:
    """Rank of an integer matrix reduced into Q or GF(p)."""
    if not matrix or not matrix[0]:
        return 0
    domain = QQ if characteristic == 0 else GF(characteristic)
    return DM(matrix, ZZ).convert_to(domain).rank()


def betti_over_field(complex_: SimplicialComplex, i: int, k: FieldSpec | int = 0) -> int:
    """dim C_i - rank ∂_i - rank ∂_{i+1}, all ranks taken over the field."""
    p = FieldSpec.of(k).characteristic
    if complex_.is_void or i < -1 or i > complex_.dim():
        return 0
    chains = len(faces_of_dimension(complex_, i))
    lower = field_rank(boundary_matrix(complex_, i), p) if i >= 0 else 0
    upper = field_rank(boundary_matrix(complex_, i + 1), p) if i + 1 <= complex_.dim() else 0
    return chains - lower - upper
