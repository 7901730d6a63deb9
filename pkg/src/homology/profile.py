"""Integral reduced homology profiles and Betti numbers over prime fields."""

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import isprime

from src.complexes.simplicial import SimplicialComplex
from src.exceptions import ComplexError, FieldSpecError
from src.homology.chains import boundary_matrix, faces_of_dimension
from src.homology.snf import SmithForm, smith_normal_form


def check_characteristic(characteristic: int) -> int:
    if characteristic != 0 and not (characteristic > 0 and isprime(characteristic)):
        raise FieldSpecError(f"Characteristic must be 0 or prime, got {characteristic}")
    return characteristic


class FieldSpec(BaseModel):
    """A prime field F_p, or the rationals when characteristic is 0."""

    model_config = ConfigDict(frozen=True)

    characteristic: int = Field(default=0, description="0 or a prime")

    @model_validator(mode="after")
    def validate_characteristic(self) -> "FieldSpec":
        check_characteristic(self.characteristic)
        return self

    @classmethod
    def of(cls, k: "FieldSpec | int") -> "FieldSpec":
        if isinstance(k, FieldSpec):
            return k
        return cls(characteristic=check_characteristic(int(k)))

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


class HomologyGroup(BaseModel):
    model_config = ConfigDict(frozen=True)

    i: int
    rank: int = Field(..., ge=0, description="Free rank of the reduced homology group")
    torsion: tuple[int, ...] = Field(default=(), description="Invariant factors greater than one")

    @property
    def vanishes(self) -> bool:
        return self.rank == 0 and not self.torsion


class HomologyProfile(BaseModel):
    """Reduced integral homology in dimensions -1..top (top = dim unless truncated)."""

    model_config = ConfigDict(frozen=True)

    dims: list[HomologyGroup]
    dimension: int | None = Field(default=None, exclude=True, description="Dimension of the complex")

    def group(self, i: int) -> HomologyGroup:
        top = self.dims[-1].i if self.dims else -2
        dimension = top if self.dimension is None else self.dimension
        if i < -1 or i > dimension:
            return HomologyGroup(i=i, rank=0)
        if i > top:
            raise ComplexError(f"Homology in dimension {i} was not computed (profile stops at {top})")
        return self.dims[i + 1]

    def betti(self, i: int, k: FieldSpec | int = 0) -> int:
        """Betti number over characteristic k by universal coefficients."""
        p = FieldSpec.of(k).characteristic
        here = self.group(i)
        if p == 0:
            return here.rank
        below = self.group(i - 1) if i - 1 >= -1 else HomologyGroup(i=i - 1, rank=0)
        return (
            here.rank
            + sum(1 for d in here.torsion if d % p == 0)
            + sum(1 for d in below.torsion if d % p == 0)
        )

    def is_acyclic_below(self, top: int) -> bool:
        """Integral reduced homology vanishes in every dimension < top."""
        return all(self.group(i).vanishes for i in range(-1, top))


def reduced_homology(complex_: SimplicialComplex, max_dim: int | None = None) -> HomologyProfile:
    """
    Integral reduced homology of a nonvoid complex.

    Args:
        complex_: The complex
        max_dim: Stop after this dimension (only the boundary maps it needs are reduced)

    Returns:
        Profile with free rank and torsion for each computed dimension
    """
    if complex_.is_void:
        raise ComplexError("Reduced homology is undefined for the void complex")
    dim = complex_.dim()
    top = dim if max_dim is None else min(max_dim, dim)

    forms: dict[int, SmithForm] = {-1: SmithForm(0, ())}
    for i in range(0, min(top + 1, dim) + 1):
        forms[i] = smith_normal_form(boundary_matrix(complex_, i))
    empty = SmithForm(0, ())

    dims = []
    for i in range(-1, top + 1):
        chains = len(faces_of_dimension(complex_, i))
        upper = forms.get(i + 1, empty)
        dims.append(
            HomologyGroup(i=i, rank=chains - forms[i].rank - upper.rank, torsion=upper.torsion)
        )
    return HomologyProfile(dims=dims, dimension=dim)


def betti(complex_: SimplicialComplex, i: int, k: FieldSpec | int = 0) -> int:
    """Betti number of ``complex_`` in dimension i over characteristic k."""
    FieldSpec.of(k)
    if i < -1 or complex_.is_void or i > complex_.dim():
        return 0
    return reduced_homology(complex_, max_dim=i).betti(i, k)
