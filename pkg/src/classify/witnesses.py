"""Witness construction and independent re-validation."""

from typing import NamedTuple

from src.classify.faces import face_list
from src.complexes.bits import bits_of, mask_of
from src.complexes.simplicial import SimplicialComplex
from src.homology.field import betti_over_field
from src.models.common import Outcome
from src.models.report import Witness, WitnessKind
from src.utils.logging import get_logger

logger = get_logger(__name__)


class Decision(NamedTuple):
    holds: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.holds


def impure_pair(complex_: SimplicialComplex, prop: str) -> Witness | None:
    """Smallest and largest facet when sizes differ (first in canonical order on ties)."""
    if complex_.is_pure():
        return None
    small = min(complex_.facets, key=lambda f: (f.bit_count(), bits_of(f)))
    large = min(complex_.facets, key=lambda f: (-f.bit_count(), bits_of(f)))
    return Witness(
        kind=WitnessKind.IMPURE_FACET_PAIR, property=prop, facets=[face_list(small), face_list(large)]
    )


def disconnected_link(face: int, prop: str) -> Witness:
    return Witness(kind=WitnessKind.DISCONNECTED_LINK_FACE, property=prop, face=face_list(face))


def nonvanishing_homology(face: int, i: int, characteristic: int, prop: str) -> Witness:
    return Witness(
        kind=WitnessKind.NONVANISHING_LINK_HOMOLOGY,
        property=prop,
        face=face_list(face),
        dimension=i,
        characteristic=characteristic,
    )


def recheck_witness(complex_: SimplicialComplex, witness: Witness, budget: int = 10_000_000) -> bool:
    """
    Validate a witness against the complex without rebuilding a report.

    Homology witnesses are checked by field elimination rather than the Smith
    normal form path that produced them.
    """
    kind = witness.kind
    if kind is WitnessKind.IMPURE_FACET_PAIR:
        first, second = (mask_of(f) for f in witness.facets)
        return (
            first in complex_.facets
            and second in complex_.facets
            and first.bit_count() != second.bit_count()
        )

    if kind in (WitnessKind.DISCONNECTED_LINK_FACE, WitnessKind.NONVANISHING_LINK_HOMOLOGY):
        face = mask_of(witness.face)
        if not complex_.contains_face(face):
            logger.debug(f"Witness face {witness.face} is not in the complex")
            return False
        link = complex_.link(face)
        if kind is WitnessKind.DISCONNECTED_LINK_FACE:
            return link.dim() >= 1 and not link.is_connected()
        return witness.dimension < link.dim() and betti_over_field(
            link, witness.dimension, witness.characteristic
        ) > 0

    from src.classify.shelling import check_shelling, is_shellable

    if kind is WitnessKind.SHELLING_ORDER:
        try:
            return check_shelling(complex_, witness.facets)
        except ValueError:
            return False
    return is_shellable(complex_, budget=budget).outcome is Outcome.FALSE
