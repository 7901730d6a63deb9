"""Serre's condition S_r: the link-connectivity decider for S_2 and Terai's homological criterion."""

from typing import Iterable

from src.classify.faces import link_homology, require_rotation_invariant, scan_links
from src.classify.witnesses import Decision, disconnected_link, impure_pair, nonvanishing_homology
from src.complexes.bits import bits_of
from src.complexes.simplicial import SimplicialComplex, facets_connected
from src.exceptions import ComplexError, ParameterDomainError
from src.homology.profile import FieldSpec
from src.utils.logging import get_logger

logger = get_logger(__name__)


def is_s2(complex_: SimplicialComplex, rotation_order: int | None = None) -> Decision:
    """
    S_2 via connectivity: pure, and every face whose link has dimension >= 1 has a connected link.

    Args:
        complex_: Nonvoid complex
        rotation_order: Scan one face per rotation orbit (complex assumed invariant)

    Returns:
        Decision with a DisconnectedLinkFace or ImpureFacetPair witness on failure
    """
    if complex_.is_void:
        raise ComplexError("S_2 is undefined for the void complex")
    witness = impure_pair(complex_, "s2")
    if witness is not None:
        return Decision(False, witness)
    for view in scan_links(complex_, rotation_order=rotation_order, min_link_dim=1):
        if not facets_connected(view.facets):
            return Decision(False, disconnected_link(view.face, "s2"))
    return Decision(True)


def s2_orbit_scan(complex_: SimplicialComplex, rotation_order: int) -> Decision:
    """is_s2 restricted to one face per orbit of v -> v+1 mod ``rotation_order``."""
    require_rotation_invariant(complex_, rotation_order)
    return is_s2(complex_, rotation_order=rotation_order)


def impure_descent(complex_: SimplicialComplex) -> int:
    """
    Face of an impure complex whose link is disconnected and has dimension >= 1.

    Starting from the empty face, a connected impure link always has a vertex
    lying in facets of two sizes; adding it keeps the link impure, so the walk
    ends at a disconnected link. Impure links have dimension >= 1 throughout.
    """
    if complex_.is_pure():
        raise ComplexError("The descent needs an impure complex")
    face = 0
    link = complex_.facets
    while facets_connected(link):
        union = 0
        for g in link:
            union |= g
        for v in bits_of(union):
            if len({g.bit_count() for g in link if g >> v & 1}) > 1:
                face |= 1 << v
                break
        else:
            raise ComplexError("Connected link without a vertex in facets of two sizes", {"face": list(bits_of(face))})
        link = tuple(f & ~face for f in complex_.facets if f & face == face)
    return face


def terai_scan(
    complex_: SimplicialComplex,
    r: int,
    characteristics: Iterable[int],
    rotation_order: int | None = None,
) -> dict[int, Decision]:
    """
    Terai's criterion for S_r over several fields in one pass.

    Every face F must satisfy betti_i(link F; k) = 0 for i < min(r-1, dim link F).
    Integral homology of each link is computed once and specialized per field.
    S_1 always holds. For r >= 2 an impure complex fails at the face found by
    :func:`impure_descent`, whose disconnected link has nonzero reduced H_0 over
    every field, so only pure complexes are scanned.
    """
    if r < 1:
        raise ParameterDomainError(f"Serre level must be at least 1, got {r}", {"r": r})
    if complex_.is_void:
        raise ComplexError("S_r is undefined for the void complex")
    chars = [FieldSpec.of(k).characteristic for k in characteristics]
    prop = "s2_terai" if r == 2 else f"sr[{r}]"
    if r == 1:
        return {k: Decision(True) for k in chars}
    if not complex_.is_pure():
        face = impure_descent(complex_)
        return {k: Decision(False, nonvanishing_homology(face, 0, k, f"{prop}[{k}]")) for k in chars}

    results: dict[int, Decision] = {}
    # only i >= 0 can be nonzero for links with vertices, so need min(r-1, dim) >= 1
    for view in scan_links(complex_, rotation_order=rotation_order, min_link_dim=1):
        top = min(r - 1, view.dim)
        pending = [k for k in chars if k not in results]
        if not pending:
            break
        profile = link_homology(view, max_dim=top - 1)
        for k in pending:
            for i in range(-1, top):
                if profile.betti(i, k) > 0:
                    results[k] = Decision(False, nonvanishing_homology(view.face, i, k, f"{prop}[{k}]"))
                    break

    for k in chars:
        results.setdefault(k, Decision(True))
    return {k: results[k] for k in chars}


def is_sr_terai(
    complex_: SimplicialComplex, r: int, k: FieldSpec | int = 0, rotation_order: int | None = None
) -> Decision:
    characteristic = FieldSpec.of(k).characteristic
    return terai_scan(complex_, r, [characteristic], rotation_order=rotation_order)[characteristic]
