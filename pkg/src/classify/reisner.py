"""Cohen–Macaulay (Reisner) and Buchsbaum (vertex-link) deciders."""

from typing import Iterable

from sympy import primefactors

from src.classify.faces import link_homology, scan_links
from src.classify.witnesses import Decision, impure_pair, nonvanishing_homology
from src.complexes.bits import bits_of, min_rotation
from src.complexes.simplicial import SimplicialComplex
from src.exceptions import ComplexError
from src.homology.profile import FieldSpec, HomologyProfile

ALL_FIELDS = None


def _integral_obstruction(profile: HomologyProfile, top: int) -> tuple[int, int] | None:
    """First (dimension, characteristic) with nonzero Betti number below ``top``, if any."""
    for i in range(-1, top):
        group = profile.group(i)
        if group.rank:
            return i, 0
        if group.torsion:
            return i, primefactors(group.torsion[0])[0]
    return None


def reisner_scan(
    complex_: SimplicialComplex,
    keys: Iterable[int | None],
    rotation_order: int | None = None,
    prop: str = "cohen_macaulay",
    face_offset: int = 0,
) -> dict[int | None, Decision]:
    """
    Reisner's criterion for several fields at once.

    Args:
        complex_: Nonvoid complex
        keys: Characteristics, with ``None`` standing for "every field" (integral homology)
        rotation_order: Scan one face per rotation orbit
        prop: Report field name used in witnesses
        face_offset: Vertex set added to witness faces (used when scanning a vertex link)

    Returns:
        Decision per key
    """
    if complex_.is_void:
        raise ComplexError("Cohen–Macaulayness is undefined for the void complex")
    keys = list(dict.fromkeys(k if k is None else FieldSpec.of(k).characteristic for k in keys))

    def label(key: int | None) -> str:
        return f"{prop}_all_fields" if key is None else f"{prop}[{key}]"

    witness = impure_pair(complex_, prop)
    if witness is not None:
        return {k: Decision(False, witness.model_copy(update={"property": label(k)})) for k in keys}

    results: dict[int | None, Decision] = {}
    for view in scan_links(complex_, rotation_order=rotation_order, min_link_dim=1):
        pending = [k for k in keys if k not in results]
        if not pending:
            break
        profile = link_homology(view, max_dim=view.dim - 1)
        face = view.face | face_offset
        for key in pending:
            if key is ALL_FIELDS:
                hit = _integral_obstruction(profile, view.dim)
                if hit is not None:
                    results[key] = Decision(False, nonvanishing_homology(face, hit[0], hit[1], label(key)))
                continue
            for i in range(-1, view.dim):
                if profile.betti(i, key) > 0:
                    results[key] = Decision(False, nonvanishing_homology(face, i, key, label(key)))
                    break

    return {k: results.get(k, Decision(True)) for k in keys}


def is_cohen_macaulay(
    complex_: SimplicialComplex, k: FieldSpec | int = 0, rotation_order: int | None = None
) -> Decision:
    characteristic = FieldSpec.of(k).characteristic
    return reisner_scan(complex_, [characteristic], rotation_order)[characteristic]


def is_cohen_macaulay_all_fields(complex_: SimplicialComplex, rotation_order: int | None = None) -> Decision:
    """Integral reduced homology of every link vanishes below the link's dimension."""
    return reisner_scan(complex_, [ALL_FIELDS], rotation_order)[ALL_FIELDS]


def buchsbaum_scan(
    complex_: SimplicialComplex,
    keys: Iterable[int | None],
    rotation_order: int | None = None,
) -> dict[int | None, Decision]:
    """Pure, and the link of every vertex Cohen–Macaulay (per key, ``None`` meaning every field)."""
    if complex_.is_void:
        raise ComplexError("Buchsbaumness is undefined for the void complex")
    keys = list(dict.fromkeys(k if k is None else FieldSpec.of(k).characteristic for k in keys))

    def label(key: int | None) -> str:
        return "buchsbaum_all_fields" if key is None else f"buchsbaum[{key}]"

    witness = impure_pair(complex_, "buchsbaum")
    if witness is not None:
        return {k: Decision(False, witness.model_copy(update={"property": label(k)})) for k in keys}

    results: dict[int | None, Decision] = {}
    for v in bits_of(complex_.vertex_mask):
        if rotation_order is not None and min_rotation(1 << v, rotation_order) != 1 << v:
            continue
        pending = [k for k in keys if k not in results]
        if not pending:
            break
        link = complex_.link(1 << v)
        for key, decision in reisner_scan(link, pending, prop="buchsbaum", face_offset=1 << v).items():
            if not decision.holds:
                results[key] = Decision(False, decision.witness.model_copy(update={"property": label(key)}))

    return {k: results.get(k, Decision(True)) for k in keys}


def is_buchsbaum(complex_: SimplicialComplex, k: FieldSpec | int = 0, rotation_order: int | None = None) -> Decision:
    characteristic = FieldSpec.of(k).characteristic
    return buchsbaum_scan(complex_, [characteristic], rotation_order)[characteristic]


def is_buchsbaum_all_fields(complex_: SimplicialComplex, rotation_order: int | None = None) -> Decision:
    return buchsbaum_scan(complex_, [ALL_FIELDS], rotation_order)[ALL_FIELDS]
