"""Pure shellability: certificate checking and budgeted exhaustive search."""

from typing import Iterable, NamedTuple, Sequence

from src.classify.faces import face_list
from src.classify.witnesses import impure_pair
from src.complexes.bits import mask_of
from src.complexes.simplicial import SimplicialComplex, facets_connected
from src.exceptions import ComplexError
from src.models.common import Outcome
from src.models.report import Witness, WitnessKind
from src.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_BUDGET = 10_000_000


class ShellingOutcome(NamedTuple):
    outcome: Outcome
    order: tuple[int, ...] | None
    nodes: int
    witness: Witness | None


def _restriction_ok(facet: int, earlier: Iterable[int]) -> bool:
    """Every earlier facet misses some vertex v of ``facet`` with facet minus v inside an earlier facet."""
    earlier = list(earlier)
    if not earlier:
        return True
    ridge_vertices = 0
    for g in earlier:
        diff = facet & ~g
        if diff.bit_count() == 1:
            ridge_vertices |= diff
    return all(facet & ~g & ridge_vertices for g in earlier)


def check_shelling(complex_: SimplicialComplex, order: Sequence[Iterable[int]] | Sequence[int]) -> bool:
    """
    Validate a shelling order pairwise.

    Args:
        complex_: The complex
        order: Facets as vertex lists (or masks) in shelling order

    Raises:
        ComplexError: ``order`` is not a permutation of the facets
    """
    masks = [o if isinstance(o, int) else mask_of(o) for o in order]
    if len(masks) != len(complex_.facets) or set(masks) != set(complex_.facets):
        raise ComplexError("Shelling order must be a permutation of the facets")
    return all(_restriction_ok(masks[j], masks[:j]) for j in range(len(masks)))


def is_shellable(complex_: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> ShellingOutcome:
    """
    Depth-first search over facet orders.

    Whether a facet may come next depends only on the set of facets already
    placed, so fully explored placed-sets are memoized as dead. A non-pure
    complex is reported as not (purely) shellable.

    Args:
        complex_: Nonvoid complex
        budget: Maximum number of search nodes

    Returns:
        ShellingOrder witness on TRUE, NoShellingExists or ImpureFacetPair on FALSE,
        no witness on TIMEOUT
    """
    if complex_.is_void:
        raise ComplexError("Shellability is undefined for the void complex")
    impure = impure_pair(complex_, "shellable")
    if impure is not None:
        return ShellingOutcome(Outcome.FALSE, None, 0, impure)

    facets = complex_.facets
    if complex_.dim() >= 1 and not facets_connected(facets):
        logger.debug("Disconnected complex of dimension >= 1, no shelling")
        witness = Witness(kind=WitnessKind.NO_SHELLING_EXISTS, property="shellable", nodes=0)
        return ShellingOutcome(Outcome.FALSE, None, 0, witness)

    s = len(facets)
    # ridge[j][l]: facet j minus facet l when that is a single vertex, else 0
    diff = [[facets[j] & ~facets[l] for l in range(s)] for j in range(s)]
    ridge = [[d if d.bit_count() == 1 else 0 for d in row] for row in diff]

    def attaches(j: int, placed: list[int]) -> bool:
        reach = 0
        for l in placed:
            reach |= ridge[j][l]
        if not reach:
            return False
        return all(diff[j][l] & reach for l in placed)

    dead: set[int] = set()
    order: list[int] = []
    chosen = 0
    nodes = 1
    cursors = [0]

    while cursors:
        if len(order) == s:
            shelling = tuple(facets[j] for j in order)
            witness = Witness(
                kind=WitnessKind.SHELLING_ORDER, property="shellable", facets=[face_list(f) for f in shelling]
            )
            logger.debug(f"Shelling found after {nodes} nodes")
            return ShellingOutcome(Outcome.TRUE, shelling, nodes, witness)

        advanced = False
        j = cursors[-1]
        while j < s:
            if not chosen >> j & 1 and (not order or attaches(j, order)) and (chosen | 1 << j) not in dead:
                nodes += 1
                if nodes > budget:
                    logger.info(f"Shelling search exhausted its budget of {budget} nodes")
                    return ShellingOutcome(Outcome.TIMEOUT, None, nodes, None)
                cursors[-1] = j + 1
                order.append(j)
                chosen |= 1 << j
                cursors.append(0)
                advanced = True
                break
            j += 1

        if not advanced:
            cursors.pop()
            if order:
                dead.add(chosen)
                last = order.pop()
                chosen &= ~(1 << last)

    witness = Witness(kind=WitnessKind.NO_SHELLING_EXISTS, property="shellable", nodes=nodes)
    return ShellingOutcome(Outcome.FALSE, None, nodes, witness)
