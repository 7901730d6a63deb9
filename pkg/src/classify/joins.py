"""
Deciders for joins of complexes on disjoint vertex sets.

Every face of A * B is F ∪ G with F in A and G in B, and its link is
link_A(F) * link_B(G). Over a field the reduced Betti numbers of a join are
the convolution of the factors' Betti numbers indexed from dimension -1, and
a join of two links that both have vertices is connected. Each factor is
therefore scanned once, its links are collapsed into a few link types, and
the types are folded across factors. The independence complex of a
disconnected graph is the join over its components.
"""

from functools import cached_property, lru_cache, reduce
from itertools import product
from math import prod
from operator import or_
from typing import Iterable, NamedTuple

from sympy import primefactors

from src.classify.decomposable import is_vertex_decomposable
from src.classify.faces import face_list, link_homology, scan_links
from src.classify.reisner import ALL_FIELDS
from src.classify.shelling import is_shellable
from src.classify.witnesses import Decision, disconnected_link, impure_pair, nonvanishing_homology
from src.complexes.bits import bits_of, mask_of
from src.complexes.simplicial import SimplicialComplex, compact_facets, facets_connected, maximal_sets
from src.exceptions import ComplexError, ParameterDomainError
from src.homology.profile import FieldSpec, HomologyProfile
from src.models.common import Outcome
from src.models.report import Witness, WitnessKind
from src.utils.logging import get_logger

logger = get_logger(__name__)


def join_factors(complex_: SimplicialComplex, parts: Iterable[int]) -> list[SimplicialComplex]:
    """
    Split a complex into join factors along vertex masks.

    Args:
        complex_: Nonvoid complex
        parts: Disjoint vertex masks covering the complex's vertices

    Returns:
        One factor per part, in the order given

    Raises:
        ComplexError: Parts overlap, miss a vertex, or the complex is not their join
    """
    parts = list(parts)
    covered = 0
    for part in parts:
        if part & covered:
            raise ComplexError("Join parts overlap", {"shared": list(bits_of(part & covered))})
        covered |= part
    if covered != complex_.vertex_mask:
        raise ComplexError(
            "Join parts must cover exactly the vertices of the complex",
            {"parts": list(bits_of(covered)), "vertices": list(complex_.vertices)},
        )
    if len(parts) == 1:
        return [complex_]

    factors = [
        SimplicialComplex(n_vertices=complex_.n_vertices, facets=maximal_sets(f & part for f in complex_.facets))
        for part in parts
    ]
    facet_sets = [set(factor.facets) for factor in factors]
    is_join = prod(len(s) for s in facet_sets) == len(complex_.facets) and all(
        f & part in facets for f in complex_.facets for part, facets in zip(parts, facet_sets)
    )
    if not is_join:
        raise ComplexError("Complex is not the join of its parts", {"parts": [list(bits_of(p)) for p in parts]})
    return factors


class LinkType(NamedTuple):
    """One class of links: representative face, link dimension, connectivity and Betti numbers."""

    face: int
    nonempty: bool
    dim: int
    connected: bool
    betti: tuple[tuple[int, ...], ...]

    @property
    def key(self) -> tuple:
        return self.nonempty, self.dim, self.connected, self.betti


class FactorLink(NamedTuple):
    face: int
    dim: int
    connected: bool
    profile: HomologyProfile | None


@lru_cache(maxsize=256)
def factor_links(facets: tuple[int, ...]) -> tuple[FactorLink, ...]:
    """First link of every (emptiness, dimension, connectivity, homology) class, faces in scan order."""
    complex_ = SimplicialComplex(n_vertices=max(facets).bit_length(), facets=facets)
    found: dict[tuple, FactorLink] = {}
    for view in scan_links(complex_):
        if view.dim < 0:
            link = FactorLink(view.face, -1, True, None)
            homology: tuple = ()
        else:
            profile = link_homology(view)
            link = FactorLink(view.face, view.dim, facets_connected(view.facets), profile)
            homology = tuple((g.rank, g.torsion) for g in profile.dims)
        found.setdefault((view.face != 0, link.dim, link.connected, homology), link)
    return tuple(found.values())


def _betti(link: FactorLink, k: int) -> tuple[int, ...]:
    """Reduced Betti numbers in dimensions -1..dim; the irrelevant complex has one class in dimension -1."""
    if link.profile is None:
        return (1,)
    return tuple(link.profile.betti(i, k) for i in range(-1, link.dim + 1))


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def join_types(a: LinkType, b: LinkType) -> LinkType:
    if a.dim < 0:
        connected = b.connected
    elif b.dim < 0:
        connected = a.connected
    else:
        connected = True
    return LinkType(
        face=a.face | b.face,
        nonempty=a.nonempty or b.nonempty,
        dim=a.dim + b.dim + 1,
        connected=connected,
        betti=tuple(_convolve(x, y) for x, y in zip(a.betti, b.betti)),
    )


def _first_nonzero(betti: tuple[int, ...], top: int) -> int | None:
    """Smallest i in -1..top-1 with a nonzero Betti number."""
    for i in range(-1, top):
        if betti[i + 1]:
            return i
    return None


def combine_outcomes(outcomes: Iterable[Outcome | None]) -> Outcome | None:
    """A join has a search property exactly when every factor has it; None marks an unsearched factor."""
    outcomes = list(outcomes)
    if Outcome.FALSE in outcomes:
        return Outcome.FALSE
    if None in outcomes:
        return None
    if Outcome.TIMEOUT in outcomes:
        return Outcome.TIMEOUT
    return Outcome.TRUE


class JoinDeciders:
    """
    Link conditions of a join, decided from link types of its factors.

    Fields are the requested characteristics plus 0 and every prime dividing
    torsion in some factor link: over any other field the Betti numbers of
    every join link agree with the rational ones, so these fields also settle
    the "every field" variants.
    """

    def __init__(
        self, complex_: SimplicialComplex, factors: list[SimplicialComplex], characteristics: Iterable[int] = (0,)
    ):
        self.complex_ = complex_
        self.factors = factors
        self.requested = [FieldSpec.of(k).characteristic for k in characteristics]

    @cached_property
    def pure(self) -> bool:
        return all(factor.is_pure() for factor in self.factors)

    @cached_property
    def links_per_factor(self) -> list[tuple[tuple[int, ...], tuple[FactorLink, ...]]]:
        return [(factor.vertices, factor_links(compact_facets(factor.facets))) for factor in self.factors]

    @cached_property
    def fields(self) -> tuple[int, ...]:
        primes: set[int] = set()
        for _, links in self.links_per_factor:
            for link in links:
                if link.profile is not None:
                    for group in link.profile.dims:
                        for t in group.torsion:
                            primes.update(primefactors(t))
        return tuple(sorted(set(self.requested) | {0} | primes))

    @cached_property
    def types(self) -> list[LinkType]:
        folded: dict[tuple, LinkType] | None = None
        for vertices, links in self.links_per_factor:
            current: dict[tuple, LinkType] = {}
            for link in links:
                entry = LinkType(
                    face=mask_of(vertices[k] for k in bits_of(link.face)),
                    nonempty=link.face != 0,
                    dim=link.dim,
                    connected=link.connected,
                    betti=tuple(_betti(link, k) for k in self.fields),
                )
                current.setdefault(entry.key, entry)
            if folded is None:
                folded = current
                continue
            merged: dict[tuple, LinkType] = {}
            for a in folded.values():
                for b in current.values():
                    joined = join_types(a, b)
                    merged.setdefault(joined.key, joined)
            folded = merged
        logger.debug(f"Join of {len(self.factors)} factors: {len(folded)} link types over fields {self.fields}")
        return list(folded.values())

    def _column(self, k: int) -> int:
        if k not in self.fields:
            raise ComplexError(f"Characteristic {k} was not prepared for this join", {"fields": list(self.fields)})
        return self.fields.index(k)

    def s2(self) -> Decision:
        witness = impure_pair(self.complex_, "s2")
        if witness is not None:
            return Decision(False, witness)
        for t in self.types:
            if t.dim >= 1 and not t.connected:
                return Decision(False, disconnected_link(t.face, "s2"))
        return Decision(True)

    def terai(self, r: int, characteristics: Iterable[int]) -> dict[int, Decision]:
        if r < 1:
            raise ParameterDomainError(f"Serre level must be at least 1, got {r}", {"r": r})
        prop = "s2_terai" if r == 2 else f"sr[{r}]"
        results: dict[int, Decision] = {}
        for k in (FieldSpec.of(k).characteristic for k in characteristics):
            column = self._column(k)
            results[k] = Decision(True)
            for t in self.types:
                i = _first_nonzero(t.betti[column], min(r - 1, t.dim))
                if i is not None:
                    results[k] = Decision(False, nonvanishing_homology(t.face, i, k, f"{prop}[{k}]"))
                    break
        return results

    def _vanishing(self, fields: Iterable[int], prop: str, nonempty_only: bool) -> Decision:
        columns = [(k, self._column(k)) for k in fields]
        for t in self.types:
            if nonempty_only and not t.nonempty:
                continue
            for k, column in columns:
                i = _first_nonzero(t.betti[column], t.dim)
                if i is not None:
                    return Decision(False, nonvanishing_homology(t.face, i, k, prop))
        return Decision(True)

    def _link_scan(self, keys: Iterable[int | None], prop: str, nonempty_only: bool) -> dict[int | None, Decision]:
        keys = list(dict.fromkeys(k if k is None else FieldSpec.of(k).characteristic for k in keys))

        def label(key: int | None) -> str:
            return f"{prop}_all_fields" if key is None else f"{prop}[{key}]"

        witness = impure_pair(self.complex_, prop)
        if witness is not None:
            return {k: Decision(False, witness.model_copy(update={"property": label(k)})) for k in keys}
        return {
            k: self._vanishing(self.fields if k is ALL_FIELDS else (k,), label(k), nonempty_only) for k in keys
        }

    def reisner(self, keys: Iterable[int | None]) -> dict[int | None, Decision]:
        return self._link_scan(keys, "cohen_macaulay", nonempty_only=False)

    def buchsbaum(self, keys: Iterable[int | None]) -> dict[int | None, Decision]:
        return self._link_scan(keys, "buchsbaum", nonempty_only=True)

    def shellable(self, budget: int, cap: int | None) -> tuple[Outcome | None, Witness | None]:
        """Join shellability from the factors; the shelling is the lexicographic product of factor shellings."""
        impure = impure_pair(self.complex_, "shellable")
        if impure is not None:
            return Outcome.FALSE, impure
        outcomes: list[Outcome | None] = []
        orders: list[tuple[int, ...]] = []
        for factor in self.factors:
            if cap is not None and len(factor.facets) > cap:
                outcomes.append(None)
                continue
            found = is_shellable(factor, budget=budget)
            outcomes.append(found.outcome)
            if found.order is not None:
                orders.append(found.order)
        outcome = combine_outcomes(outcomes)
        if outcome is not Outcome.TRUE or (cap is not None and len(self.complex_.facets) > cap):
            return outcome, None
        order = [reduce(or_, combo) for combo in product(*orders)]
        witness = Witness(kind=WitnessKind.SHELLING_ORDER, property="shellable", facets=[face_list(f) for f in order])
        return outcome, witness

    def vertex_decomposable(self, budget: int, cap: int | None) -> Outcome | None:
        if not self.pure:
            return Outcome.FALSE
        return combine_outcomes(
            None if cap is not None and len(factor.facets) > cap else is_vertex_decomposable(factor, budget=budget)
            for factor in self.factors
        )

    def strongly_connected(self) -> bool | None:
        """Facet graph of a pure join is the product of the factors' facet graphs; undefined when impure."""
        if not self.pure:
            return None
        return all(factor.is_strongly_connected() for factor in self.factors)
