"""Structural checks: component decompositions and the interval-complex link property."""

from collections import Counter
from typing import NamedTuple

from src.circulant.components import component_masks, connected_components, induced_subgraph
from src.circulant.families import cubic, one_paired, upper_interval
from src.circulant.graph import make_circulant
from src.circulant.isomorphism import graphs_isomorphic, verify_isomorphism
from src.classify.faces import scan_links
from src.classify.joins import combine_outcomes, join_factors
from src.classify.shelling import is_shellable
from src.complexes.bits import mask_of
from src.complexes.independence import independence_complex
from src.complexes.simplicial import SimplicialComplex
from src.exceptions import ParameterDomainError
from src.models.common import Outcome
from src.models.sweep import Certificate
from src.theorems.instances import parse_label
from src.utils.logging import get_logger

logger = get_logger(__name__)


class OnePairedStructure(NamedTuple):
    components: int
    # (number of parts, common part size) per component; size -1 when sizes differ or parts overlap
    parts: tuple[tuple[int, int], ...]

    def matches(self, a: int, b: int, part_size: int) -> bool:
        return self.components == a and all(p == (b, part_size) for p in self.parts)


def one_paired_structure(n: int, a: int, b: int) -> OnePairedStructure:
    """
    Describe each component of C(n; a, b) through its independence complex.

    A graph is complete multipartite exactly when its maximal independent sets
    partition the vertex set; those sets are then the parts.
    """
    graph = one_paired(n, a, b).graph
    parts = []
    for component in connected_components(graph):
        facets = independence_complex(component.graph).facets
        union = 0
        disjoint = True
        for f in facets:
            disjoint = disjoint and not union & f
            union |= f
        sizes = {f.bit_count() for f in facets}
        covers = union == (1 << component.graph.n) - 1
        size = sizes.pop() if disjoint and covers and len(sizes) == 1 else -1
        parts.append((len(facets), size))
    return OnePairedStructure(components=len(parts), parts=tuple(parts))


def verify_structure_one_paired(n: int, a: int, b: int) -> bool:
    """
    C(n; a, b) has a components, each complete multipartite with b parts of size n/(ab).

    Raises:
        ParameterDomainError: ab does not divide n
    """
    if a < 1 or b < 2 or n % (a * b):
        raise ParameterDomainError(f"Structure check needs ab | n, got n={n}, a={a}, b={b}", {"n": n, "a": a, "b": b})
    return one_paired_structure(n, a, b).matches(a, b, n // (a * b))


class CubicDecomposition(NamedTuple):
    components: int
    # one per component; empty when some component is not isomorphic to the target
    certificates: tuple[Certificate, ...]
    target: str


def decompose_cubic(
    two_n: int, a: int, target_n: int, target_gens: list[int], max_vertices: int = 24
) -> CubicDecomposition:
    """
    Certify that every component of C_{2n}(a, n) is isomorphic to the given circulant.

    Each certificate carries the component's vertices (ascending) and the image
    of each of them in the target; it is re-validated before being returned.
    """
    graph = cubic(two_n, a).graph
    target = make_circulant(target_n, target_gens)
    components = connected_components(graph)
    certificates = []
    for index, component in enumerate(components):
        if component.graph.n != target.n:
            return CubicDecomposition(len(components), (), target.label)
        result = graphs_isomorphic(component.graph, target, max_vertices=max_vertices)
        if not result or not verify_isomorphism(component.graph, target, result.mapping):
            logger.debug(f"Component {index} of {graph.label} is not isomorphic to {target.label}")
            return CubicDecomposition(len(components), (), target.label)
        certificates.append(
            Certificate(
                params={"two_n": two_n, "a": a},
                component=index,
                vertices=list(component.vertices),
                target=target.label,
                mapping=list(result.mapping),
            )
        )
    return CubicDecomposition(len(components), tuple(certificates), target.label)


def recheck_certificate(certificate: Certificate) -> bool:
    """Re-validate a stored decomposition certificate from scratch."""
    graph = cubic(certificate.params["two_n"], certificate.params["a"]).graph
    component = induced_subgraph(graph, tuple(certificate.vertices))
    target = parse_label(certificate.target)
    return verify_isomorphism(component, target, tuple(certificate.mapping))


class IntervalLinksCheck(NamedTuple):
    interval_facets: bool
    complex_shellable: Outcome
    nonshellable_links: int
    timeouts: int

    @property
    def holds(self) -> bool:
        return (
            self.interval_facets
            and self.complex_shellable is Outcome.FALSE
            and self.nonshellable_links == 0
            and self.timeouts == 0
        )


def check_interval_links(n: int, d: int, budget: int = 10_000_000) -> IntervalLinksCheck:
    """
    Shellability of Ind(C_n(d+1, ..., n//2)) and of every nonempty-face link.

    Links are visited one face per rotation orbit.

    Raises:
        ParameterDomainError: unless n > 3d and d > 1
    """
    if not (d > 1 and n > 3 * d):
        raise ParameterDomainError(f"Interval links need n > 3d and d > 1, got n={n}, d={d}", {"n": n, "d": d})
    complex_ = independence_complex(upper_interval(n, d).graph)
    intervals = {mask_of((i + j) % n for j in range(d + 1)) for i in range(n)}
    interval_facets = set(complex_.facets) == intervals

    whole = is_shellable(complex_, budget=budget).outcome
    nonshellable = 0
    timeouts = 0
    for view in scan_links(complex_, rotation_order=n):
        if not view.face:
            continue
        outcome = is_shellable(view.complex(n), budget=budget).outcome
        if outcome is Outcome.TIMEOUT:
            timeouts += 1
        elif outcome is Outcome.FALSE:
            nonshellable += 1
    return IntervalLinksCheck(interval_facets, whole, nonshellable, timeouts)


def verify_interval_links(n: int, d: int, budget: int = 10_000_000) -> bool:
    """Ind(C_n(d+1..n//2)) is not shellable, all nonempty-face links are, and its facets are the n cyclic intervals."""
    return check_interval_links(n, d, budget).holds


class EquivalenceItems(NamedTuple):
    # strongly connected, and shellable links of every face with link dimension < d
    shellable_links: Outcome
    # faces with 0 < dim link <= d whose link is not strongly connected
    weak_links_le_d: int
    # same count restricted to 0 < dim link < d
    weak_links_lt_d: int


def _strongly_connected(link: SimplicialComplex) -> bool:
    return link.is_pure() and link.is_strongly_connected()


class LinkItem(NamedTuple):
    dim: int
    pure: bool
    strongly_connected: bool
    shellable: Outcome


def _factor_items(factor: SimplicialComplex, budget: int) -> Counter[LinkItem]:
    items: Counter[LinkItem] = Counter()
    for view in scan_links(factor):
        link = view.complex(factor.n_vertices)
        shellable = is_shellable(link, budget=budget).outcome
        items[LinkItem(view.dim, link.is_pure(), _strongly_connected(link), shellable)] += 1
    return items


def _join_items(a: LinkItem, b: LinkItem) -> LinkItem:
    pure = a.pure and b.pure
    return LinkItem(
        dim=a.dim + b.dim + 1,
        pure=pure,
        strongly_connected=pure and a.strongly_connected and b.strongly_connected,
        shellable=combine_outcomes([a.shellable, b.shellable]),
    )


def _equivalence_items_of_join(factors: list[SimplicialComplex], d: int, budget: int) -> EquivalenceItems:
    """Link items of a join folded from its factors; counts are over all faces."""
    folded: Counter[LinkItem] | None = None
    for factor in factors:
        items = _factor_items(factor, budget)
        if folded is None:
            folded = items
            continue
        merged: Counter[LinkItem] = Counter()
        for a, count_a in folded.items():
            for b, count_b in items.items():
                merged[_join_items(a, b)] += count_a * count_b
        folded = merged

    whole = all(_strongly_connected(factor) for factor in factors)
    weak_le = sum(c for item, c in folded.items() if 0 < item.dim <= d and not item.strongly_connected)
    weak_lt = sum(c for item, c in folded.items() if 0 < item.dim < d and not item.strongly_connected)
    shellable = Outcome.FALSE
    if whole:
        shellable = combine_outcomes(item.shellable for item in folded if item.dim < d)
    return EquivalenceItems(shellable, weak_le, weak_lt)


def equivalence_items(n: int, d: int, budget: int = 10_000_000) -> EquivalenceItems:
    """
    Evaluate the strong-connectivity conditions of the upper-interval equivalence.

    Faces are visited one per rotation orbit and counts are over orbit
    representatives. When the graph is a perfect matching the complex is a
    join over its components and is evaluated factorwise instead.
    """
    graph = upper_interval(n, d).graph
    complex_ = independence_complex(graph)
    parts = component_masks(graph)
    if len(parts) > 1:
        return _equivalence_items_of_join(join_factors(complex_, parts), d, budget)

    shellable = Outcome.TRUE if _strongly_connected(complex_) else Outcome.FALSE
    weak_le = 0
    weak_lt = 0
    for view in scan_links(complex_, rotation_order=n):
        if 0 < view.dim <= d and not _strongly_connected(view.complex(n)):
            weak_le += 1
            if view.dim < d:
                weak_lt += 1
        if shellable is Outcome.TRUE and view.dim < d:
            outcome = is_shellable(view.complex(n), budget=budget).outcome
            if outcome is not Outcome.TRUE:
                shellable = outcome
    return EquivalenceItems(shellable, weak_le, weak_lt)
