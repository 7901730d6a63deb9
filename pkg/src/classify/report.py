"""Assemble classification reports from the individual deciders."""

from hashlib import sha256
from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field

from src.circulant.components import component_masks
from src.circulant.graph import CirculantGraph, Graph, graph_label
from src.classify.decomposable import is_vertex_decomposable
from src.classify.joins import JoinDeciders, join_factors
from src.classify.reisner import ALL_FIELDS, buchsbaum_scan, reisner_scan
from src.classify.serre import is_s2, terai_scan
from src.classify.shelling import is_shellable
from src.classify.witnesses import Decision, impure_pair
from src.complexes.independence import independence_complex
from src.complexes.simplicial import SimplicialComplex
from src.config.config_manager import AppConfig
from src.models.common import ALL_PROPERTIES, Outcome, Property
from src.models.report import ClassificationReport, Witness
from src.utils.logging import get_logger

logger = get_logger(__name__)

LOGIC_VERSION = "serre-logic-4"


class ClassifyOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    characteristics: tuple[int, ...] = Field(default=(0, 2, 3, 5))
    serre_levels: tuple[int, ...] = Field(default=(2, 3))
    budget: int = Field(default=10_000_000, gt=0)
    infer_from_hierarchy: bool = Field(
        default=True, description="Skip shelling/decomposition searches on complexes that are not CM"
    )
    search_facet_cap: int | None = Field(
        default=None, gt=0, description="Leave shellability/decomposability unset above this many facets (per join factor)"
    )

    def fingerprint(self) -> str:
        return sha256(f"{LOGIC_VERSION}|{self.model_dump_json()}".encode()).hexdigest()[:16]


def options_from_config(
    config: AppConfig, characteristics: Iterable[int] | None = None, budget: int | None = None
) -> ClassifyOptions:
    """Options for a run; the CLI and the sweeps build them the same way so cached reports are shared."""
    return ClassifyOptions(
        characteristics=tuple(characteristics if characteristics is not None else config.fields.characteristics),
        serre_levels=tuple(config.fields.serre_levels),
        budget=budget or config.search.node_budget,
        search_facet_cap=config.search.search_facet_cap,
    )


class LinkScans:
    """Deciders that scan the complex's own links; same interface as :class:`JoinDeciders`."""

    def __init__(self, complex_: SimplicialComplex, rotation_order: int | None = None):
        self.complex_ = complex_
        self.rotation_order = rotation_order

    def s2(self) -> Decision:
        return is_s2(self.complex_, rotation_order=self.rotation_order)

    def terai(self, r: int, characteristics: Iterable[int]) -> dict[int, Decision]:
        return terai_scan(self.complex_, r, characteristics, rotation_order=self.rotation_order)

    def reisner(self, keys: Iterable[int | None]) -> dict[int | None, Decision]:
        return reisner_scan(self.complex_, keys, rotation_order=self.rotation_order)

    def buchsbaum(self, keys: Iterable[int | None]) -> dict[int | None, Decision]:
        return buchsbaum_scan(self.complex_, keys, rotation_order=self.rotation_order)

    def shellable(self, budget: int, cap: int | None) -> tuple[Outcome | None, Witness | None]:
        if cap is not None and len(self.complex_.facets) > cap:
            return None, None
        shelling = is_shellable(self.complex_, budget=budget)
        return shelling.outcome, shelling.witness

    def vertex_decomposable(self, budget: int, cap: int | None) -> Outcome | None:
        if cap is not None and len(self.complex_.facets) > cap:
            return None
        return is_vertex_decomposable(self.complex_, budget=budget)

    def strongly_connected(self) -> bool | None:
        if not self.complex_.is_pure():
            return None
        return self.complex_.is_strongly_connected()


def classify_complex(
    complex_: SimplicialComplex,
    subject: str,
    options: ClassifyOptions | None = None,
    properties: Iterable[Property] = ALL_PROPERTIES,
    rotation_order: int | None = None,
    graph: dict | None = None,
    factors: list[SimplicialComplex] | None = None,
) -> ClassificationReport:
    """
    Decide the requested properties of one complex.

    Args:
        complex_: Nonvoid complex
        subject: Identifier stored in the report
        options: Fields, Serre levels and search budget
        properties: Subset of report fields to compute
        rotation_order: Complex is invariant under v -> v+1 mod this; scans visit orbit representatives
        graph: Graph serialization for graph subjects
        factors: Join factors of the complex (see :func:`join_factors`); links are then decided factorwise

    Returns:
        Report with the requested fields set; strong connectivity stays unset for impure complexes
    """
    options = options or ClassifyOptions()
    wanted = set(properties)
    chars = list(options.characteristics)
    report = ClassificationReport(
        subject=subject,
        graph=graph,
        dimension=complex_.dim(),
        n_facets=len(complex_.facets),
        pure=complex_.is_pure(),
    )
    if factors is not None and len(factors) > 1:
        logger.debug(f"{subject}: deciding links over {len(factors)} join factors")
        deciders: LinkScans | JoinDeciders = JoinDeciders(complex_, factors, chars)
    else:
        deciders = LinkScans(complex_, rotation_order)
    witnesses = []

    if Property.WELL_COVERED in wanted:
        pair = impure_pair(complex_, "well_covered")
        report.well_covered = pair is None
        if pair is not None:
            witnesses.append(pair)

    if Property.S2 in wanted:
        decision = deciders.s2()
        report.s2 = decision.holds
        if decision.witness:
            witnesses.append(decision.witness)

    if Property.S2_TERAI in wanted:
        terai = deciders.terai(2, chars)
        report.s2_terai = {k: d.holds for k, d in terai.items()}
        witnesses.extend(d.witness for d in terai.values() if d.witness)

    if Property.SR in wanted:
        report.sr = {}
        for r in options.serre_levels:
            decision = deciders.terai(r, [0])[0]
            report.sr[r] = decision.holds
            if decision.witness:
                witnesses.append(decision.witness)

    cm_keys: list[int | None] = []
    if Property.COHEN_MACAULAY in wanted:
        cm_keys.extend(chars)
    if wanted & {Property.COHEN_MACAULAY_ALL_FIELDS, Property.SHELLABLE, Property.VERTEX_DECOMPOSABLE}:
        cm_keys.append(ALL_FIELDS)
    cm = deciders.reisner(cm_keys) if cm_keys else {}
    if Property.COHEN_MACAULAY in wanted:
        report.cohen_macaulay = {k: cm[k].holds for k in chars}
        witnesses.extend(cm[k].witness for k in chars if cm[k].witness)
    if Property.COHEN_MACAULAY_ALL_FIELDS in wanted:
        report.cohen_macaulay_all_fields = cm[ALL_FIELDS].holds
        if cm[ALL_FIELDS].witness and cm[ALL_FIELDS].witness not in witnesses:
            witnesses.append(cm[ALL_FIELDS].witness)

    buchs_keys: list[int | None] = []
    if Property.BUCHSBAUM in wanted:
        buchs_keys.extend(chars)
    if Property.BUCHSBAUM_ALL_FIELDS in wanted:
        buchs_keys.append(ALL_FIELDS)
    if buchs_keys:
        buchs = deciders.buchsbaum(buchs_keys)
        if Property.BUCHSBAUM in wanted:
            report.buchsbaum = {k: buchs[k].holds for k in chars}
            witnesses.extend(buchs[k].witness for k in chars if buchs[k].witness)
        if Property.BUCHSBAUM_ALL_FIELDS in wanted:
            report.buchsbaum_all_fields = buchs[ALL_FIELDS].holds
            if buchs[ALL_FIELDS].witness:
                witnesses.append(buchs[ALL_FIELDS].witness)

    not_cm = ALL_FIELDS in cm and not cm[ALL_FIELDS].holds
    cap = options.search_facet_cap
    if Property.SHELLABLE in wanted:
        if options.infer_from_hierarchy and not_cm:
            report.shellable = False
            report.inferred.append(Property.SHELLABLE.value)
        else:
            outcome, witness = deciders.shellable(options.budget, cap)
            if outcome is None:
                logger.debug(f"{subject}: more than {cap} facets, shelling search not attempted")
            else:
                report.shellable = outcome.as_verdict()
            if witness:
                witnesses.append(witness)

    if Property.VERTEX_DECOMPOSABLE in wanted:
        if options.infer_from_hierarchy and not_cm:
            report.vertex_decomposable = False
            report.inferred.append(Property.VERTEX_DECOMPOSABLE.value)
        else:
            outcome = deciders.vertex_decomposable(options.budget, cap)
            if outcome is not None:
                report.vertex_decomposable = outcome.as_verdict()

    if Property.STRONGLY_CONNECTED in wanted:
        report.strongly_connected = deciders.strongly_connected()

    report.witnesses = witnesses
    return report


def classify_graph(
    graph: Graph,
    options: ClassifyOptions | None = None,
    properties: Iterable[Property] = ALL_PROPERTIES,
    complex_: SimplicialComplex | None = None,
    factors: list[SimplicialComplex] | None = None,
) -> ClassificationReport:
    """Classify Ind(G); circulant graphs are scanned modulo rotation, disconnected graphs as joins over components."""
    ind = complex_ if complex_ is not None else independence_complex(graph)
    if factors is None:
        parts = component_masks(graph)
        factors = join_factors(ind, parts) if len(parts) > 1 else None
    rotation = graph.n if isinstance(graph, CirculantGraph) else None
    serialized = graph.model_dump() if isinstance(graph, CirculantGraph) else None
    logger.debug(f"Classifying {graph_label(graph)}: {len(ind.facets)} facets, dim {ind.dim()}")
    return classify_complex(
        ind, graph_label(graph), options, properties, rotation_order=rotation, graph=serialized, factors=factors
    )


def hierarchy_violations(report: ClassificationReport) -> list[str]:
    """Implications among decided report fields that fail; empty when consistent."""
    problems = []

    def decided(value) -> bool:
        return value is not None and value != Outcome.TIMEOUT.value

    if decided(report.vertex_decomposable) and decided(report.shellable):
        if report.vertex_decomposable and not report.shellable:
            problems.append("vertex decomposable but not shellable")
    if decided(report.shellable) and report.shellable:
        for k, cm in (report.cohen_macaulay or {}).items():
            if not cm:
                problems.append(f"shellable but not Cohen–Macaulay over characteristic {k}")
        if report.cohen_macaulay_all_fields is False:
            problems.append("shellable but not Cohen–Macaulay over every field")
    for k, cm in (report.cohen_macaulay or {}).items():
        if cm and report.buchsbaum is not None and report.buchsbaum.get(k) is False:
            problems.append(f"Cohen–Macaulay but not Buchsbaum over characteristic {k}")
        if cm and k == 0 and report.sr and not all(report.sr.values()):
            problems.append("Cohen–Macaulay but some S_r fails over characteristic 0")
    if report.cohen_macaulay_all_fields and report.buchsbaum_all_fields is False:
        problems.append("Cohen–Macaulay over every field but not Buchsbaum")
    if report.s2 and report.well_covered is False:
        problems.append("S_2 but not well-covered")
    if report.s2 is not None and report.s2_terai is not None:
        for k, terai in report.s2_terai.items():
            if terai != report.s2:
                problems.append(f"connectivity and Terai S_2 disagree over characteristic {k}")
    return problems
