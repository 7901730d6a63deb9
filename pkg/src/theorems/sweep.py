"""
Theorem sweeps: compute each instance with the deciders and compare against predictions.

Instances are independent. With ``jobs > 1`` they are evaluated in a process
pool, and results are merged in parameter order so the output does not depend
on the degree of parallelism. The parent process is the only cache writer.
"""

import time
from multiprocessing import Pool
from typing import Any, Callable, Iterable

from pydantic import BaseModel, Field

from src.circulant.components import component_masks
from src.circulant.graph import Graph, disjoint_union
from src.classify.joins import join_factors
from src.classify.reisner import ALL_FIELDS, buchsbaum_scan, reisner_scan
from src.classify.report import (
    ClassifyOptions,
    classify_complex,
    classify_graph,
    hierarchy_violations,
    options_from_config,
)
from src.classify.serre import is_s2
from src.complexes.independence import independence_complex
from src.complexes.simplicial import SimplicialComplex
from src.config.config_manager import AppConfig
from src.exceptions import CacheError, ParameterDomainError
from src.models.common import TIMEOUT, Property
from src.models.report import ClassificationReport
from src.models.sweep import Certificate, Mismatch, SkippedInstance, SweepResult
from src.storage.cache import ReportCache
from src.theorems.ids import TheoremId
from src.theorems.instances import instance_graph, parse_label, theorem_params
from src.theorems.predictions import predict
from src.theorems.structure import (
    check_interval_links,
    decompose_cubic,
    equivalence_items,
    one_paired_structure,
    recheck_certificate,
)
from src.utils.logging import get_logger

logger = get_logger(__name__)

# prediction key -> (report properties it needs, how to read it off a report)
DERIVED: dict[str, tuple[tuple[Property, ...], Callable[[ClassificationReport], Any]]] = {
    "well_covered": ((Property.WELL_COVERED,), lambda r: r.well_covered),
    "s2": ((Property.S2, Property.S2_TERAI), lambda r: r.s2),
    "dimension": ((), lambda r: r.dimension),
    "cohen_macaulay_all_fields": ((Property.COHEN_MACAULAY_ALL_FIELDS,), lambda r: r.cohen_macaulay_all_fields),
    "buchsbaum_all_fields": ((Property.BUCHSBAUM_ALL_FIELDS,), lambda r: r.buchsbaum_all_fields),
    "shellable": ((Property.SHELLABLE,), lambda r: r.shellable),
    "vertex_decomposable": ((Property.VERTEX_DECOMPOSABLE,), lambda r: r.vertex_decomposable),
    "buchsbaum_not_cm": (
        (Property.BUCHSBAUM_ALL_FIELDS, Property.COHEN_MACAULAY_ALL_FIELDS),
        lambda r: r.buchsbaum_all_fields and not r.cohen_macaulay_all_fields,
    ),
    "buchsbaum_not_s2": (
        (Property.BUCHSBAUM_ALL_FIELDS, Property.S2),
        lambda r: r.buchsbaum_all_fields and not r.s2,
    ),
    "pure_not_buchsbaum": ((Property.BUCHSBAUM_ALL_FIELDS,), lambda r: r.pure and not r.buchsbaum_all_fields),
    "well_covered_not_s2": ((Property.WELL_COVERED, Property.S2), lambda r: r.well_covered and not r.s2),
}


class SweepTask(BaseModel):
    theorem: TheoremId
    params: dict[str, Any]
    cached: ClassificationReport | None = None


class InstanceResult(BaseModel):
    params: dict[str, Any]
    mismatches: list[Mismatch] = Field(default_factory=list)
    timed_out: bool = False
    skipped: str | None = None
    certificates: list[Certificate] = Field(default_factory=list)
    notes: dict[str, int] = Field(default_factory=dict)
    requested: list[Property] = Field(default_factory=list)
    report: ClassificationReport | None = None
    fresh: bool = Field(default=False, description="Report holds properties computed by this task")

    def note(self, name: str, amount: int = 1) -> None:
        self.notes[name] = self.notes.get(name, 0) + amount


def face_bound(complex_: SimplicialComplex) -> int:
    """Upper bound on the number of faces: every facet contributes all its subsets."""
    return sum(1 << f.bit_count() for f in complex_.facets)


def _compare(
    result: InstanceResult, prop: str, predicted: Any, computed: Any, report: ClassificationReport | None
) -> None:
    if computed == TIMEOUT:
        result.timed_out = True
        return
    if computed is None:
        # left unset by the search facet cap
        result.timed_out = True
        result.note("unsearched")
        return
    if computed != predicted:
        result.mismatches.append(
            Mismatch(
                params=result.params,
                property=prop,
                predicted=predicted,
                computed=computed,
                report=report.model_dump(mode="json") if report else None,
            )
        )


def _check_hierarchy(result: InstanceResult, report: ClassificationReport) -> None:
    """Every implication among decided fields that fails is a mismatch of its own."""
    for problem in hierarchy_violations(report):
        result.mismatches.append(
            Mismatch(
                params=result.params,
                property="hierarchy",
                predicted="consistent",
                computed=problem,
                report=report.model_dump(mode="json"),
            )
        )


def _classify_and_compare(
    result: InstanceResult,
    predicted: dict[str, Any],
    complex_: SimplicialComplex,
    subject: Graph | str,
    options: ClassifyOptions,
    config: AppConfig,
    cached: ClassificationReport | None = None,
    parts: list[int] | None = None,
) -> None:
    """
    Compare the report-backed predictions; structural keys are left to the caller.

    Complexes that split into join factors (one per graph component, or the
    given ``parts``) are decided factorwise. A pure factor whose face bound
    exceeds the face cap makes the instance skipped, which fails the sweep.
    """
    keys = [k for k in predicted if k in DERIVED]
    if not keys:
        return
    wanted: list[Property] = []
    for key in keys:
        wanted.extend(p for p in DERIVED[key][0] if p not in wanted)

    if parts is None and not isinstance(subject, str):
        parts = component_masks(subject)
    factors = join_factors(complex_, parts) if parts is not None and len(parts) > 1 else [complex_]
    bound = max(face_bound(f) for f in factors)
    # impure complexes are decided without a face scan
    if bound > config.search.face_cap and complex_.is_pure() and any(p is not Property.WELL_COVERED for p in wanted):
        result.skipped = f"face bound {bound} exceeds {config.search.face_cap}"
        return

    result.requested = list(wanted)
    missing = cached.missing(wanted) if cached is not None else wanted
    report = cached
    if missing:
        join = factors if len(factors) > 1 else None
        if isinstance(subject, str):
            fresh = classify_complex(complex_, subject, options, missing, factors=join)
        else:
            fresh = classify_graph(subject, options, missing, complex_=complex_, factors=join)
        report = fresh if cached is None else cached.merged(fresh)
        result.fresh = True
    result.report = report

    for key in keys:
        _compare(result, key, predicted[key], DERIVED[key][1](report), report)
    if "s2" in predicted and report.s2_terai is not None:
        for k, value in report.s2_terai.items():
            _compare(result, f"s2_terai[{k}]", predicted["s2"], value, report)
    _check_hierarchy(result, report)


def _structural(
    theorem: TheoremId,
    params: dict[str, Any],
    predicted: dict[str, Any],
    result: InstanceResult,
    config: AppConfig,
) -> None:
    budget = config.search.node_budget
    if theorem is TheoremId.STRUCTURE_ONE_PAIRED:
        structure = one_paired_structure(params["n"], params["a"], params["b"])
        parts = {p for p, _ in structure.parts}
        sizes = {s for _, s in structure.parts}
        _compare(result, "components", predicted["components"], structure.components, None)
        _compare(result, "parts", predicted["parts"], parts.pop() if len(parts) == 1 else sorted(parts), None)
        _compare(result, "part_size", predicted["part_size"], sizes.pop() if len(sizes) == 1 else -1, None)

    elif theorem is TheoremId.DAVIS_DOMKE:
        decomposition = decompose_cubic(
            params["two_n"],
            params["a"],
            predicted["component_n"],
            predicted["component_gens"],
            max_vertices=config.search.sweep_isomorphism_vertex_budget,
        )
        certified = len(decomposition.certificates) == decomposition.components
        _compare(result, "components", predicted["components"], decomposition.components, None)
        _compare(result, "component_n", predicted["component_n"], predicted["component_n"] if certified else -1, None)
        _compare(
            result, "component_gens", predicted["component_gens"], predicted["component_gens"] if certified else [], None
        )
        result.certificates = list(decomposition.certificates)
        result.note("certificates_rechecked", sum(recheck_certificate(c) for c in decomposition.certificates))

    elif theorem is TheoremId.INTERVAL_LINKS_UPPER_INTERVAL:
        check = check_interval_links(params["n"], params["d"], budget)
        _compare(result, "interval_facets", predicted["interval_facets"], check.interval_facets, None)
        _compare(result, "complex_shellable", predicted["complex_shellable"], check.complex_shellable.as_verdict(), None)
        links_ok = TIMEOUT if check.timeouts else check.nonshellable_links == 0
        _compare(result, "nonempty_links_shellable", predicted["nonempty_links_shellable"], links_ok, None)

    elif theorem is TheoremId.EQUIV_UPPER_INTERVAL and result.skipped is None:
        items = equivalence_items(params["n"], params["d"], budget)
        _compare(
            result,
            "strongly_connected_with_shellable_links",
            predicted["strongly_connected_with_shellable_links"],
            items.shellable_links.as_verdict(),
            result.report,
        )
        _compare(result, "links_strongly_connected", predicted["links_strongly_connected"], items.weak_links_le_d == 0, result.report)
        result.note("item_vi_le_d_holds", int(items.weak_links_le_d == 0))
        result.note("item_vi_lt_d_holds", int(items.weak_links_lt_d == 0))


def _pair_instance(task: SweepTask, result: InstanceResult, options: ClassifyOptions, config: AppConfig) -> None:
    first = parse_label(task.params["first"])
    second = parse_label(task.params["second"])
    first_ind = independence_complex(first)
    second_ind = independence_complex(second)

    if task.theorem is TheoremId.UNION_NOT_BUCHSBAUM:
        facts = {}
        for name, graph, ind in (("first", first, first_ind), ("second", second, second_ind)):
            facts[f"{name}_buchsbaum"] = buchsbaum_scan(ind, [ALL_FIELDS], rotation_order=graph.n)[ALL_FIELDS].holds
            facts[f"{name}_cm"] = reisner_scan(ind, [ALL_FIELDS], rotation_order=graph.n)[ALL_FIELDS].holds
        try:
            predicted = predict(task.theorem, {**task.params, **facts})
        except ParameterDomainError:
            result.mismatches.append(
                Mismatch(params=result.params, property="hypothesis", predicted=True, computed=False, report=None)
            )
            return
    else:
        facts = {
            "first_s2": is_s2(first_ind, rotation_order=first.n).holds,
            "second_s2": is_s2(second_ind, rotation_order=second.n).holds,
        }
        predicted = predict(task.theorem, {**task.params, **facts})

    if task.theorem is TheoremId.JOIN_S2:
        joined = first_ind.join(second_ind.shifted(first.n))
        label = f"Ind({first.label}) * Ind({second.label})"
        parts = component_masks(first) + [m << first.n for m in component_masks(second)]
        _classify_and_compare(result, predicted, joined, label, options, config, parts=parts)
    else:
        union = disjoint_union(first, second)
        _classify_and_compare(result, predicted, independence_complex(union), union, options, config)


def evaluate_instance(task: SweepTask, config: AppConfig) -> InstanceResult:
    """Evaluate one sweep instance; safe to run in a worker process."""
    options = options_from_config(config)
    result = InstanceResult(params=task.params)

    if task.theorem in (TheoremId.JOIN_S2, TheoremId.DISJOINT_UNION_S2, TheoremId.UNION_NOT_BUCHSBAUM):
        _pair_instance(task, result, options, config)
        return result

    predicted = predict(task.theorem, task.params)
    graph = instance_graph(task.theorem, task.params)
    if graph is not None and any(k in DERIVED for k in predicted):
        _classify_and_compare(result, predicted, independence_complex(graph), graph, options, config, task.cached)
    _structural(task.theorem, task.params, predicted, result, config)
    return result


def _evaluate_payload(payload: tuple[SweepTask, AppConfig]) -> InstanceResult:
    return evaluate_instance(*payload)


def _spot_check(task: SweepTask, outcome: InstanceResult, config: AppConfig) -> None:
    """Recompute a fully cached instance and require identical property values."""
    fresh = evaluate_instance(task.model_copy(update={"cached": None}), config)
    for prop in outcome.requested:
        if getattr(outcome.report, prop.value) != getattr(fresh.report, prop.value):
            raise CacheError(
                f"Cached {prop.value} for {task.params} differs from recomputation",
                {"params": task.params, "property": prop.value},
            )
    logger.info(f"Cache spot check passed for {task.theorem.value} {task.params}")


def verify_theorem(
    theorem: TheoremId | str,
    config: AppConfig,
    jobs: int = 1,
    cache: ReportCache | None = None,
    max_n: int | None = None,
) -> SweepResult:
    """
    Sweep a theorem over its parameter range.

    Args:
        theorem: Theorem id
        config: Application config (budgets, characteristics, sweep bounds)
        jobs: Worker processes; 1 evaluates in-process
        cache: Report cache; cached reports are reused and new ones stored
        max_n: Override for the sweep's vertex bound

    Returns:
        SweepResult with mismatches, timeouts and skipped instances kept apart
    """
    theorem = TheoremId(theorem)
    started = time.perf_counter()
    tasks = []
    for params in theorem_params(theorem, config.sweeps, max_n):
        graph = instance_graph(theorem, params)
        cached = cache.lookup(graph) if cache is not None and graph is not None else None
        tasks.append(SweepTask(theorem=theorem, params=params, cached=cached))

    payloads = [(task, config) for task in tasks]
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            outcomes = pool.map(_evaluate_payload, payloads, chunksize=1)
    else:
        outcomes = [_evaluate_payload(p) for p in payloads]

    sweep = SweepResult(theorem=theorem.value)
    for task, outcome in zip(tasks, outcomes):
        if cache is not None and task.cached is not None and not outcome.fresh and not cache.spot_checked:
            cache.spot_checked = True
            _spot_check(task, outcome, config)
        if cache is not None and outcome.fresh and outcome.report is not None:
            graph = instance_graph(theorem, task.params)
            if graph is not None:
                cache.store(graph, outcome.report)

        if outcome.skipped is not None:
            sweep.skipped.append(SkippedInstance(params=task.params, reason=outcome.skipped))
            continue
        sweep.instances_checked += 1
        sweep.mismatches.extend(outcome.mismatches)
        sweep.certificates.extend(outcome.certificates)
        if outcome.timed_out:
            sweep.timeouts.append(task.params)
        for name, amount in outcome.notes.items():
            sweep.notes[name] = sweep.notes.get(name, 0) + amount

    sweep.runtime_ms = int((time.perf_counter() - started) * 1000)
    status = "pass" if sweep.passed else "FAIL"
    logger.info(
        f"{theorem.value}: {status}, {sweep.instances_checked} instances, "
        f"{len(sweep.mismatches)} mismatches, {len(sweep.timeouts)} timeouts, {len(sweep.skipped)} skipped"
    )
    return sweep


def verify_all(
    config: AppConfig,
    jobs: int = 1,
    cache: ReportCache | None = None,
    max_n: int | None = None,
    theorems: Iterable[TheoremId | str] | None = None,
    progress: Callable[[TheoremId], None] | None = None,
) -> list[SweepResult]:
    """Sweep the given theorems in order (every theorem by default), sharing one cache."""
    results = []
    for theorem in theorems if theorems is not None else TheoremId:
        theorem = TheoremId(theorem)
        if progress is not None:
            progress(theorem)
        results.append(verify_theorem(theorem, config, jobs=jobs, cache=cache, max_n=max_n))
    return results
