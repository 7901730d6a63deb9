"""Deterministic parameter ranges for every sweep."""

import random
from math import gcd
from typing import Any

from src.circulant.families import cubic, omit_one, one_paired, plain_cycle, power_of_cycle, upper_interval
from src.circulant.graph import CirculantGraph, make_circulant
from src.config.config_manager import SweepsConfig
from src.theorems.ids import TheoremId

POWER_OF_CYCLE_IDS = frozenset({
    TheoremId.WC_POWER_OF_CYCLE,
    TheoremId.S2_POWER_OF_CYCLE,
    TheoremId.CM_POWER_OF_CYCLE,
    TheoremId.BUCHS_NOT_CM_POWER_OF_CYCLE,
    TheoremId.BUCHS_NOT_S2_POWER_OF_CYCLE,
})
UPPER_INTERVAL_IDS = frozenset({
    TheoremId.WC_UPPER_INTERVAL,
    TheoremId.CM_UPPER_INTERVAL,
    TheoremId.S2_UPPER_INTERVAL,
    TheoremId.EQUIV_UPPER_INTERVAL,
})
ONE_PAIRED_IDS = frozenset({
    TheoremId.STRUCTURE_ONE_PAIRED,
    TheoremId.S2_ONE_PAIRED,
    TheoremId.CM_ONE_PAIRED,
    TheoremId.BUCHS_NOT_CM_ONE_PAIRED,
    TheoremId.PURE_NOT_BUCHS_ONE_PAIRED,
})
CONNECTED_CUBIC_IDS = frozenset({
    TheoremId.S2_CUBIC_CONNECTED,
    TheoremId.WC_CUBIC_CONNECTED,
    TheoremId.CM_CUBIC_CONNECTED,
    TheoremId.BUCHS_WC_CUBIC_CONNECTED,
})
PAIR_IDS = frozenset({TheoremId.JOIN_S2, TheoremId.DISJOINT_UNION_S2, TheoremId.UNION_NOT_BUCHSBAUM})

# Graphs that are Buchsbaum but not Cohen–Macaulay
BUCHSBAUM_NOT_CM = (
    make_circulant(6, [1, 3]),
    make_circulant(8, [1, 4]),
    make_circulant(10, [2, 5]),
    make_circulant(4, [1]),
)
PAIR_CORPUS_MAX_N = 8


def _upper_bound(theorem: TheoremId, sweeps: SweepsConfig, max_n: int | None) -> int:
    defaults = {
        TheoremId.S2_CYCLES: sweeps.cycles_max_n,
        TheoremId.INTERVAL_LINKS_UPPER_INTERVAL: sweeps.interval_links_max_n,
        TheoremId.S2_OMIT_ONE: sweeps.omit_one_max_n,
        TheoremId.DAVIS_DOMKE: sweeps.cubic_max_two_n,
        TheoremId.S2_CUBIC: sweeps.cubic_max_two_n,
        TheoremId.S2_NOT_BUCHS_FAMILIES: sweeps.families_max_n,
    }
    if theorem in POWER_OF_CYCLE_IDS:
        default = sweeps.power_of_cycle_max_n
    elif theorem in UPPER_INTERVAL_IDS:
        default = sweeps.upper_interval_max_n
    elif theorem in ONE_PAIRED_IDS:
        default = sweeps.one_paired_max_n
    elif theorem in CONNECTED_CUBIC_IDS:
        default = sweeps.cubic_max_two_n
    else:
        default = defaults.get(theorem, 0)
    return default if max_n is None else max_n


def theorem_params(theorem: TheoremId, sweeps: SweepsConfig, max_n: int | None = None) -> list[dict[str, Any]]:
    """
    Parameter dicts for one sweep, in the order results are reported.

    Args:
        theorem: Theorem id
        sweeps: Default bounds
        max_n: Override for the vertex-count bound (2n for cubic sweeps)

    Returns:
        List of parameter dicts; pair sweeps carry the two graph labels
    """
    top = _upper_bound(theorem, sweeps, max_n)

    if theorem in POWER_OF_CYCLE_IDS:
        return [{"n": n, "d": d} for n in range(2, top + 1) for d in range(1, n // 2 + 1)]
    if theorem is TheoremId.S2_CYCLES:
        return [{"n": n} for n in range(3, top + 1)]
    if theorem in UPPER_INTERVAL_IDS:
        return [{"n": n, "d": d} for n in range(4, top + 1) for d in range(1, (n - 2) // 2 + 1)]
    if theorem is TheoremId.INTERVAL_LINKS_UPPER_INTERVAL:
        return [{"n": n, "d": d} for n in range(7, top + 1) for d in range(2, n) if n > 3 * d]
    if theorem is TheoremId.S2_OMIT_ONE:
        return [{"n": n, "i": i} for n in range(3, top + 1) for i in range(1, n // 2 + 1)]
    if theorem in ONE_PAIRED_IDS:
        return [
            {"n": n, "a": a, "b": b}
            for n in range(2, top + 1)
            for a in range(1, n + 1)
            for b in range(2, n + 1)
            if n % (a * b) == 0
        ]
    if theorem in (TheoremId.DAVIS_DOMKE, TheoremId.S2_CUBIC):
        return [{"two_n": two_n, "a": a} for two_n in range(4, top + 1, 2) for a in range(1, two_n // 2)]
    if theorem in CONNECTED_CUBIC_IDS:
        return [
            {"two_n": two_n, "a": a}
            for two_n in range(4, top + 1, 2)
            for a in range(1, two_n // 2)
            if gcd(a, two_n // 2) == 1
        ]
    if theorem is TheoremId.S2_NOT_BUCHS_FAMILIES:
        params = []
        for t in range(2, top + 1):
            for n, a, b in ((8 * t, t, 4 * t), (10 * t, 2 * t, 5 * t), (10 * t, 4 * t, 5 * t)):
                if n <= top:
                    params.append({"t": t, "n": n, "a": a, "b": b})
        return params
    if theorem in (TheoremId.JOIN_S2, TheoremId.DISJOINT_UNION_S2):
        return random_pairs(sweeps, salt=0 if theorem is TheoremId.JOIN_S2 else 1)
    if theorem is TheoremId.UNION_NOT_BUCHSBAUM:
        return [
            {"first": first.label, "second": second.label}
            for k, first in enumerate(BUCHSBAUM_NOT_CM)
            for second in BUCHSBAUM_NOT_CM[k:]
        ]
    raise ValueError(f"No parameter range for {theorem}")


def pair_corpus(max_n: int = PAIR_CORPUS_MAX_N) -> list[CirculantGraph]:
    """Every circulant with 3 <= n <= max_n and a nonempty generating set."""
    graphs = []
    for n in range(3, max_n + 1):
        half = n // 2
        for subset in range(1, 1 << half):
            graphs.append(make_circulant(n, [s + 1 for s in range(half) if subset >> s & 1]))
    return graphs


def random_pairs(sweeps: SweepsConfig, salt: int = 0) -> list[dict[str, Any]]:
    rng = random.Random(sweeps.random_seed + salt)
    corpus = pair_corpus()
    return [
        {"first": rng.choice(corpus).label, "second": rng.choice(corpus).label}
        for _ in range(sweeps.random_pairs)
    ]


def parse_label(label: str) -> CirculantGraph:
    """Inverse of ``CirculantGraph.label`` (``C_8(1,4)``)."""
    head, _, rest = label.partition("(")
    n = int(head.removeprefix("C_"))
    gens = [int(s) for s in rest.rstrip(")").split(",") if s]
    return make_circulant(n, gens)


def instance_graph(theorem: TheoremId, params: dict[str, Any]) -> CirculantGraph | None:
    """The single circulant a sweep instance is about, or None for pair sweeps."""
    if theorem in POWER_OF_CYCLE_IDS:
        return power_of_cycle(params["n"], params["d"]).graph
    if theorem is TheoremId.S2_CYCLES:
        return plain_cycle(params["n"]).graph
    if theorem in UPPER_INTERVAL_IDS or theorem is TheoremId.INTERVAL_LINKS_UPPER_INTERVAL:
        return upper_interval(params["n"], params["d"]).graph
    if theorem is TheoremId.S2_OMIT_ONE:
        return omit_one(params["n"], params["i"]).graph
    if theorem in ONE_PAIRED_IDS:
        return one_paired(params["n"], params["a"], params["b"]).graph
    if theorem in CONNECTED_CUBIC_IDS or theorem in (TheoremId.DAVIS_DOMKE, TheoremId.S2_CUBIC):
        return cubic(params["two_n"], params["a"]).graph
    if theorem is TheoremId.S2_NOT_BUCHS_FAMILIES:
        return make_circulant(params["n"], [params["a"], params["b"]])
    return None
