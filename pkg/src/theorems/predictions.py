"""
Closed-form predictions, one per theorem id.

Nothing here imports the deciders: predictions are pure arithmetic on the
family parameters so that the sweep compares two independent computations.
"""

from math import gcd
from typing import Any, Callable

from src.exceptions import ParameterDomainError
from src.theorems.ids import TheoremId

CUBIC_S2_QUOTIENTS = frozenset({3, 4, 5, 8})
CUBIC_WC_QUOTIENTS = frozenset({3, 4, 5, 6, 8})
CUBIC_CM_QUOTIENTS = frozenset({3, 4})


def _need(params: dict[str, Any], *names: str) -> list[int]:
    missing = [name for name in names if name not in params]
    if missing:
        raise ParameterDomainError(f"Missing parameters {missing}", dict(params))
    return [params[name] for name in names]


def _domain(condition: bool, message: str, params: dict[str, Any]) -> None:
    if not condition:
        raise ParameterDomainError(message, dict(params))


def _power_of_cycle(params: dict[str, Any]) -> tuple[int, int]:
    n, d = _need(params, "n", "d")
    _domain(d >= 1 and n >= 2 * d, f"Power of cycle needs n >= 2d >= 2, got n={n}, d={d}", params)
    return n, d


def _upper_interval(params: dict[str, Any]) -> tuple[int, int]:
    n, d = _need(params, "n", "d")
    _domain(d >= 1 and n >= 2 * d + 2, f"Upper interval needs n >= 2d+2, d >= 1, got n={n}, d={d}", params)
    return n, d


def _one_paired(params: dict[str, Any]) -> tuple[int, int, int]:
    n, a, b = _need(params, "n", "a", "b")
    _domain(a >= 1 and b >= 2 and n % (a * b) == 0, f"One-paired needs ab | n, b >= 2, got n={n}, a={a}, b={b}", params)
    return n, a, b


def _cubic(params: dict[str, Any]) -> tuple[int, int, int]:
    """(2n, a, 2n/t) with t = gcd(a, 2n)."""
    two_n, a = _need(params, "two_n", "a")
    _domain(two_n % 2 == 0 and 1 <= a < two_n // 2, f"Cubic needs 1 <= a < n, got 2n={two_n}, a={a}", params)
    return two_n, a, two_n // gcd(a, two_n)


def _connected_cubic(params: dict[str, Any]) -> tuple[int, int, int]:
    two_n, a, quotient = _cubic(params)
    _domain(gcd(a, two_n // 2) == 1, f"C_{two_n}({a},{two_n // 2}) is not connected", params)
    return two_n, a, quotient


def wc_power_of_cycle(params: dict[str, Any]) -> dict[str, Any]:
    n, d = _power_of_cycle(params)
    return {"well_covered": n <= 3 * d + 2 or n == 4 * d + 3}


def s2_power_of_cycle(params: dict[str, Any]) -> dict[str, Any]:
    n, d = _power_of_cycle(params)
    return {
        "s2": (n <= 3 * d + 2 and n != 2 * d + 2) or n == 4 * d + 3,
        "dimension": n // (d + 1) - 1,
    }


def cm_power_of_cycle(params: dict[str, Any]) -> dict[str, Any]:
    n, d = _power_of_cycle(params)
    cm = n <= 3 * d + 2 and n != 2 * d + 2
    return {"cohen_macaulay_all_fields": cm, "shellable": cm, "vertex_decomposable": cm}


def buchs_not_cm_power_of_cycle(params: dict[str, Any]) -> dict[str, Any]:
    n, d = _power_of_cycle(params)
    return {"buchsbaum_not_cm": n == 2 * d + 2 or n == 4 * d + 3}


def s2_cycles(params: dict[str, Any]) -> dict[str, Any]:
    (n,) = _need(params, "n")
    _domain(n >= 3, f"Cycles need n >= 3, got n={n}", params)
    return {"s2": n in (3, 5, 7), "cohen_macaulay_all_fields": n in (3, 5)}


def buchs_not_s2_power_of_cycle(params: dict[str, Any]) -> dict[str, Any]:
    n, d = _power_of_cycle(params)
    return {"buchsbaum_not_s2": n == 2 * d + 2}


def wc_upper_interval(params: dict[str, Any]) -> dict[str, Any]:
    n, d = _upper_interval(params)
    return {"well_covered": n > 3 * d or n == 2 * d + 2}


def cm_upper_interval(params: dict[str, Any]) -> dict[str, Any]:
    n, d = _upper_interval(params)
    cm = n == 2 * d + 2 or d == 1
    return {"cohen_macaulay_all_fields": cm, "shellable": cm, "vertex_decomposable": cm}


def s2_upper_interval(params: dict[str, Any]) -> dict[str, Any]:
    n, d = _upper_interval(params)
    return {"s2": n > 3 * d or n == 2 * d + 2}


def equiv_upper_interval(params: dict[str, Any]) -> dict[str, Any]:
    """All six conditions of the equivalence hold together or fail together."""
    n, d = _upper_interval(params)
    holds = n > 3 * d or n == 2 * d + 2
    return {
        "s2": holds,
        "buchsbaum_all_fields": holds,
        "well_covered": holds,
        "strongly_connected_with_shellable_links": holds,
        "links_strongly_connected": holds,
    }


def interval_links_upper_interval(params: dict[str, Any]) -> dict[str, Any]:
    n, d = _need(params, "n", "d")
    _domain(d > 1 and n > 3 * d, f"Interval links need n > 3d and d > 1, got n={n}, d={d}", params)
    return {"interval_facets": True, "complex_shellable": False, "nonempty_links_shellable": True}


def s2_omit_one(params: dict[str, Any]) -> dict[str, Any]:
    n, i = _need(params, "n", "i")
    _domain(n >= 3 and 1 <= i <= n // 2, f"Omit-one needs n >= 3 and 1 <= i <= n//2, got n={n}, i={i}", params)
    coprime = gcd(i, n) == 1
    return {
        "s2": coprime,
        "cohen_macaulay_all_fields": coprime,
        "dimension": 2 if 3 * i == n else 1,
        "well_covered": True,
        "buchsbaum_all_fields": True,
    }


def structure_one_paired(params: dict[str, Any]) -> dict[str, Any]:
    n, a, b = _one_paired(params)
    return {"components": a, "parts": b, "part_size": n // (a * b), "well_covered": True}


def s2_one_paired(params: dict[str, Any]) -> dict[str, Any]:
    n, a, b = _one_paired(params)
    return {"s2": n == a * b, "well_covered": True}


def cm_one_paired(params: dict[str, Any]) -> dict[str, Any]:
    n, a, b = _one_paired(params)
    cm = n == a * b
    return {"cohen_macaulay_all_fields": cm, "shellable": cm, "vertex_decomposable": cm}


def buchs_not_cm_one_paired(params: dict[str, Any]) -> dict[str, Any]:
    n, a, b = _one_paired(params)
    return {"buchsbaum_not_cm": a == 1 and a * b < n}


def pure_not_buchs_one_paired(params: dict[str, Any]) -> dict[str, Any]:
    n, a, b = _one_paired(params)
    return {"pure_not_buchsbaum": a > 1 and a * b < n}


def s2_cubic_connected(params: dict[str, Any]) -> dict[str, Any]:
    """Among well-covered connected cubic circulants only C_6(1,3) fails S_2."""
    two_n, a, quotient = _connected_cubic(params)
    return {"well_covered_not_s2": quotient == 6}


def wc_cubic_connected(params: dict[str, Any]) -> dict[str, Any]:
    _, _, quotient = _connected_cubic(params)
    return {"well_covered": quotient in CUBIC_WC_QUOTIENTS}


def cm_cubic_connected(params: dict[str, Any]) -> dict[str, Any]:
    _, _, quotient = _connected_cubic(params)
    return {"cohen_macaulay_all_fields": quotient in CUBIC_CM_QUOTIENTS}


def buchs_wc_cubic_connected(params: dict[str, Any]) -> dict[str, Any]:
    _, _, quotient = _connected_cubic(params)
    return {"buchsbaum_all_fields": quotient in CUBIC_WC_QUOTIENTS}


def davis_domke(params: dict[str, Any]) -> dict[str, Any]:
    """Component count and the circulant each component is isomorphic to."""
    two_n, a, quotient = _cubic(params)
    t = two_n // quotient
    if quotient % 2 == 0:
        return {"components": t, "component_n": quotient, "component_gens": [1, quotient // 2]}
    return {"components": t // 2, "component_n": 2 * quotient, "component_gens": [2, quotient]}


def s2_cubic(params: dict[str, Any]) -> dict[str, Any]:
    _, _, quotient = _cubic(params)
    return {"s2": quotient in CUBIC_S2_QUOTIENTS}


def s2_not_buchs_families(params: dict[str, Any]) -> dict[str, Any]:
    (t,) = _need(params, "t")
    _domain(t > 1, f"The S_2-not-Buchsbaum families need t > 1, got t={t}", params)
    return {"s2": True, "buchsbaum_all_fields": False}


def join_s2(params: dict[str, Any]) -> dict[str, Any]:
    first, second = _need(params, "first_s2", "second_s2")
    return {"s2": bool(first and second)}


def disjoint_union_s2(params: dict[str, Any]) -> dict[str, Any]:
    first, second = _need(params, "first_s2", "second_s2")
    return {"s2": bool(first and second)}


def union_not_buchsbaum(params: dict[str, Any]) -> dict[str, Any]:
    flags = _need(params, "first_buchsbaum", "first_cm", "second_buchsbaum", "second_cm")
    first_buchsbaum, first_cm, second_buchsbaum, second_cm = flags
    _domain(
        first_buchsbaum and second_buchsbaum and not first_cm and not second_cm,
        "Both graphs must be Buchsbaum and not Cohen–Macaulay",
        params,
    )
    return {"buchsbaum_all_fields": False}


PREDICTORS: dict[TheoremId, Callable[[dict[str, Any]], dict[str, Any]]] = {
    TheoremId.WC_POWER_OF_CYCLE: wc_power_of_cycle,
    TheoremId.S2_POWER_OF_CYCLE: s2_power_of_cycle,
    TheoremId.CM_POWER_OF_CYCLE: cm_power_of_cycle,
    TheoremId.BUCHS_NOT_CM_POWER_OF_CYCLE: buchs_not_cm_power_of_cycle,
    TheoremId.S2_CYCLES: s2_cycles,
    TheoremId.BUCHS_NOT_S2_POWER_OF_CYCLE: buchs_not_s2_power_of_cycle,
    TheoremId.WC_UPPER_INTERVAL: wc_upper_interval,
    TheoremId.CM_UPPER_INTERVAL: cm_upper_interval,
    TheoremId.S2_UPPER_INTERVAL: s2_upper_interval,
    TheoremId.EQUIV_UPPER_INTERVAL: equiv_upper_interval,
    TheoremId.INTERVAL_LINKS_UPPER_INTERVAL: interval_links_upper_interval,
    TheoremId.S2_OMIT_ONE: s2_omit_one,
    TheoremId.STRUCTURE_ONE_PAIRED: structure_one_paired,
    TheoremId.S2_ONE_PAIRED: s2_one_paired,
    TheoremId.CM_ONE_PAIRED: cm_one_paired,
    TheoremId.BUCHS_NOT_CM_ONE_PAIRED: buchs_not_cm_one_paired,
    TheoremId.PURE_NOT_BUCHS_ONE_PAIRED: pure_not_buchs_one_paired,
    TheoremId.S2_CUBIC_CONNECTED: s2_cubic_connected,
    TheoremId.WC_CUBIC_CONNECTED: wc_cubic_connected,
    TheoremId.CM_CUBIC_CONNECTED: cm_cubic_connected,
    TheoremId.BUCHS_WC_CUBIC_CONNECTED: buchs_wc_cubic_connected,
    TheoremId.DAVIS_DOMKE: davis_domke,
    TheoremId.S2_CUBIC: s2_cubic,
    TheoremId.S2_NOT_BUCHS_FAMILIES: s2_not_buchs_families,
    TheoremId.JOIN_S2: join_s2,
    TheoremId.DISJOINT_UNION_S2: disjoint_union_s2,
    TheoremId.UNION_NOT_BUCHSBAUM: union_not_buchsbaum,
}


def predict(theorem: TheoremId | str, params: dict[str, Any]) -> dict[str, Any]:
    """
    Predicted property values for one instance.

    Args:
        theorem: Theorem id
        params: Family parameters (n, d, i, a, b, two_n or t), or precomputed
            part properties for the join/union results

    Returns:
        Mapping from property name to predicted value

    Raises:
        ParameterDomainError: Parameters outside the theorem's domain
    """
    return PREDICTORS[TheoremId(theorem)](params)
