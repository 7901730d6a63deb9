import re
from enum import StrEnum


class TheoremId(StrEnum):
    """Closed-form classification results checked by the sweep harness."""

    WC_POWER_OF_CYCLE = "wc-power-of-cycle"
    S2_POWER_OF_CYCLE = "s2-power-of-cycle"
    CM_POWER_OF_CYCLE = "cm-power-of-cycle"
    BUCHS_NOT_CM_POWER_OF_CYCLE = "buchs-not-cm-power-of-cycle"
    S2_CYCLES = "s2-cycles"
    BUCHS_NOT_S2_POWER_OF_CYCLE = "buchs-not-s2-power-of-cycle"
    WC_UPPER_INTERVAL = "wc-upper-interval"
    CM_UPPER_INTERVAL = "cm-upper-interval"
    S2_UPPER_INTERVAL = "s2-upper-interval"
    EQUIV_UPPER_INTERVAL = "equiv-upper-interval"
    INTERVAL_LINKS_UPPER_INTERVAL = "interval-links-upper-interval"
    S2_OMIT_ONE = "s2-omit-one"
    STRUCTURE_ONE_PAIRED = "structure-one-paired"
    S2_ONE_PAIRED = "s2-one-paired"
    CM_ONE_PAIRED = "cm-one-paired"
    BUCHS_NOT_CM_ONE_PAIRED = "buchs-not-cm-one-paired"
    PURE_NOT_BUCHS_ONE_PAIRED = "pure-not-buchs-one-paired"
    S2_CUBIC_CONNECTED = "s2-cubic-connected"
    WC_CUBIC_CONNECTED = "wc-cubic-connected"
    CM_CUBIC_CONNECTED = "cm-cubic-connected"
    BUCHS_WC_CUBIC_CONNECTED = "buchs-wc-cubic-connected"
    DAVIS_DOMKE = "davis-domke"
    S2_CUBIC = "s2-cubic"
    S2_NOT_BUCHS_FAMILIES = "s2-not-buchs-families"
    JOIN_S2 = "join-s2"
    DISJOINT_UNION_S2 = "disjoint-union-s2"
    UNION_NOT_BUCHSBAUM = "union-not-buchsbaum"


def parse_theorem(value: str) -> TheoremId:
    """Accept the kebab-case id, the member name or its CamelCase form (``S2_PowerOfCycle``)."""
    try:
        return TheoremId(value.lower())
    except ValueError:
        pass
    try:
        snake = re.sub(r"(?<=[a-z0-9])(?=[A-Z])", "_", value)
        return TheoremId[snake.upper().replace("-", "_")]
    except KeyError:
        raise ValueError(f"Unknown theorem id: {value}") from None
