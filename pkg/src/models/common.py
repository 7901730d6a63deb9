from enum import StrEnum
from typing import Literal, TypeAlias

from pydantic import BaseModel, ConfigDict, Field

Verdict: TypeAlias = bool | Literal["timeout"]
TIMEOUT: Literal["timeout"] = "timeout"


class Outcome(StrEnum):
    """Result of a budgeted exhaustive search."""

    TRUE = "true"
    FALSE = "false"
    TIMEOUT = "timeout"

    def as_verdict(self) -> Verdict:
        if self is Outcome.TIMEOUT:
            return TIMEOUT
        return self is Outcome.TRUE


class SerreLevel(BaseModel):
    """Serre's condition S_r; every complex satisfies S_1."""

    model_config = ConfigDict(frozen=True)

    r: int = Field(..., ge=1)

    @property
    def is_trivial(self) -> bool:
        return self.r == 1


class Property(StrEnum):
    """Report fields that can be requested individually."""

    WELL_COVERED = "well_covered"
    S2 = "s2"
    S2_TERAI = "s2_terai"
    SR = "sr"
    COHEN_MACAULAY = "cohen_macaulay"
    COHEN_MACAULAY_ALL_FIELDS = "cohen_macaulay_all_fields"
    BUCHSBAUM = "buchsbaum"
    BUCHSBAUM_ALL_FIELDS = "buchsbaum_all_fields"
    SHELLABLE = "shellable"
    VERTEX_DECOMPOSABLE = "vertex_decomposable"
    STRONGLY_CONNECTED = "strongly_connected"


ALL_PROPERTIES: tuple[Property, ...] = tuple(Property)
