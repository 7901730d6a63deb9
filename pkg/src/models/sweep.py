"""Theorem sweep results."""

from typing import Any

import pandas as pd
from pydantic import BaseModel, Field


class Mismatch(BaseModel):
    params: dict[str, Any]
    property: str
    predicted: Any
    computed: Any
    report: dict[str, Any] | None = Field(default=None, description="Full classification report of the instance")


class SkippedInstance(BaseModel):
    params: dict[str, Any]
    reason: str


class Certificate(BaseModel):
    """Isomorphism certificate for one component of a decomposed graph."""

    params: dict[str, int]
    component: int
    vertices: list[int]
    target: str
    mapping: list[int]


class SweepResult(BaseModel):
    theorem: str
    instances_checked: int = 0
    mismatches: list[Mismatch] = Field(default_factory=list)
    timeouts: list[dict[str, Any]] = Field(default_factory=list)
    skipped: list[SkippedInstance] = Field(default_factory=list)
    certificates: list[Certificate] = Field(default_factory=list)
    notes: dict[str, Any] = Field(default_factory=dict)
    runtime_ms: int = Field(default=0, description="Wall time; left out of JSON unless timings are requested")

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.timeouts and not self.skipped

    def to_json(self, timings: bool = False, certificates: bool = True) -> dict[str, Any]:
        exclude = set()
        if not timings:
            exclude.add("runtime_ms")
        if not certificates:
            exclude.add("certificates")
        return self.model_dump(mode="json", exclude=exclude)

    def summary_row(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "status": "pass" if self.passed else "FAIL",
            "instances": self.instances_checked,
            "mismatches": len(self.mismatches),
            "timeouts": len(self.timeouts),
            "skipped": len(self.skipped),
            "runtime_ms": self.runtime_ms,
        }


def sweeps_frame(results: list[SweepResult]) -> pd.DataFrame:
    """One row per theorem, suitable for CSV export."""
    return pd.DataFrame([r.summary_row() for r in results])
