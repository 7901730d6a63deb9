"""Resolved configuration of one CLI invocation."""

from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, Field, field_validator

from src.exceptions import FieldSpecError
from src.homology.profile import check_characteristic

GRAPH_KEYS = ("n", "gens", "family", "d", "i", "a", "b", "two_n")


class RunConfig(BaseModel):
    command: str
    params: dict[str, Any] = Field(default_factory=dict, description="Graph or family parameters")
    theorem: str | None = None
    characteristics: list[int] = Field(default_factory=lambda: [0, 2, 3, 5])
    budget: int = Field(default=10_000_000, gt=0, description="Search node budget")
    jobs: int = Field(default=1, gt=0)
    format: Literal["json", "table", "csv"] = "table"
    cache: Path | None = None
    max_n: int | None = Field(default=None, gt=0)
    certify: bool = False
    stats: bool = False
    timings: bool = False
    witness_dir: Path = Path("witnesses")

    @field_validator("characteristics")
    @classmethod
    def validate_characteristics(cls, v: list[int]) -> list[int]:
        for k in v:
            try:
                check_characteristic(k)
            except FieldSpecError as e:
                raise ValueError(str(e)) from e
        return sorted(set(v))

    @classmethod
    def resolve(
        cls, command: str, defaults: dict[str, Any], file_values: dict[str, Any], flags: dict[str, Any]
    ) -> "RunConfig":
        """Merge configuration layers; explicit flags win over the run file, which wins over defaults."""
        data: dict[str, Any] = {"command": command}
        params: dict[str, Any] = {}
        for layer in (defaults, file_values, flags):
            for key, value in layer.items():
                if value is None:
                    continue
                if key in GRAPH_KEYS:
                    params[key] = value
                else:
                    data[key] = value
        data["params"] = params
        return cls(**data)


def load_run_file(path: Path) -> dict[str, Any]:
    """Read a flat key/value YAML run file (``chars: [0, 2]``, ``budget: 1000`` ...)."""
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"Run file {path} must hold a mapping")
    if "chars" in data:
        data["characteristics"] = data.pop("chars")
    return {key.replace("-", "_"): value for key, value in data.items()}
