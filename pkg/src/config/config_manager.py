"""Configuration management for externalized YAML configurations."""

import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, Field, field_validator

from src.homology.profile import check_characteristic
from src.utils.logging import get_logger

logger = get_logger(__name__)


class MetadataConfig(BaseModel):
    """Configuration metadata."""
    name: str = "serrecheck"
    description: str = "Default configuration"


class SearchConfig(BaseModel):
    """Budgets for exhaustive searches and sweep guards."""
    node_budget: int = Field(default=10_000_000, gt=0)
    search_facet_cap: int = Field(default=256, gt=0)
    face_cap: int = Field(default=250_000, gt=0)
    isomorphism_vertex_budget: int = Field(default=16, gt=0)
    sweep_isomorphism_vertex_budget: int = Field(default=24, gt=0)


class FieldsConfig(BaseModel):
    """Characteristics and Serre levels reported by default."""
    characteristics: list[int] = Field(default_factory=lambda: [0, 2, 3, 5])
    serre_levels: list[int] = Field(default_factory=lambda: [2, 3])

    @field_validator("serre_levels")
    @classmethod
    def validate_levels(cls, v: list[int]) -> list[int]:
        if any(r < 1 for r in v):
            raise ValueError(f"Serre levels must be at least 1: {v}")
        return sorted(set(v))


class SweepsConfig(BaseModel):
    """Default parameter bounds for theorem sweeps."""
    power_of_cycle_max_n: int = 26
    cycles_max_n: int = 12
    upper_interval_max_n: int = 26
    interval_links_max_n: int = 13
    omit_one_max_n: int = 20
    one_paired_max_n: int = 24
    cubic_max_two_n: int = 24
    families_max_n: int = 24
    random_pairs: int = 40
    random_seed: int = 20240601


class OutputConfig(BaseModel):
    """Output defaults."""
    format: str = "table"
    witness_dir: str = "witnesses"

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        if v not in ("json", "table", "csv"):
            raise ValueError(f"Unknown output format: {v}")
        return v


class AppConfig(BaseModel):
    """Main application configuration."""
    version: str = "1.0"
    metadata: MetadataConfig = Field(default_factory=MetadataConfig)
    search: SearchConfig = Field(default_factory=SearchConfig)
    fields: FieldsConfig = Field(default_factory=FieldsConfig)
    sweeps: SweepsConfig = Field(default_factory=SweepsConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """Manages loading and merging of configuration files."""

    def __init__(self, config_path: str | Path | None = None, branch: str = "base"):
        """Initialize configuration manager.

        Args:
            config_path: Path to configuration directory (defaults to ./config)
            branch: Experiment branch merged over base (defaults to "base")
        """
        self.config_path = Path(config_path) if config_path else Path("config")
        self.branch = branch
        self._app_config: AppConfig | None = None

    def _load_yaml(self, file_path: Path) -> dict[str, Any]:
        """Load YAML file safely; a missing file yields an empty mapping."""
        if not file_path.exists():
            logger.warning(f"Configuration file not found, using defaults: {file_path}")
            return {}

        with open(file_path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}

    def load_app_config(self) -> AppConfig:
        """Load application configuration, merging the experiment branch over base."""
        if self._app_config is None:
            app_data = self._load_yaml(self.config_path / "base" / "app.yaml")

            if self.branch != "base":
                exp_file = self.config_path / "experiments" / f"{self.branch}.yaml"
                app_data = _deep_merge(app_data, self._load_yaml(exp_file))

            self._app_config = AppConfig(**app_data)

        return self._app_config

    def with_overrides(self, overrides: dict[str, Any]) -> AppConfig:
        """Return the loaded configuration with a nested override mapping applied."""
        base = self.load_app_config().model_dump()
        return AppConfig(**_deep_merge(base, overrides))

    def list_branches(self) -> list[str]:
        """List available experiment branches."""
        experiments = self.config_path / "experiments"
        if not experiments.exists():
            return ["base"]
        return ["base"] + sorted(p.stem for p in experiments.glob("*.yaml"))

    def validate_config(self) -> bool:
        """Validate configuration files."""
        try:
            app = self.load_app_config()
            for k in app.fields.characteristics:
                check_characteristic(k)
            return True
        except Exception as e:
            logger.error(f"Configuration validation failed: {e}")
            return False


_config_manager: ConfigManager | None = None


def get_config_manager() -> ConfigManager:
    """Get global configuration manager instance."""
    global _config_manager
    if _config_manager is None:
        config_path = os.getenv("SERRE_CONFIG_PATH", "config")
        branch = os.getenv("SERRE_CONFIG_BRANCH", "base")
        _config_manager = ConfigManager(config_path, branch)
    return _config_manager


def reset_config_manager() -> None:
    """Reset global configuration manager (for testing)."""
    global _config_manager
    _config_manager = None
