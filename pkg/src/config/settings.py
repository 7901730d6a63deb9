from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="SERRE_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    cache: Path | None = Field(
        default=None, description="Default report cache path (JSON lines); unset disables caching"
    )
    log_level: str = Field(default="WARNING", description="Logging level")
    config_path: Path = Field(default=Path("config"), description="Configuration directory")
    config_branch: str = Field(default="base", description="Configuration branch to merge over base")
    jobs: int = Field(default=1, description="Default parallelism degree for sweeps")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v_upper

    @field_validator("jobs")
    @classmethod
    def validate_jobs(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"jobs must be positive, got {v}")
        return v

    @property
    def has_cache(self) -> bool:
        """Check if a default cache path is configured."""
        return self.cache is not None


def get_settings() -> Settings:
    """Get application settings."""
    return Settings()
