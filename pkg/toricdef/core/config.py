"""Application configuration."""

from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    APP_NAME: str = "Toric Deformations"
    APP_VERSION: str = "0.4.0"
    DEBUG: bool = False
    ENVIRONMENT: Literal["development", "staging", "production"] = "production"

    # CORS
    CORS_ORIGINS: list[str] = ["http://localhost:3000", "http://localhost:8080"]
    ALLOWED_HOSTS: list[str] = ["localhost", "127.0.0.1"]

    # Logging
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    LOG_FORMAT: Literal["json", "text"] = "json"

    # Monitoring
    PROMETHEUS_ENABLED: bool = True

    # Geometry limits
    MAX_AMBIENT_RANK: int = Field(default=6, ge=1, le=12)
    HILBERT_MAX_CANDIDATES: int = Field(default=200_000, ge=1)
    PHI_SEARCH_LIMIT: int = Field(default=100_000, ge=1)
    SECTION_CACHE_SIZE: int = Field(default=4096, ge=1)

    # Degree scan
    SCAN_DEFAULT_BOUND: int = Field(default=2, ge=0)
    SCAN_MAX_POINTS: int = Field(default=1_000_000, ge=1)

    # Verification runs
    VERIFY_SEED: int = 20240611
    VERIFY_TRIALS: int = Field(default=20, ge=1)
    VERIFY_COCYCLE_TRIALS: int = Field(default=100, ge=1)
    VERIFY_KMAX: int = Field(default=6, ge=2)

    # Reporting
    JSON_SAFE_INTEGER_BITS: int = 53
    FIXTURES_DIR: str | None = None

    @field_validator("CORS_ORIGINS", mode="before")
    @classmethod
    def parse_cors_origins(cls, v: str | list[str]) -> list[str]:
        """Parse CORS origins from string or list."""
        if isinstance(v, str) and not v.startswith("["):
            return [origin.strip() for origin in v.split(",")]
        return v

    @field_validator("ALLOWED_HOSTS", mode="before")
    @classmethod
    def parse_allowed_hosts(cls, v: str | list[str]) -> list[str]:
        """Parse allowed hosts from string or list."""
        if isinstance(v, str) and not v.startswith("["):
            return [host.strip() for host in v.split(",")]
        return v


settings = Settings()
