"""
Application Configuration

Uses Pydantic Settings for environment variable management with validation.
Every desk-scale bound of the enumeration services lives here so it can be
raised per run with ``NCMODEL_*`` environment variables.
"""

from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Environment
    ENVIRONMENT: str = "development"
    LOG_LEVEL: str = "WARNING"

    # Enumeration bounds
    ENUM_ENTRY_BOUND: int = 8
    CLASSIFY_MAX_N: int = 12
    MATCH_MAX_VERTICES: int = 10
    SUBSET_SCAN_MAX_P: int = 8

    # Resolution
    MAX_BLOWUPS: int = 256

    # Randomized stability sampler
    SAMPLER_SEED: int = 0
    SAMPLER_SIZE: int = 1000

    model_config = SettingsConfigDict(
        env_prefix="NCMODEL_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    @property
    def is_development(self) -> bool:
        """Check if running in development mode."""
        return self.ENVIRONMENT == "development"


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Using lru_cache ensures settings are only loaded once.
    """
    return Settings()


# Global settings instance
settings = get_settings()
