"""
Configuration management for the mean-payoff expression analyzer
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .exceptions import ConfigurationException

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """Analyzer settings with environment variable support (prefix MPAE_)"""

    model_config = SettingsConfigDict(
        env_prefix="MPAE_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging Configuration
    log_level: str = Field(default="WARNING", description="Log level for diagnostics on stderr")
    log_file: Optional[str] = Field(default=None, description="Optional rotating log file")

    # Analysis Budgets
    cycle_budget: int = Field(default=1_000_000, description="Maximum number of simple cycles enumerated")
    witness_max_rounds: int = Field(default=16, description="Doublings of N before witness search gives up")

    # Development Configuration
    debug: bool = Field(default=False, description="Enable internal consistency assertions")

    @model_validator(mode="after")
    def _validate_configuration(self) -> "Settings":
        """Validate critical configuration values"""
        if self.cycle_budget <= 0:
            raise ConfigurationException(f"Cycle budget must be positive: {self.cycle_budget}")

        if self.witness_max_rounds <= 0:
            raise ConfigurationException("Witness rounds must be positive")

        if self.log_level.upper() not in _LOG_LEVELS:
            raise ConfigurationException(f"Invalid log level: {self.log_level}")

        return self

    def with_overrides(self, **overrides) -> "Settings":
        """Return a copy with the non-None overrides applied"""
        values = {key: value for key, value in overrides.items() if value is not None}
        if not values:
            return self
        return type(self)(**{**self.model_dump(), **values})


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
