from functools import lru_cache
from typing import Dict

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Logging
    LOG_LEVEL: str = "info"
    LOG_JSON: bool = False

    # Oracle search
    EXP_BOUND: int = Field(6, ge=1)
    NODE_BUDGET: int = Field(2_000_000, ge=1_000)
    SEARCH_BOX_BUDGET: int = Field(1_000_000, ge=1_000)
    WORKERS: int = Field(1, ge=1)

    # Certificate generators
    MODE: str = "strict"
    SIEVE_R_CAP: int = 64
    PM_SCAN_FACTOR: int = 4

    # Soundness tripwire (re-runs the oracle on every certified target)
    TRIPWIRE_ENABLED: bool = False
    TRIPWIRE_EXP_BOUND: int = Field(3, ge=1)

    # Structured output
    SCHEMA_VERSION: str = "1"

    model_config = SettingsConfigDict(
        env_file=".env",  # Load variables from .env file
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    def get_search_config(self) -> Dict[str, int]:
        """Get the oracle search limits."""
        return {
            "exp_bound": self.EXP_BOUND,
            "node_budget": self.NODE_BUDGET,
            "workers": self.WORKERS,
        }


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    settings = Settings()
    return settings
