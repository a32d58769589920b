from __future__ import annotations

import logging

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Runtime settings loaded from KE_SQUARE_* environment variables."""

    model_config = {"env_file": ".env", "env_prefix": "KE_SQUARE_", "extra": "ignore"}

    # Verification runs
    jobs: int = Field(default=1, ge=1)  # Default for --jobs
    seed: int = 0  # Default for --seed (64-bit)
    certificate_cap: int = Field(default=100, ge=0)  # Stored violations per check
    batch_size: int = Field(default=256, ge=1)  # Graphs per worker task

    # Logging
    log_level: str = "WARNING"  # e.g. "INFO", "DEBUG"

    @property
    def log_level_value(self) -> int:
        """Resolve the configured level name, falling back to WARNING for unknown names."""
        level = logging.getLevelName(self.log_level.strip().upper())
        return level if isinstance(level, int) else logging.WARNING


settings = Settings()
