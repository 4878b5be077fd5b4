"""Loads solver defaults from the environment and an optional .env file"""
import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

ENV_PREFIX = "POSIFLOW_"


class Settings(BaseModel):
    """Defaults used by the command line when a flag is omitted"""
    tol: float = Field(default=1e-9, gt=0)
    max_iter: int = Field(default=100000, ge=1)
    divergence_cap: float = Field(default=1e12, gt=0)
    observer_tol: float = Field(default=1e-9, gt=0)
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, dotenv_path: Optional[str] = None) -> "Settings":
        """
        Build settings from POSIFLOW_* environment variables

        Args:
            dotenv_path: Optional .env file; the default search is used when omitted

        Returns:
            Settings with environment overrides applied
        """
        load_dotenv(dotenv_path, override=False)
        values = {}
        for name in cls.model_fields:
            raw = os.environ.get(f"{ENV_PREFIX}{name.upper()}")
            if raw is not None and raw.strip():
                values[name] = raw.strip()
        return cls.model_validate(values)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Cached settings for the current process"""
    return Settings.from_env()
