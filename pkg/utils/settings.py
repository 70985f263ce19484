"""
Process-wide settings read from TORSIONLAB_* environment variables.

@Time ： 2026-10-18
"""
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from utils.env_loader import load_platform_specific_env

load_platform_specific_env()

VERSION = "0.1.0"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="TORSIONLAB_", extra="ignore")

    workers: int = Field(default=1, ge=1)
    log_dir: str = "logs"
    log_format: str = "console"
    debug: bool = False
    root_tol: float = Field(default=1e-12, gt=0)
    probe_points: int = Field(default=1000, ge=10)

    @field_validator("log_format")
    def validate_log_format(cls, value: str) -> str:
        if value not in {"console", "json"}:
            raise ValueError(f"Invalid log format: {value}. Must be 'console' or 'json'")
        return value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
