from threading import Lock
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Run-wide defaults. Every field can be overridden by a DOTS_* environment
    variable or a .env entry, e.g. DOTS_MAX_RETRIES=8.
    """
    model_config = SettingsConfigDict(env_prefix='DOTS_', env_file='.env', extra='ignore')

    logs_directory: str = Field('logs', description="Directory for system.log and the per-command run logs.")
    log_level: str = Field('INFO', description="Root log level.")
    store_logs_enabled: bool = Field(False, description="Write a JSON record of every run to logs/<command>.log.")
    max_concurrent_cells: int = Field(4, ge=1, description="Worker threads for verify-all grid cells.")
    default_grid: str = Field('4-10', description="Default n range for verify-all, 'lo-hi'.")
    default_seeds: int = Field(5, ge=1, description="Seeds per grid cell for verify-all.")
    oracle_max_n: int = Field(9, ge=4, description="Largest n for the exhaustive separability oracle sweep.")
    max_retries: int = Field(5, ge=0, description="Perturbation retries for degenerate families.")
    jitter_denominator: int = Field(1024, ge=2, description="Perturbations move coordinates by +-1/jitter_denominator.")
    coordinate_bound: int = Field(64, ge=1, description="Numerator and denominator bound for sampled coordinates.")
    refine_limit: int = Field(4096, ge=1, description="Bisection steps allowed when separating wall crossings.")

    @field_validator('log_level')
    def uppercase_level(cls, v):
        return v.upper()

    @field_validator('default_grid')
    def check_grid(cls, v):
        parse_range(v)
        return v


def parse_range(text: str) -> tuple:
    """'4-10' -> (4, 10); a single number is a one-element range."""
    parts = text.split('-')
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"'{text}' is not a range of the form 'lo-hi'.")
    if lo > hi:
        raise ValueError(f"Range '{text}' is empty.")
    return lo, hi


# A single cached instance, shared by every command in the process.
settings_cache: Optional[Settings] = None
cache_lock = Lock()


def get_settings() -> Settings:
    """
    Returns the cached settings, reading the environment on first use.
    """
    global settings_cache
    with cache_lock:
        if settings_cache is None:
            settings_cache = Settings()
        return settings_cache


def reset_settings():
    """Drops the cached settings so the next get_settings() re-reads the environment."""
    global settings_cache
    with cache_lock:
        settings_cache = None
