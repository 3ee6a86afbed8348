from pydantic_settings import BaseSettings
from functools import lru_cache
from typing import Optional


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    PROJECT_NAME: str = "bperf"

    # Worker pool (`--jobs` default)
    BPERF_JOBS: int = 1

    # Solver Configuration
    BPERF_TIME_LIMIT_MS: Optional[int] = None  # None = no per-call limit
    BPERF_SEED: int = 0

    # Forces the 22-pattern scan on chordal hosts (cross-checking only)
    BPERF_FULL_SCAN: bool = False

    # Size budgets
    BPERF_MAX_BUILTIN_N: int = 8
    BPERF_MAX_CHORDAL_N: int = 9
    BPERF_BRUTE_MAX_N: int = 10

    # Memoised b == chi answers kept by the brute-force sweep
    BPERF_BALANCE_CACHE_SIZE: int = 65536

    # Claim 6 sampling
    BPERF_CLAIM6_EXHAUSTIVE_N: int = 9
    BPERF_CLAIM6_MAX_SMALL_Y: int = 4
    BPERF_CLAIM6_RANDOM_Y: int = 32

    # Random corpus model
    BPERF_RANDOM_EDGE_PROB: float = 0.5
    BPERF_MAX_RANDOM_ATTEMPTS: int = 10000

    LOG_LEVEL: str = "INFO"

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"  # Ignore extra env variables
        env_ignore_empty = True


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


settings = get_settings()
