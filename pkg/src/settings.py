from typing import Optional
from pathlib import Path
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache


class Settings(BaseSettings):
    """
    Application settings.

    Every field can be overridden through an environment variable carrying the
    ``LND_`` prefix (for example ``LND_CACHE_DIR``) or through a ``.env`` file.

    Attributes:
        # General Settings
        APP_NAME: Name of the application
        DEBUG: Debug mode flag (forces DEBUG log level)
        LOG_LEVEL: Level of the stderr log sink
        LOG_FILE: Optional rotating log file

        # Processing Settings
        MAX_WORKERS: Maximum number of worker threads for verification sweeps

        # Cache Settings
        CACHE_DIR: Directory of the on-disk coefficient cache

        # Numerical Settings
        CUT_TOLERANCE: Distance to a branch cut below which side information is lost
        HYP_TAIL_TOL: Relative tail tolerance of the hypergeometric series
        HYP_MAX_TERMS: Hard cap on hypergeometric series terms
        FD_STEP: Default finite-difference step in the degree
        FD_RICHARDSON_LEVELS: Default number of step sizes (h, h/2, ...) fed to Richardson extrapolation
        FD_TOLERANCE: Default oracle agreement tolerance
        NEAR_INTEGER_GUARD: Exclusion zone around integer degrees for Q oracles
        DEFAULT_SEED: Seed for randomized verification points
    """

    # General Settings
    APP_NAME: str = "Legendre degree-derivatives"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[str] = None

    # Processing Settings
    MAX_WORKERS: int = 4

    # Cache Settings
    CACHE_DIR: Path = Path.home() / ".cache" / "lnd"

    # Numerical Settings
    CUT_TOLERANCE: float = 1e-14
    HYP_TAIL_TOL: float = 1e-15
    HYP_MAX_TERMS: int = 100_000
    FD_STEP: float = 1e-3
    FD_RICHARDSON_LEVELS: int = 2
    FD_TOLERANCE: float = 1e-5
    NEAR_INTEGER_GUARD: float = 1e-6
    DEFAULT_SEED: int = 42

    model_config = SettingsConfigDict(
        env_prefix="LND_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Returns:
        Settings: Application settings instance
    """
    return Settings()
