from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Runtime limits for the brute-force oracle and the verification harness.
    These parameters can be configured with environment variables,
    ex: "UC_SPECTRA_MAX_RING_ORDER=8192".
    """

    max_ring_order: int = 4096
    max_line_edges: int = 200_000
    eigen_tolerance: float = 1e-6
    workers: int = 4
    log_level: str = "INFO"

    # This means a .env file can be used to overload these settings
    model_config = SettingsConfigDict(
        env_prefix="UC_SPECTRA_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
