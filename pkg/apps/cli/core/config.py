"""Application configuration."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True)

    # Logging
    DEBUG: bool = False
    LOG_FORMAT: str = "text"  # text | json

    # Sampling
    ROOTMONOID_SEED: int = 0
    DEFAULT_SAMPLES: int = 100
    RATIONAL_BOUND: int = 9  # numerators and denominators of sampled values

    # Lattice computations
    ROOT_BOUND: int = 5  # max-norm for root enumeration
    HILBERT_BOX_BOUND: int = 12  # degree of the fallback scan
    HILBERT_MAX_CANDIDATES: int = 200_000  # parallelepiped points before falling back

    # Center
    CENTER_DEGREE_BOUND: int = 8


settings = Settings()
