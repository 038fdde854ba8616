from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    # Bernoulli cache (one text file per prime)
    GSP4_CACHE_DIR: Path = Path.home() / ".cache" / "gsp4lift"

    # Logging
    GSP4_LOG_LEVEL: str = "WARNING"

    # Exhaustive scans over (Z/(p-1))^2 refuse larger primes without --allow-large
    GSP4_MAX_EXHAUSTIVE_P: int = 2000

    # Process pool size for per-prime work (1 = run inline)
    GSP4_WORKERS: int = 1

    # Experiment defaults
    GSP4_CONFIG_PATH: Path = Path("lift_config.yaml")


def get_settings() -> Settings:
    return Settings()
