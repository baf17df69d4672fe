import logging
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


PACKAGE_ROOT = Path(__file__).parent.parent
DATA_DIR = PACKAGE_ROOT / "data"


class Settings(BaseSettings):
    """
    Runtime configuration, read from BRAID_BOUNDS_* environment variables or a .env file.

    - enumeration_cap: refuse searches whose raw word count exceeds this
    - workers: process count for partitioned enumeration (1 = in-process)
    - split_depth: prefix length of one enumeration work unit
    """

    model_config = SettingsConfigDict(
        env_prefix="BRAID_BOUNDS_", env_file=".env", extra="ignore"
    )

    enumeration_cap: int = Field(default=100_000_000, ge=1)
    workers: int = Field(default=1, ge=1)
    split_depth: int = Field(default=2, ge=0)
    log_level: str = "INFO"
    table_path: Path = DATA_DIR / "knot_table.csv"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {value}")
        return level


def load_env_vars():
    load_dotenv()


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    load_env_vars()
    return Settings()


def setup_logger(name: str = "braid_bounds"):
    logger = logging.getLogger(name)
    if not logger.handlers:
        logger.setLevel(get_settings().log_level)
        handler = logging.StreamHandler()
        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger


def set_log_level(level: str):
    """Apply a level to every logger created through setup_logger."""
    for logger in logging.Logger.manager.loggerDict.values():
        if isinstance(logger, logging.Logger) and logger.handlers:
            logger.setLevel(level)
