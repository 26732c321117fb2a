# config/settings.py
"""
Runtime settings read from the environment (and an optional .env file)
"""
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from utils.errors import ConfigurationError

load_dotenv()

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


class Settings(BaseModel):
    """Worker, logging and census tuning knobs"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    threads: int = Field(ge=1, description="Default worker count (CSET_THREADS)")
    log_level: str = Field(default='WARNING', description="Console log level (CSET_LOG_LEVEL)")
    log_file: Optional[str] = Field(default=None, description="Optional log file (CSET_LOG_FILE)")
    block_bits: int = Field(default=16, ge=8, le=24, description="log2 of the census block size (CSET_BLOCK_BITS)")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.strip())
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")


def get_settings() -> Settings:
    """
    Build settings from the current environment

    Returns:
        Settings instance; invalid values raise ConfigurationError
    """
    log_level = os.getenv('CSET_LOG_LEVEL', 'WARNING').strip().upper()
    if log_level not in LOG_LEVELS:
        raise ConfigurationError(f"CSET_LOG_LEVEL must be one of {LOG_LEVELS}, got {log_level!r}")

    try:
        return Settings(
            threads=_env_int('CSET_THREADS', os.cpu_count() or 1),
            log_level=log_level,
            log_file=os.getenv('CSET_LOG_FILE') or None,
            block_bits=_env_int('CSET_BLOCK_BITS', 16),
        )
    except ValidationError as e:
        raise ConfigurationError(f"Invalid settings: {e.errors()[0]['loc'][0]} {e.errors()[0]['msg']}")
