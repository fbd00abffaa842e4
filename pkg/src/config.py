"""
Runtime settings.

Values come from YHECKE_* environment variables; the CLI calls load_dotenv()
first, so a .env file in the working directory is honoured.
"""

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    max_ball_length: int = 8        # longest IM length ever enumerated
    max_rank: int = 500             # largest r^n * n! a suite will touch
    seed: int = 0
    samples: int = 100
    log_level: str = "WARNING"


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name, "")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def get_settings() -> Settings:
    """Read settings from the environment."""
    return Settings(
        max_ball_length=_int_env("YHECKE_MAX_BALL_LENGTH", Settings.max_ball_length),
        max_rank=_int_env("YHECKE_MAX_RANK", Settings.max_rank),
        seed=_int_env("YHECKE_SEED", Settings.seed),
        samples=_int_env("YHECKE_SAMPLES", Settings.samples),
        log_level=os.environ.get("YHECKE_LOG_LEVEL", Settings.log_level),
    )
