"""
Runtime configuration for ballmorph.

Values are read from the environment after loading an optional ``.env``
file (see ``config.env.example``).
"""

import os
import logging
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-12
DEFAULT_FD_STEP = 1e-5
DEFAULT_MC_SAMPLES = 1_000_000


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        logger.warning(f"Ignoring non-numeric {name}={raw!r}; using {default}")
        return default


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(float(raw))
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}; using {default}")
        return default


@dataclass
class Settings:
    """Configuration values shared by the library, CLI and scripts."""
    tolerance: float = DEFAULT_TOLERANCE
    fd_step: float = DEFAULT_FD_STEP
    mc_samples: int = DEFAULT_MC_SAMPLES
    seed: int = 0
    n_jobs: int = 1
    log_level: str = "INFO"


def get_settings(env_file: Optional[str] = None) -> Settings:
    """
    Build settings from the environment.

    Args:
        env_file: Optional path of a dotenv file; defaults to ``.env`` lookup

    Returns:
        Settings populated from ``BALLMORPH_*`` variables
    """
    load_dotenv(env_file)
    settings = Settings(
        tolerance=_env_float("BALLMORPH_TOLERANCE", DEFAULT_TOLERANCE),
        fd_step=_env_float("BALLMORPH_FD_STEP", DEFAULT_FD_STEP),
        mc_samples=_env_int("BALLMORPH_MC_SAMPLES", DEFAULT_MC_SAMPLES),
        seed=_env_int("BALLMORPH_SEED", 0),
        n_jobs=_env_int("BALLMORPH_N_JOBS", 1),
        log_level=os.getenv("BALLMORPH_LOG_LEVEL", "INFO").upper(),
    )
    if settings.tolerance <= 0:
        logger.warning("BALLMORPH_TOLERANCE must be positive; using default")
        settings.tolerance = DEFAULT_TOLERANCE
    return settings
