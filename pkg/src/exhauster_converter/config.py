"""Configuration management for the exhauster converter."""

import logging
import os
import sys
from typing import Tuple
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _parse_radii(raw: str) -> Tuple[float, ...]:
    return tuple(float(part) for part in raw.split(",") if part.strip())


class Config:
    """Configuration class for the exhauster converter."""

    # Sampling and verification
    EXH_SEED: int = int(os.getenv("EXH_SEED", "42"))
    EXH_TOL: float = float(os.getenv("EXH_TOL", "1e-9"))
    EXH_DIRS: int = int(os.getenv("EXH_DIRS", "1000"))
    EXH_CAP: int = int(os.getenv("EXH_CAP", "1000000"))

    # Numerical tolerances
    EXH_VERTEX_TOL: float = float(os.getenv("EXH_VERTEX_TOL", "1e-12"))
    EXH_NORM_TOL: float = float(os.getenv("EXH_NORM_TOL", "1e-12"))
    EXH_ACTIVE_TOL: float = float(os.getenv("EXH_ACTIVE_TOL", "1e-9"))

    # Coexhauster functions are not positively homogeneous, so they are probed
    # at several distances from the origin.
    EXH_COEX_RADII: Tuple[float, ...] = _parse_radii(os.getenv("EXH_COEX_RADII", "1,3,10"))

    # Debug Configuration
    DEBUG: bool = os.getenv("DEBUG", "false").lower() == "true"
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")

    @classmethod
    def validate(cls) -> None:
        """
        Validate configuration ranges.

        Raises:
            ValueError: If a tolerance, cap, or sample size is out of range.
        """
        for name in ("EXH_TOL", "EXH_VERTEX_TOL", "EXH_NORM_TOL", "EXH_ACTIVE_TOL"):
            if getattr(cls, name) < 0:
                raise ValueError(f"{name} must be non-negative.")
        if cls.EXH_CAP < 1:
            raise ValueError("EXH_CAP must be at least 1.")
        if cls.EXH_DIRS < 0:
            raise ValueError("EXH_DIRS must be non-negative.")
        if cls.LOG_LEVEL.upper() not in logging.getLevelNamesMapping():
            raise ValueError(
                f"LOG_LEVEL must be a logging level name (DEBUG, INFO, WARNING, "
                f"ERROR, CRITICAL), got {cls.LOG_LEVEL!r}."
            )
        if not cls.EXH_COEX_RADII or any(r <= 0 for r in cls.EXH_COEX_RADII):
            raise ValueError(
                "EXH_COEX_RADII must be a non-empty comma list of positive radii "
                "(e.g. 1,3,10)."
            )

    @classmethod
    def get_coexhauster_radii(cls) -> Tuple[float, ...]:
        """
        Get the probing radii for coexhauster families.

        Returns:
            Tuple[float, ...]: Radii at which unit directions are scaled.
        """
        return tuple(cls.EXH_COEX_RADII)


# Validate configuration on import
try:
    Config.validate()
except ValueError as e:
    # Don't fail on import, but warn
    print(f"Configuration warning: {e}", file=sys.stderr)


config: Config = Config()
