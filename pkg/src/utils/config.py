"""
Configuration Management
========================
Centralized settings with validation. Uses Pydantic for type safety.
Values come from the environment (or a local .env file); defaults match
the documented solver and grid defaults.
"""

import os
from pathlib import Path
from typing import Optional
from pydantic import BaseModel, Field, field_validator
from dotenv import load_dotenv

# Load .env file
load_dotenv()


LOG_LEVELS = {
    "quiet": "ERROR",
    "info": "INFO",
    "debug": "DEBUG",
}


class Settings(BaseModel):
    """Application settings with validation."""

    # --- Logging ---
    log_mode: str = Field(
        default="info",
        description="stderr verbosity: 'quiet', 'info' or 'debug'"
    )
    log_dir: Optional[Path] = Field(
        default=None,
        description="Directory for rotating log files (disabled when unset)"
    )

    # --- Solver defaults ---
    grid_size: int = Field(
        default=1024,
        ge=16,
        le=1_048_576,
        description="Default number of grid intervals m"
    )
    max_iters: int = Field(
        default=100_000,
        ge=1,
        description="Iteration cap for projected gradient descent"
    )
    grad_tol: float = Field(
        default=1e-8,
        gt=0.0,
        description="Sup-norm tolerance on the projected gradient"
    )
    seed: int = Field(
        default=0,
        ge=0,
        description="Seed for random-monotone initialization"
    )
    workers: int = Field(
        default=4,
        ge=1,
        le=64,
        description="Thread pool width for multistart runs"
    )

    # --- Analysis defaults ---
    sequence_grid: int = Field(
        default=8192,
        ge=256,
        description="Grid size for the zig-zag minimizing sequence"
    )

    @field_validator("log_mode")
    @classmethod
    def check_log_mode(cls, v: str) -> str:
        """Only the three documented verbosity modes are accepted."""
        v = v.strip().lower()
        if v not in LOG_LEVELS:
            raise ValueError(f"DISTMIN_LOG must be one of {sorted(LOG_LEVELS)}, got {v!r}")
        return v

    @property
    def log_level(self) -> str:
        """loguru level name for the console handler."""
        return LOG_LEVELS[self.log_mode]

    @property
    def has_log_dir(self) -> bool:
        """Check if file logging is configured."""
        return self.log_dir is not None


def load_settings() -> Settings:
    """Load settings from environment variables."""
    log_dir = os.getenv("DISTMIN_LOG_DIR", "")
    return Settings(
        # Logging
        log_mode=os.getenv("DISTMIN_LOG", "info"),
        log_dir=Path(log_dir) if log_dir else None,

        # Solver
        grid_size=int(os.getenv("DISTMIN_GRID", "1024")),
        max_iters=int(os.getenv("DISTMIN_MAX_ITERS", "100000")),
        grad_tol=float(os.getenv("DISTMIN_GRAD_TOL", "1e-8")),
        seed=int(os.getenv("DISTMIN_SEED", "0")),
        workers=int(os.getenv("DISTMIN_WORKERS", "4")),

        # Analysis
        sequence_grid=int(os.getenv("DISTMIN_SEQUENCE_GRID", "8192")),
    )


# Singleton instance
settings = load_settings()
