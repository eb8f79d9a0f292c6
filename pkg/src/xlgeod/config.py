"""
Configuration for xlgeod.
"""

import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, Field

# - Load environment variables
# Priority: 1) Current directory .env, 2) ~/.aix/xlgeod/.env, 3) Environment variables
_local_env = Path(".env")
_global_env = Path.home() / ".aix" / "xlgeod" / ".env"

if _local_env.exists():
    load_dotenv(_local_env)
elif _global_env.exists():
    load_dotenv(_global_env)
else:
    # - No .env file found, use environment variables only
    load_dotenv(override=False)


def get_env_str(key: str, default: str) -> str:
    """Get string from environment."""
    return os.getenv(key, default)


def get_env_int(key: str, default: int) -> int:
    """Get int from environment."""
    return int(os.getenv(key, str(default)))


def get_env_float(key: str, default: float) -> float:
    """Get float from environment."""
    return float(os.getenv(key, str(default)))


def get_env_bool(key: str, default: bool) -> bool:
    """Get bool from environment."""
    return os.getenv(key, str(default).lower()).lower() == "true"


class SurfacesConfig(BaseModel):
    """Analytic surface catalog and geodesic integrator settings."""

    steps_per_unit: int = Field(default_factory=lambda: get_env_int("XLGEOD_STEPS_PER_UNIT", 1024))
    tangency_tol: float = Field(default_factory=lambda: get_env_float("XLGEOD_TANGENCY_TOL", 1e-8))
    enable_torus: bool = Field(default_factory=lambda: get_env_bool("XLGEOD_ENABLE_TORUS", True))
    shooting_tol: float = Field(default_factory=lambda: get_env_float("XLGEOD_SHOOTING_TOL", 1e-10))


class SolverConfig(BaseModel):
    """Newton star solver settings."""

    newton_tol: float = Field(default_factory=lambda: get_env_float("XLGEOD_NEWTON_TOL", 1e-12))
    newton_step_tol: float = Field(default_factory=lambda: get_env_float("XLGEOD_NEWTON_STEP_TOL", 1e-8))
    newton_max_iter: int = Field(default_factory=lambda: get_env_int("XLGEOD_NEWTON_MAX_ITER", 50))


class SweepsConfig(BaseModel):
    """Convergence study acceptance settings."""

    min_r_squared: float = Field(default_factory=lambda: get_env_float("XLGEOD_MIN_R_SQUARED", 0.99))
    min_remainder_order: float = Field(default_factory=lambda: get_env_float("XLGEOD_MIN_REMAINDER_ORDER", 5.8))
    roundoff_floor: float = Field(default_factory=lambda: get_env_float("XLGEOD_ROUNDOFF_FLOOR", 1e-14))


class ReportConfig(BaseModel):
    """Report emitter settings."""

    precision: int = Field(default_factory=lambda: get_env_int("XLGEOD_PRECISION", 17))
    default_format: str = Field(default_factory=lambda: get_env_str("XLGEOD_FORMAT", "csv"))


class Config(BaseModel):
    """Combined configuration."""

    surfaces: SurfacesConfig = Field(default_factory=SurfacesConfig)
    solver: SolverConfig = Field(default_factory=SolverConfig)
    sweeps: SweepsConfig = Field(default_factory=SweepsConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)


# - Global config instance
config = Config()


def get_config() -> Config:
    """Get configuration instance."""
    return config


def reload_config() -> Config:
    """Rebuild the global configuration from the current environment."""
    global config
    config = Config()
    return config
