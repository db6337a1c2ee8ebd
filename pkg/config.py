"""
Origami-Veech Configuration Module
Environment-driven configuration for the library and the command line.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Base Paths
BASE_DIR = Path(__file__).resolve().parent
DATA_DIR = BASE_DIR / "data"
ORIGAMI_DATA_DIR = DATA_DIR / "origamis"

DEFAULT_CACHE_DIR = Path.home() / ".config" / "origami-veech" / "cache"


def _int_env(name: str, default: int) -> int:
    """Read an integer setting from the environment."""
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    return int(value)


class Config:
    """Base configuration class."""

    # Application Settings
    APP_NAME = "origami-veech"
    APP_VERSION = "1.0.0"
    DEBUG = False
    TESTING = False

    # Resource Bounds
    MAX_GROUP_ORDER = _int_env("ORIGAMI_MAX_GROUP_ORDER", 10**6)
    MAX_ORBIT_SIZE = _int_env("ORIGAMI_MAX_ORBIT_SIZE", 10**4)
    MAX_MODULUS = _int_env("ORIGAMI_MAX_MODULUS", 60)
    MAX_ABC_PAIRS = _int_env("ORIGAMI_MAX_ABC_PAIRS", 10**8)

    # Parallelism
    N_JOBS = _int_env("ORIGAMI_N_JOBS", 1)

    # Logging
    LOG_LEVEL = os.getenv("ORIGAMI_LOG_LEVEL", "INFO")
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    @staticmethod
    def cache_dir() -> Path:
        """
        Resolve the orbit cache directory.

        Read at call time so that ORIGAMI_VEECH_CACHE can be changed
        after import (the test suite redirects it to a temporary path).
        """
        override = os.getenv("ORIGAMI_VEECH_CACHE")
        if override:
            return Path(override).expanduser()
        return DEFAULT_CACHE_DIR


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True


class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False
    LOG_LEVEL = os.getenv("ORIGAMI_LOG_LEVEL", "WARNING")


class TestingConfig(Config):
    """Testing configuration."""
    TESTING = True
    DEBUG = True


def get_config():
    """Get configuration based on environment."""
    env = os.getenv("ORIGAMI_ENV", "development")
    config_map = {
        "development": DevelopmentConfig,
        "production": ProductionConfig,
        "testing": TestingConfig
    }
    return config_map.get(env, DevelopmentConfig)()
