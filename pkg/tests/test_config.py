"""
Configuration Tests for origami-veech
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from config import (
    Config,
    DevelopmentConfig,
    ProductionConfig,
    TestingConfig,
    get_config,
)


class TestGetConfig:
    """Test environment selection."""

    @pytest.mark.parametrize("env,expected", [
        ("development", DevelopmentConfig),
        ("production", ProductionConfig),
        ("testing", TestingConfig),
        ("unknown", DevelopmentConfig),
    ])
    def test_environment_map(self, monkeypatch, env, expected):
        """ORIGAMI_ENV picks the configuration class."""
        monkeypatch.setenv("ORIGAMI_ENV", env)
        assert type(get_config()) is expected

    def test_default_is_development(self, monkeypatch):
        """No ORIGAMI_ENV means development."""
        monkeypatch.delenv("ORIGAMI_ENV", raising=False)
        assert isinstance(get_config(), DevelopmentConfig)

    @pytest.mark.parametrize("cls", [DevelopmentConfig, ProductionConfig, TestingConfig])
    def test_bounds_shared(self, cls):
        """Every environment enforces the bounds the library reads."""
        for name in ("MAX_GROUP_ORDER", "MAX_ORBIT_SIZE", "MAX_MODULUS", "MAX_ABC_PAIRS", "N_JOBS"):
            assert getattr(cls, name) == getattr(Config, name)

    def test_testing_flags(self):
        """The testing configuration only flips its flags."""
        assert TestingConfig.TESTING
        assert TestingConfig.DEBUG
        assert not Config.TESTING


class TestCacheDir:
    """Test cache directory resolution."""

    def test_override(self, monkeypatch, tmp_path):
        """ORIGAMI_VEECH_CACHE is read at call time."""
        monkeypatch.setenv("ORIGAMI_VEECH_CACHE", str(tmp_path / "elsewhere"))
        assert Config.cache_dir() == tmp_path / "elsewhere"

    def test_default(self, monkeypatch):
        """An empty override falls back to the home directory."""
        monkeypatch.setenv("ORIGAMI_VEECH_CACHE", "")
        assert Config.cache_dir() == Path.home() / ".config" / "origami-veech" / "cache"
