"""Shared fixtures for the origami-veech test suite."""

import pytest


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Keep orbit cache writes inside a per-test directory."""
    cache_dir = tmp_path / "veech-cache"
    monkeypatch.setenv("ORIGAMI_VEECH_CACHE", str(cache_dir))
    return cache_dir
