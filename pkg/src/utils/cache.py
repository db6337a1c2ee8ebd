"""
Orbit Cache Module for origami-veech.
Content-addressed on-disk store for computed orbits, persisted with joblib.
"""

import logging
from pathlib import Path
from typing import Any, Optional

import joblib

from config import Config

logger = logging.getLogger(__name__)


class OrbitCache:
    """
    One joblib file per content hash.

    Entries are content-addressed, so concurrent writers of the same key
    write the same payload and the last writer wins.
    """

    SUFFIX = ".joblib"

    def __init__(self, directory: Optional[Path] = None):
        """
        Initialize the cache.

        Args:
            directory: cache directory (defaults to Config.cache_dir()).
        """
        self.directory = Path(directory) if directory is not None else Config.cache_dir()

    def path_for(self, key: str) -> Path:
        return self.directory / f"{key}{self.SUFFIX}"

    def get(self, key: str) -> Optional[Any]:
        """Cached payload for key, or None when missing or unreadable."""
        path = self.path_for(key)
        if not path.exists():
            return None
        try:
            return joblib.load(path)
        except Exception as e:
            logger.warning(f"Ignoring unreadable cache entry {path}: {e}")
            return None

    def put(self, key: str, payload: Any) -> Path:
        """Store payload under key."""
        path = self.path_for(key)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            joblib.dump(payload, path)
            logger.info(f"Cached orbit at {path}")
        except OSError as e:
            logger.warning(f"Could not write cache entry {path}: {e}")
        return path

    def clear(self) -> int:
        """Delete all entries; returns how many were removed."""
        if not self.directory.exists():
            return 0
        removed = 0
        for path in self.directory.glob(f"*{self.SUFFIX}"):
            path.unlink()
            removed += 1
        return removed
