"""Utility modules for origami-veech."""

from .cache import OrbitCache
from .report_generator import ReportGenerator

__all__ = ["OrbitCache", "ReportGenerator"]
