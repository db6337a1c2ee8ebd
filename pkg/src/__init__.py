"""origami-veech - Veech groups and non-congruence certificates for regular origamis."""

__version__ = "1.0.0"
__author__ = "origami-veech Team"
