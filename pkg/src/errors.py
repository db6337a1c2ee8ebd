"""
Error types for origami-veech.

Every library error is a ValueError so callers that only care about bad
input can catch one type; the command line maps all of them to exit code 2.
"""


class OrigamiError(ValueError):
    """Base class for all domain errors."""


class DegreeMismatchError(OrigamiError):
    """Two permutations of different degree were combined."""


class NotGeneratingError(OrigamiError):
    """A pair of elements does not generate the expected group."""


class ResourceLimitError(OrigamiError):
    """A configured size bound (group order, orbit size, modulus) was exceeded."""


class NotPairwiseCoprimeError(OrigamiError):
    """The orders (a, b, c) passed to the triangle-group criterion share a factor."""


class OrderMismatchError(OrigamiError):
    """Generator orders do not match the requested (a, b, c)."""
