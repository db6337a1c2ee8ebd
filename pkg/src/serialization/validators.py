"""
Input Validation Module for origami-veech.
Uses Pydantic to validate origami and group JSON before any computation.
"""

from typing import List

from pydantic import BaseModel, Field, field_validator, model_validator

Cycles = List[List[int]]


def _check_cycles(cycles: Cycles, degree: int) -> Cycles:
    seen = set()
    for cycle in cycles:
        for point in cycle:
            if point < 1 or point > degree:
                raise ValueError(f"point {point} outside 1..{degree}")
            if point in seen:
                raise ValueError(f"point {point} appears twice")
            seen.add(point)
    return cycles


class GroupInput(BaseModel):
    """Validation schema for a permutation group."""

    degree: int = Field(..., ge=1, description="Number of points acted on")
    generators: List[Cycles] = Field(
        ...,
        min_length=1,
        description="Generators as lists of 1-based cycles"
    )

    @model_validator(mode="after")
    def check_generators(self):
        """Every generator must be a set of disjoint cycles on 1..degree."""
        for cycles in self.generators:
            _check_cycles(cycles, self.degree)
        return self


class OrigamiInput(BaseModel):
    """Validation schema for a regular origami (G, x, y)."""

    group: GroupInput
    x: Cycles = Field(..., description="Right-neighbour deck transformation")
    y: Cycles = Field(..., description="Upper-neighbour deck transformation")

    @model_validator(mode="after")
    def check_pair(self):
        """x and y must be permutations of the group's points."""
        _check_cycles(self.x, self.group.degree)
        _check_cycles(self.y, self.group.degree)
        return self


class PermOrigamiInput(BaseModel):
    """Validation schema for an origami given by its neighbour maps."""

    n: int = Field(..., ge=1, description="Number of squares")
    sigma_r: Cycles
    sigma_u: Cycles

    @model_validator(mode="after")
    def check_maps(self):
        """Both maps must be permutations of the squares."""
        _check_cycles(self.sigma_r, self.n)
        _check_cycles(self.sigma_u, self.n)
        return self


class AbcInput(BaseModel):
    """Validation schema for a triple of generator orders."""

    a: int = Field(..., ge=1)
    b: int = Field(..., ge=1)
    c: int = Field(..., ge=1)

    @classmethod
    def parse(cls, text: str) -> "AbcInput":
        """Parse "a,b,c"."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"Expected three comma-separated integers, got {text!r}")
        return cls(a=int(parts[0]), b=int(parts[1]), c=int(parts[2]))

    @field_validator("a", "b", "c", mode="before")
    @classmethod
    def coerce_int(cls, v):
        """Accept numeric strings."""
        return int(v)
