"""
Data models for Riemann-normal-coordinate curvature estimation.
"""

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Coord2(BaseModel):
    """
    Riemann normal coordinates (a, b) of a neighbor vertex.
    """

    model_config = ConfigDict(frozen=True)

    a: float = Field(allow_inf_nan=False)
    b: float = Field(allow_inf_nan=False)

    def cross(self, other: "Coord2") -> float:
        return self.a * other.b - self.b * other.a


class VertexStar(BaseModel):
    """
    Central vertex with m neighbors in counterclockwise order, described by leg lengths only.

    spoke_sq[i] is the squared length from the center to neighbor i; rim_sq[i] joins
    neighbor i to neighbor (i + 1) mod m.
    """

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=3)
    spoke_sq: list[float]
    rim_sq: list[float]

    @model_validator(mode="after")
    def _check_legs(self) -> "VertexStar":
        if len(self.spoke_sq) != self.m or len(self.rim_sq) != self.m:
            raise ValueError(f"Star with m={self.m} needs {self.m} spokes and {self.m} rims")

        for leg in (*self.spoke_sq, *self.rim_sq):
            if not (math.isfinite(leg) and leg > 0):
                raise ValueError(f"Leg lengths must be finite and positive, got {leg!r}")

        # - Each rim triangle (center, i, i+1) must be non-degenerate
        for i in range(self.m):
            r1 = math.sqrt(self.spoke_sq[i])
            r2 = math.sqrt(self.spoke_sq[(i + 1) % self.m])
            c = math.sqrt(self.rim_sq[i])
            if not (c < r1 + r2 and r1 < r2 + c and r2 < r1 + c):
                raise ValueError(f"Rim leg {i} violates the strict triangle inequality with its spokes")
        return self


class RncSolution(BaseModel):
    """
    Solved neighbor coordinates and Gaussian curvature at the star center.
    """

    coords: list[Coord2]
    K: float
    residual_norm: float = Field(ge=0)
    iterations: int = Field(ge=0)


class SymmetricStarResult(BaseModel):
    """
    Closed-form solution of the symmetric 4-neighbor star on the unit sphere.
    """

    model_config = ConfigDict(frozen=True)

    xbar: float = Field(gt=0, lt=1)
    zbar: float
    xtilde_sq: float = Field(gt=0)
    K: float
    corrected: bool
