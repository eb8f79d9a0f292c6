"""
Data models for the Schwarz lantern audit.
"""

from pydantic import BaseModel, ConfigDict, Field


class LanternSpec(BaseModel):
    """
    Lantern on the unit cylinder of height 1: 2N azimuthal slices and 2M horizontal slices.
    """

    model_config = ConfigDict(frozen=True)

    N: int = Field(ge=3)
    M: int = Field(ge=1)

    @property
    def triangles(self) -> int:
        return 4 * self.N * self.M


class TriangleGeometry(BaseModel):
    """
    Legs and areas of one representative lantern triangle (all 4NM are congruent).

    Leg pr runs along a ring, leg pq climbs to the next ring. Areas are squared for the flat
    and corrected variants, as produced by the Heron-type formula.
    """

    model_config = ConfigDict(frozen=True)

    Lpr_sq: float = Field(gt=0)
    Lpq_sq: float = Field(gt=0)
    Lpr_sq_corr: float = Field(gt=0)
    Lpq_sq_corr: float = Field(gt=0)
    A_exact: float = Field(gt=0)
    A_flat_sq: float = Field(gt=0)
    A_corr_sq: float = Field(gt=0)


class LanternReport(BaseModel):
    """
    Total-area audit of a lantern against both error-bound displays.
    """

    model_config = ConfigDict(frozen=True)

    spec: LanternSpec
    triangle: TriangleGeometry
    S: float
    S_flat: float
    S_corr: float
    err_flat: float
    err_corr: float
    bounds_flat: tuple[float, float]
    bounds_corr: tuple[float, float]
    holds_flat: bool
    holds_corr: bool

    # - Per-triangle fractional errors (A^2 - A_approx^2) / A^2
    frac_flat: float
    frac_corr: float
    frac_bounds_flat: tuple[float, float]
    holds_frac_flat: bool
