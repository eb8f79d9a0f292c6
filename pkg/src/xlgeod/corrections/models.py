"""
Data models for arc-length corrections.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CorrectionMethod(Enum):
    """
    Which geometric input produced a correction.
    """

    VIA_K = "via_k"
    VIA_NORMALS = "via_normals"
    VIA_NORMAL_FLOW = "via_normal_flow"


class CorrectionReport(BaseModel):
    """
    Flat squared chord length together with its curvature-corrected estimate of the
    intrinsic squared length.
    """

    model_config = ConfigDict(frozen=True)

    chord_sq: float = Field(ge=0, allow_inf_nan=False)
    correction: float = Field(ge=0, allow_inf_nan=False)
    corrected_sq: float = Field(allow_inf_nan=False)
    method: CorrectionMethod

    @model_validator(mode="after")
    def _check_sum(self) -> "CorrectionReport":
        if self.corrected_sq != self.chord_sq + self.correction:
            raise ValueError("corrected_sq must equal chord_sq + correction")
        return self
