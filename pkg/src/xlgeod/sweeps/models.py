"""
Data models for convergence sweeps.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SweepRecord(BaseModel):
    """
    One point of a convergence study.

    scale is the quantity that shrinks or grows along the sweep (arc-length, xbar, or N).
    detail carries extra named columns for report tables.
    """

    model_config = ConfigDict(frozen=True)

    scale: float = Field(gt=0, allow_inf_nan=False)
    value: float
    error: float
    label: str = ""
    detail: dict[str, float] = Field(default_factory=dict)


class SlopeFit(BaseModel):
    """
    Least-squares line through (log scale, log |error|).
    """

    model_config = ConfigDict(frozen=True)

    slope: float
    intercept: float
    r_squared: float = Field(ge=0, le=1)
    n_points: int = Field(ge=3)


class ScanResult(BaseModel):
    """
    Records of a sweep in ascending scale order, with a slope fit when one is meaningful.
    """

    model_config = ConfigDict(frozen=True)

    records: list[SweepRecord]
    fit: SlopeFit | None = None

    @model_validator(mode="after")
    def _check_order(self) -> "ScanResult":
        scales = [r.scale for r in self.records]
        if any(b <= a for a, b in zip(scales, scales[1:])):
            raise ValueError("Sweep records must be strictly increasing in scale")
        return self

    @property
    def values(self) -> list[float]:
        return [r.value for r in self.records]

    @property
    def errors(self) -> list[float]:
        return [r.error for r in self.records]


class ScheduleKind(Enum):
    """
    How the lantern height parameter M follows N.
    """

    M_CONST = "m-const"
    M_EQ_N = "m-eq-n"
    M_EQ_N2 = "m-eq-n2"
    M_EQ_N3 = "m-eq-n3"


class Schedule(BaseModel):
    """
    Lantern refinement schedule, e.g. 'm-const:1' or 'm-eq-n3'.
    """

    model_config = ConfigDict(frozen=True)

    kind: ScheduleKind
    m: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_m(self) -> "Schedule":
        if (self.kind is ScheduleKind.M_CONST) != (self.m is not None):
            raise ValueError("m is required for m-const and only allowed there")
        return self

    @classmethod
    def parse(cls, text: str) -> "Schedule":
        """
        Parse a schedule tag.

        Args:
            text: 'm-const:M', 'm-eq-n', 'm-eq-n2' or 'm-eq-n3' (underscores accepted)

        Raises:
            ValueError: unknown tag or missing/bad M
        """
        name, _, arg = text.strip().lower().replace("_", "-").partition(":")
        kind = ScheduleKind(name)
        if kind is ScheduleKind.M_CONST:
            if not arg:
                raise ValueError("m-const needs a value, e.g. m-const:1")
            return cls(kind=kind, m=int(arg))
        if arg:
            raise ValueError(f"{name} takes no value")
        return cls(kind=kind)

    @property
    def convergent(self) -> bool:
        """Whether the total-area error vanishes as N grows (M / N^2 -> 0)."""
        return self.kind in (ScheduleKind.M_CONST, ScheduleKind.M_EQ_N)

    def m_for(self, N: int) -> int:
        match self.kind:
            case ScheduleKind.M_CONST:
                return self.m
            case ScheduleKind.M_EQ_N:
                return N
            case ScheduleKind.M_EQ_N2:
                return N**2
            case ScheduleKind.M_EQ_N3:
                return N**3

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.m}" if self.m is not None else self.kind.value
