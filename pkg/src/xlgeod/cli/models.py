"""
Data models for the command-line frontend.
"""

from pathlib import Path
from typing import Annotated, Any, Literal

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, model_validator

from xlgeod.sweeps.models import Schedule

DEFAULT_XBARS = [0.4, 0.2, 0.1, 0.05]


def _distinct(values: list[float]) -> list[float]:
    if len(set(values)) != len(values):
        raise ValueError(f"values must be distinct, got {values}")
    return values


def _nonzero_jobs(jobs: int) -> int:
    if jobs == 0:
        raise ValueError("jobs must be a worker count, or negative to count back from all CPUs (-1 = all)")
    return jobs


ScaleLadder = Annotated[
    list[Annotated[float, Field(gt=0, allow_inf_nan=False)]], Field(min_length=1), AfterValidator(_distinct)
]
XbarLadder = Annotated[list[Annotated[float, Field(gt=0, lt=1)]], AfterValidator(_distinct)]


class Command(BaseModel):
    """
    Validated invocation of one subcommand.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    format: Literal["csv", "json"] = "csv"
    output: Path | None = None
    verbose: bool = False

    def params(self) -> dict[str, Any]:
        """Study parameters, without output plumbing."""
        return self.model_dump(mode="json", exclude={"name", "format", "output", "verbose"})


class VerifyTheoremCommand(Command):
    name: Literal["verify-theorem"] = "verify-theorem"
    surface: Literal["sphere", "cylinder"]
    radius: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    direction_angle: float = Field(default=0.0, allow_inf_nan=False)
    scales: ScaleLadder


class SphereStarCommand(Command):
    name: Literal["sphere-star"] = "sphere-star"
    xbars: Annotated[XbarLadder, Field(min_length=1)]
    corrected: bool = False


class LanternCommand(Command):
    name: Literal["lantern"] = "lantern"
    N: int = Field(ge=3)
    M: int = Field(ge=1)
    corrected: bool = False


class SweepCommand(Command):
    name: Literal["sweep"] = "sweep"
    study: Literal["lantern-schedule", "sphere-star"]
    schedule: Schedule | None = None
    ns: list[Annotated[int, Field(ge=3)]] = Field(default_factory=list)
    xbars: XbarLadder = Field(default_factory=lambda: list(DEFAULT_XBARS))
    valence: int = Field(default=4, ge=3)
    corrected: bool = False
    jobs: Annotated[int, AfterValidator(_nonzero_jobs)] = 1

    @model_validator(mode="after")
    def _check_study(self) -> "SweepCommand":
        if self.study == "lantern-schedule":
            if self.schedule is None or not self.ns:
                raise ValueError("lantern-schedule needs --schedule and --ns")
            if any(b <= a for a, b in zip(self.ns, self.ns[1:])):
                raise ValueError("--ns must be strictly ascending")
        return self


class ReportTable(BaseModel):
    """
    Machine-readable study output: header, rows, metadata and named acceptance checks.
    """

    header: list[str]
    rows: list[list[bool | int | float | str]]
    metadata: dict[str, Any] = Field(default_factory=dict)
    checks: dict[str, bool] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_arity(self) -> "ReportTable":
        for row in self.rows:
            if len(row) != len(self.header):
                raise ValueError(f"Row {row!r} does not match header of {len(self.header)} columns")
        return self

    @property
    def passed(self) -> bool:
        return all(self.checks.values())
