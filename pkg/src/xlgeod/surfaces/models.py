"""
Data models for the analytic surface catalog.
"""

import math
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from xlgeod.surfaces import vec
from xlgeod.surfaces.vec import Vec

# - Tolerance on |v| - 1 for unit vectors
UNIT_TOL = 1e-12


class Point3(BaseModel):
    """
    Cartesian point (or displacement) in E^3.
    """

    model_config = ConfigDict(frozen=True)

    x: float = Field(allow_inf_nan=False)
    y: float = Field(allow_inf_nan=False)
    z: float = Field(allow_inf_nan=False)

    @classmethod
    def from_tuple(cls, t: Vec) -> "Point3":
        return cls(x=t[0], y=t[1], z=t[2])

    def as_tuple(self) -> Vec:
        return (self.x, self.y, self.z)

    def __sub__(self, other: "Point3") -> "Point3":
        return Point3.from_tuple(vec.sub(self.as_tuple(), other.as_tuple()))

    def dot(self, other: "Point3 | UnitVec3") -> float:
        return vec.dot(self.as_tuple(), other.as_tuple())

    def norm_sq(self) -> float:
        return self.dot(self)


class UnitVec3(BaseModel):
    """
    Unit vector in E^3 (surface normal or tangent direction).
    """

    model_config = ConfigDict(frozen=True)

    x: float = Field(allow_inf_nan=False)
    y: float = Field(allow_inf_nan=False)
    z: float = Field(allow_inf_nan=False)

    @model_validator(mode="after")
    def _check_unit(self) -> "UnitVec3":
        n = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if abs(n - 1.0) > UNIT_TOL:
            raise ValueError(f"UnitVec3 norm is {n!r}, expected 1 within {UNIT_TOL}")
        return self

    @classmethod
    def normalized(cls, x: float, y: float, z: float) -> "UnitVec3":
        """Build a unit vector from arbitrary non-zero components."""
        t = vec.normalize((x, y, z))
        return cls(x=t[0], y=t[1], z=t[2])

    @classmethod
    def from_tuple(cls, t: Vec) -> "UnitVec3":
        return cls.normalized(*t)

    def as_tuple(self) -> Vec:
        return (self.x, self.y, self.z)

    def __neg__(self) -> "UnitVec3":
        return UnitVec3(x=-self.x, y=-self.y, z=-self.z)


class SurfaceParams(BaseModel):
    """
    Chart coordinates on a surface.

    sphere: (colatitude, longitude); cylinder: (azimuth, height); torus: (tube-circle angle
    around the axis, angle around the tube).
    """

    model_config = ConfigDict(frozen=True)

    u: float = Field(allow_inf_nan=False)
    v: float = Field(allow_inf_nan=False)


class Sphere(BaseModel):
    """
    Sphere of the given radius centered at the origin.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["sphere"] = "sphere"
    radius: float = Field(default=1.0, gt=0, allow_inf_nan=False)

    def embed_uv(self, u: float, v: float) -> Vec:
        r = self.radius
        su = math.sin(u)
        return (r * su * math.cos(v), r * su * math.sin(v), r * math.cos(u))

    def chart_tangents(self, u: float, v: float) -> tuple[Vec, Vec]:
        r = self.radius
        cu, su, cv, sv = math.cos(u), math.sin(u), math.cos(v), math.sin(v)
        return (r * cu * cv, r * cu * sv, -r * su), (-r * su * sv, r * su * cv, 0.0)

    def normal_at(self, x: Vec) -> Vec:
        return vec.normalize(x)

    def bend(self, x: Vec, w: Vec) -> float:
        """Quadratic form w . dN(x)[w] of the extended unit-normal field."""
        rho = vec.norm(x)
        nw = vec.dot(x, w) / rho
        return (vec.dot(w, w) - nw * nw) / rho

    def locate(self, x: Vec) -> tuple[float, float]:
        return math.atan2(math.hypot(x[0], x[1]), x[2]), math.atan2(x[1], x[0])

    def implicit_residual(self, x: Vec) -> float:
        return vec.norm(x) - self.radius


class Cylinder(BaseModel):
    """
    Infinite circular cylinder of the given radius around the z-axis.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["cylinder"] = "cylinder"
    radius: float = Field(default=1.0, gt=0, allow_inf_nan=False)

    def embed_uv(self, u: float, v: float) -> Vec:
        return (self.radius * math.cos(u), self.radius * math.sin(u), v)

    def chart_tangents(self, u: float, v: float) -> tuple[Vec, Vec]:
        return (-self.radius * math.sin(u), self.radius * math.cos(u), 0.0), (0.0, 0.0, 1.0)

    def normal_at(self, x: Vec) -> Vec:
        rho = math.hypot(x[0], x[1])
        return (x[0] / rho, x[1] / rho, 0.0)

    def bend(self, x: Vec, w: Vec) -> float:
        rho = math.hypot(x[0], x[1])
        nw = (x[0] * w[0] + x[1] * w[1]) / rho
        return (w[0] * w[0] + w[1] * w[1] - nw * nw) / rho

    def locate(self, x: Vec) -> tuple[float, float]:
        return math.atan2(x[1], x[0]), x[2]

    def implicit_residual(self, x: Vec) -> float:
        return math.hypot(x[0], x[1]) - self.radius


class Torus(BaseModel):
    """
    Torus of revolution around the z-axis: tube of radius `minor` around a core circle of
    radius `major`.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["torus"] = "torus"
    major: float = Field(default=2.0, gt=0, allow_inf_nan=False)
    minor: float = Field(default=1.0, gt=0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _check_radii(self) -> "Torus":
        if not self.major > self.minor:
            raise ValueError(f"Torus needs major > minor, got major={self.major}, minor={self.minor}")
        return self

    def embed_uv(self, u: float, v: float) -> Vec:
        rho = self.major + self.minor * math.cos(v)
        return (rho * math.cos(u), rho * math.sin(u), self.minor * math.sin(v))

    def chart_tangents(self, u: float, v: float) -> tuple[Vec, Vec]:
        rho = self.major + self.minor * math.cos(v)
        cu, su, cv, sv = math.cos(u), math.sin(u), math.cos(v), math.sin(v)
        b = self.minor
        return (-rho * su, rho * cu, 0.0), (-b * sv * cu, -b * sv * su, b * cv)

    def _core_offset(self, x: Vec) -> tuple[Vec, Vec, float]:
        # - (radial unit vector, offset from the nearest core-circle point, cylindrical radius)
        rho = math.hypot(x[0], x[1])
        e = (x[0] / rho, x[1] / rho, 0.0)
        return e, vec.sub(x, vec.scale(e, self.major)), rho

    def normal_at(self, x: Vec) -> Vec:
        _, c, _ = self._core_offset(x)
        return vec.normalize(c)

    def bend(self, x: Vec, w: Vec) -> float:
        e, c, rho = self._core_offset(x)
        cn = vec.norm(c)
        n = vec.scale(c, 1.0 / cn)
        ew = vec.dot(e, w)
        # - derivative of the offset field along w
        jw = vec.sub(w, vec.scale(vec.sub((w[0], w[1], 0.0), vec.scale(e, ew)), self.major / rho))
        return (vec.dot(w, jw) - vec.dot(n, w) * vec.dot(n, jw)) / cn

    def locate(self, x: Vec) -> tuple[float, float]:
        return math.atan2(x[1], x[0]), math.atan2(x[2], math.hypot(x[0], x[1]) - self.major)

    def implicit_residual(self, x: Vec) -> float:
        return math.hypot(math.hypot(x[0], x[1]) - self.major, x[2]) - self.minor


AnalyticSurface = Annotated[Union[Sphere, Cylinder, Torus], Field(discriminator="kind")]
