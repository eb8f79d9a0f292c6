"""
Analytic surface catalog: embeddings, normals, normal curvature and distance oracles.
"""

from xlgeod.surfaces.catalog import (
    chord_sq,
    embed,
    intrinsic_dist,
    normal_curvature,
    tangent_direction,
    tangent_frame,
    unit_normal,
)
from xlgeod.surfaces.geodesics import geodesic_shoot, torus_distance
from xlgeod.surfaces.models import (
    AnalyticSurface,
    Cylinder,
    Point3,
    Sphere,
    SurfaceParams,
    Torus,
    UnitVec3,
)

__all__ = [
    "AnalyticSurface",
    "Cylinder",
    "Point3",
    "Sphere",
    "SurfaceParams",
    "Torus",
    "UnitVec3",
    "chord_sq",
    "embed",
    "geodesic_shoot",
    "intrinsic_dist",
    "normal_curvature",
    "tangent_direction",
    "tangent_frame",
    "torus_distance",
    "unit_normal",
]
