"""
Ground-truth operations on the analytic surface catalog.

Embeddings, unit normals, normal curvature K(v,v), and chordal / intrinsic distance
oracles for the sphere, the cylinder and (when enabled) the torus.
"""

import logging
import math

from xlgeod.config import get_config
from xlgeod.errors import FeatureDisabledError, NonUniqueGeodesicError, NotTangentError
from xlgeod.surfaces import vec
from xlgeod.surfaces.models import AnalyticSurface, Point3, SurfaceParams, Torus, UnitVec3
from xlgeod.surfaces.vec import Vec
from xlgeod.utils import wrap_angle

logger = logging.getLogger(__name__)

# - Pairs closer than this to a half turn have two competing geodesics
HALF_TURN_TOL = 1e-12


def require_enabled(surface: AnalyticSurface) -> None:
    """
    Reject surfaces switched off in configuration.

    Raises:
        FeatureDisabledError: Torus used while XLGEOD_ENABLE_TORUS is false
    """
    if isinstance(surface, Torus) and not get_config().surfaces.enable_torus:
        raise FeatureDisabledError("Torus support is disabled (set XLGEOD_ENABLE_TORUS=true)")


def embed(surface: AnalyticSurface, p: SurfaceParams) -> Point3:
    """
    Map chart coordinates to the Cartesian point on the surface.

    Args:
        surface: Catalog surface
        p: Chart coordinates

    Returns:
        Point on the surface
    """
    require_enabled(surface)
    return Point3.from_tuple(surface.embed_uv(p.u, p.v))


def unit_normal(surface: AnalyticSurface, p: SurfaceParams) -> UnitVec3:
    """
    Outward unit normal at p (outward from the tube for the torus).

    For a unit cylinder the normal at (x, y, z) is (x, y, 0).
    """
    require_enabled(surface)
    return UnitVec3.from_tuple(surface.normal_at(surface.embed_uv(p.u, p.v)))


def tangent_frame(surface: AnalyticSurface, p: SurfaceParams) -> tuple[Vec, Vec]:
    """
    Orthonormal tangent frame (e1, e2) at p with e1 along the first chart direction and
    e2 = n x e1.

    Cylinder: e1 circumferential, e2 axial. Sphere: e1 along the meridian (southward),
    which stays well defined at the poles.
    """
    require_enabled(surface)
    tu, _ = surface.chart_tangents(p.u, p.v)
    n = surface.normal_at(surface.embed_uv(p.u, p.v))
    e1 = vec.normalize(tu)
    return e1, vec.cross(n, e1)


def tangent_direction(surface: AnalyticSurface, p: SurfaceParams, angle: float) -> UnitVec3:
    """
    Unit tangent at p making the given angle with the first frame direction.

    Args:
        surface: Catalog surface
        p: Base point
        angle: Angle in radians from e1 towards e2

    Returns:
        Unit tangent cos(angle) e1 + sin(angle) e2
    """
    e1, e2 = tangent_frame(surface, p)
    return UnitVec3.from_tuple(vec.add(vec.scale(e1, math.cos(angle)), vec.scale(e2, math.sin(angle))))


def require_tangent(surface: AnalyticSurface, p: SurfaceParams, direction: UnitVec3) -> Vec:
    """
    Check that a direction lies in the tangent plane at p.

    Returns:
        Embedded point of p

    Raises:
        NotTangentError: |direction . n| exceeds the configured tangency tolerance
    """
    x = surface.embed_uv(p.u, p.v)
    residual = abs(vec.dot(direction.as_tuple(), surface.normal_at(x)))
    tol = get_config().surfaces.tangency_tol
    if residual > tol:
        raise NotTangentError(f"Direction is not tangent at ({p.u}, {p.v}): |d.n| = {residual:.3e} > {tol:.1e}")
    return x


def normal_curvature(surface: AnalyticSurface, p: SurfaceParams, direction: UnitVec3) -> float:
    """
    Normal curvature K(v,v) for a unit tangent v at p.

    Sign convention: K(v,v) = -(dn/ds . v) along v with the outward normal, so the unit
    sphere gives -1 in every direction. Corrections only use K(v,v) squared.

    Args:
        surface: Catalog surface
        p: Base point
        direction: Unit tangent v

    Returns:
        K(v,v) in inverse length units

    Raises:
        NotTangentError: direction is not tangent at p
    """
    require_enabled(surface)
    x = require_tangent(surface, p, direction)
    return -surface.bend(x, direction.as_tuple())


def chord_sq(surface: AnalyticSurface, p: SurfaceParams, q: SurfaceParams) -> float:
    """
    Squared Euclidean distance between the embedded points (flat ambient arc-length squared).
    """
    require_enabled(surface)
    d = vec.sub(surface.embed_uv(q.u, q.v), surface.embed_uv(p.u, p.v))
    return vec.dot(d, d)


def intrinsic_dist(surface: AnalyticSurface, p: SurfaceParams, q: SurfaceParams) -> float:
    """
    Length of the surface geodesic from p to q.

    Closed forms for the sphere (radius x central angle) and the cylinder (unrolled
    straight line); the torus is served by the shooting oracle.

    Raises:
        NonUniqueGeodesicError: antipodal sphere points, or cylinder points half a turn apart
    """
    require_enabled(surface)

    if surface.kind == "sphere":
        a = surface.embed_uv(p.u, p.v)
        b = surface.embed_uv(q.u, q.v)
        angle = math.atan2(vec.norm(vec.cross(a, b)), vec.dot(a, b))
        if math.pi - angle <= HALF_TURN_TOL:
            raise NonUniqueGeodesicError("Antipodal sphere points have no unique geodesic")
        return surface.radius * angle

    if surface.kind == "cylinder":
        dtheta = wrap_angle(q.u - p.u)
        if math.pi - abs(dtheta) <= HALF_TURN_TOL:
            raise NonUniqueGeodesicError("Cylinder points half a turn apart have two equal geodesics")
        return math.hypot(surface.radius * dtheta, q.v - p.v)

    from xlgeod.surfaces.geodesics import torus_distance

    return torus_distance(surface, p, q)
