"""
Geodesic shooting on catalog surfaces.

Geodesics are integrated in the embedding space: a unit-speed curve x(s) on the surface
satisfies x'' = -(x' . dN(x)[x']) N(x), where N is the surface's extended unit-normal field.
This avoids chart singularities such as the sphere poles. Fixed-step classical RK4.
"""

import logging
import math

import numpy as np
from scipy.optimize import least_squares

from xlgeod.config import get_config
from xlgeod.errors import ChartEscapeError, GeometryError
from xlgeod.surfaces import vec
from xlgeod.surfaces.catalog import require_enabled, require_tangent, tangent_frame
from xlgeod.surfaces.models import AnalyticSurface, SurfaceParams, Torus, UnitVec3
from xlgeod.surfaces.vec import Vec

logger = logging.getLogger(__name__)

# - Largest tolerated drift off the implicit surface after integration
DRIFT_TOL = 1e-6


def _accel(surface: AnalyticSurface, x: Vec, v: Vec) -> Vec:
    return vec.scale(surface.normal_at(x), -surface.bend(x, v))


def integrate(surface: AnalyticSurface, x0: Vec, v0: Vec, arclen: float) -> tuple[Vec, Vec]:
    """
    Integrate the geodesic equation from (x0, v0) over the given arc-length.

    Uses ceil(steps_per_unit * arclen) equal RK4 steps.

    Returns:
        (end point, end velocity)

    Raises:
        ChartEscapeError: state became non-finite or drifted off the surface
    """
    n_steps = max(1, math.ceil(get_config().surfaces.steps_per_unit * arclen))
    h = arclen / n_steps
    x, v = x0, v0

    for _ in range(n_steps):
        k1x, k1v = v, _accel(surface, x, v)
        x2, v2 = vec.add(x, vec.scale(k1x, h / 2)), vec.add(v, vec.scale(k1v, h / 2))
        k2x, k2v = v2, _accel(surface, x2, v2)
        x3, v3 = vec.add(x, vec.scale(k2x, h / 2)), vec.add(v, vec.scale(k2v, h / 2))
        k3x, k3v = v3, _accel(surface, x3, v3)
        x4, v4 = vec.add(x, vec.scale(k3x, h)), vec.add(v, vec.scale(k3v, h))
        k4x, k4v = v4, _accel(surface, x4, v4)

        x = (
            x[0] + h / 6 * (k1x[0] + 2 * k2x[0] + 2 * k3x[0] + k4x[0]),
            x[1] + h / 6 * (k1x[1] + 2 * k2x[1] + 2 * k3x[1] + k4x[1]),
            x[2] + h / 6 * (k1x[2] + 2 * k2x[2] + 2 * k3x[2] + k4x[2]),
        )
        v = (
            v[0] + h / 6 * (k1v[0] + 2 * k2v[0] + 2 * k3v[0] + k4v[0]),
            v[1] + h / 6 * (k1v[1] + 2 * k2v[1] + 2 * k3v[1] + k4v[1]),
            v[2] + h / 6 * (k1v[2] + 2 * k2v[2] + 2 * k3v[2] + k4v[2]),
        )

    if not all(math.isfinite(c) for c in x) or abs(surface.implicit_residual(x)) > DRIFT_TOL:
        raise ChartEscapeError(f"Geodesic left the {surface.kind} after arc-length {arclen}")

    logger.debug("Shot %s geodesic: arclen=%.6g, steps=%d", surface.kind, arclen, n_steps)
    return x, v


def geodesic_shoot(
    surface: AnalyticSurface, p: SurfaceParams, direction: UnitVec3, arclen: float
) -> SurfaceParams:
    """
    Endpoint of the unit-speed surface geodesic leaving p along a tangent direction.

    Args:
        surface: Catalog surface
        p: Start point
        direction: Unit tangent at p
        arclen: Arc-length to travel (>= 0)

    Returns:
        Chart coordinates of the endpoint (angles in (-pi, pi])

    Raises:
        GeometryError: negative arc-length
        NotTangentError: direction not tangent at p
        ChartEscapeError: integration failure
    """
    require_enabled(surface)
    if arclen < 0:
        raise GeometryError(f"Arc-length must be non-negative, got {arclen}")

    x0 = require_tangent(surface, p, direction)
    if arclen == 0:
        return p

    x, _ = integrate(surface, x0, direction.as_tuple(), arclen)
    u, v = surface.locate(x)
    return SurfaceParams(u=u, v=v)


def torus_distance(surface: Torus, p: SurfaceParams, q: SurfaceParams) -> float:
    """
    Intrinsic distance on the torus by shooting.

    Solves for launch angle and arc-length so that the shot endpoint matches q, starting
    from the tangent projection of the chord.

    Raises:
        GeometryError: shooting did not reach q within the configured tolerance
    """
    require_enabled(surface)
    xp = surface.embed_uv(p.u, p.v)
    xq = surface.embed_uv(q.u, q.v)
    chord = vec.sub(xq, xp)
    chord_len = vec.norm(chord)
    if chord_len == 0.0:
        return 0.0

    e1, e2 = tangent_frame(surface, p)
    angle0 = math.atan2(vec.dot(chord, e2), vec.dot(chord, e1))

    def mismatch(z: np.ndarray) -> np.ndarray:
        angle, length = float(z[0]), float(z[1])
        d = vec.add(vec.scale(e1, math.cos(angle)), vec.scale(e2, math.sin(angle)))
        end, _ = integrate(surface, xp, d, length)
        return np.asarray(vec.sub(end, xq))

    sol = least_squares(
        mismatch,
        x0=np.array([angle0, chord_len]),
        bounds=([-np.inf, 0.0], [np.inf, np.inf]),
        xtol=1e-14,
        ftol=1e-14,
        gtol=1e-14,
    )
    miss = float(np.max(np.abs(sol.fun)))
    tol = get_config().surfaces.shooting_tol
    if miss > tol:
        raise GeometryError(f"Torus shooting missed target by {miss:.3e} > {tol:.1e}")

    logger.debug("Torus shooting converged: length=%.12g, evaluations=%d", sol.x[1], sol.nfev)
    return float(sol.x[1])
