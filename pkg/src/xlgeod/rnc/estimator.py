"""
Gaussian curvature from leg lengths via Riemann normal coordinates.

In two dimensions the squared geodesic length between neighbors i and j of a star
centered at the origin of normal coordinates is

    L^2_ij = |x_i - x_j|^2 - (K / 3) (x_i x x_j)^2 + O(L^5)

with x_i x x_j = a_i b_j - b_i a_j. A star with m neighbors has m spoke and m rim legs,
which fix the 2m - 1 coordinates (after pinning neighbor 0 to the positive first axis)
together with K.
"""

import logging
import math

import numpy as np

from xlgeod.config import get_config
from xlgeod.corrections.models import CorrectionMethod
from xlgeod.corrections.operators import correct_pair
from xlgeod.errors import DegenerateStarError, GeometryError, StarSolveError
from xlgeod.rnc.models import Coord2, RncSolution, SymmetricStarResult, VertexStar
from xlgeod.surfaces.catalog import chord_sq
from xlgeod.surfaces.models import Sphere, SurfaceParams

logger = logging.getLogger(__name__)


def rnc_leg_sq(xi: Coord2, xj: Coord2, K: float) -> float:
    """
    Squared geodesic length between two points given in normal coordinates.

    Args:
        xi: First point
        xj: Second point
        K: Gaussian curvature at the origin

    Returns:
        |xi - xj|^2 - (K/3) (xi x xj)^2
    """
    da = xi.a - xj.a
    db = xi.b - xj.b
    c = xi.cross(xj)
    return da * da + db * db - (K / 3.0) * c * c


def _require_xbar(xbar: float) -> None:
    if not (0.0 < xbar < 1.0):
        raise GeometryError(f"xbar must lie in (0, 1), got {xbar}")


def solve_symmetric_sphere_star(xbar: float, corrected: bool) -> SymmetricStarResult:
    """
    Closed-form curvature of the symmetric 4-neighbor star around the pole of the unit sphere.

    Neighbors sit at (+-xbar, 0, zbar) and (0, +-xbar, zbar). In normal coordinates they are
    (+-xt, 0), (0, +-xt), so the spoke fixes xt^2 and the rim fixes K:

        uncorrected: xt^2 = L_pa,                 K = 3 (2 xt^2 - 2 xbar^2) / xt^4
        corrected:   xt^2 = L_pa + L_pa^2 / 12,   K = 3 (2 xt^2 - (2 xbar^2 + (2 xbar^2)^2 / 12)) / xt^4

    with L_pa = xbar^2 + (1 - zbar)^2. The differences are rearranged with
    1 - zbar = xbar^2 / (1 + zbar) so that small xbar does not cancel catastrophically;
    the uncorrected branch then reduces to 6 d^2 / (xbar^2 + d^2)^2 = 3/2.

    Args:
        xbar: Horizontal offset of the neighbors, in (0, 1)
        corrected: Apply the curvature correction to spoke and rim legs

    Returns:
        Symmetric star result

    Raises:
        GeometryError: xbar outside (0, 1)
    """
    _require_xbar(xbar)
    xsq = xbar * xbar
    zbar = math.sqrt(1.0 - xsq)
    d = xsq / (1.0 + zbar)
    spoke = xsq + d * d

    if corrected:
        xt_sq = spoke + spoke * spoke / 12.0
        # - 2 xt^2 - rim_corr, expanded
        excess = 2.0 * d * d + (2.0 * xsq * d * d + d**4 - xsq * xsq) / 6.0
    else:
        xt_sq = spoke
        excess = 2.0 * d * d

    K = 3.0 * excess / (xt_sq * xt_sq)
    return SymmetricStarResult(xbar=xbar, zbar=zbar, xtilde_sq=xt_sq, K=K, corrected=corrected)


def _flat_layout(star: VertexStar) -> np.ndarray:
    # - Radii from spokes, opening angles from the law of cosines
    z = np.zeros(2 * star.m)
    theta = 0.0
    for i in range(star.m):
        r = math.sqrt(star.spoke_sq[i])
        if i == 0:
            z[0] = r
        else:
            z[2 * i - 1] = r * math.cos(theta)
            z[2 * i] = r * math.sin(theta)
        r_next = math.sqrt(star.spoke_sq[(i + 1) % star.m])
        cos_open = (star.spoke_sq[i] + star.spoke_sq[(i + 1) % star.m] - star.rim_sq[i]) / (2.0 * r * r_next)
        theta += math.acos(min(1.0, max(-1.0, cos_open)))
    return z


def _unpack(z: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray, float]:
    a = np.empty(m)
    b = np.empty(m)
    a[0], b[0] = z[0], 0.0
    a[1:] = z[1 : 2 * m - 1 : 2]
    b[1:] = z[2 : 2 * m - 1 : 2]
    return a, b, float(z[-1])


def _residual_and_jacobian(z: np.ndarray, star: VertexStar) -> tuple[np.ndarray, np.ndarray]:
    m = star.m
    a, b, K = _unpack(z, m)
    F = np.empty(2 * m)
    J = np.zeros((2 * m, 2 * m))

    def cols(i: int) -> tuple[int | None, int | None]:
        # - Column indices of (a_i, b_i); b_0 is pinned by the gauge
        return (0, None) if i == 0 else (2 * i - 1, 2 * i)

    for i in range(m):
        ca, cb = cols(i)
        F[i] = a[i] * a[i] + b[i] * b[i] - star.spoke_sq[i]
        J[i, ca] = 2.0 * a[i]
        if cb is not None:
            J[i, cb] = 2.0 * b[i]

    for i in range(m):
        j = (i + 1) % m
        row = m + i
        da, db = a[i] - a[j], b[i] - b[j]
        c = a[i] * b[j] - b[i] * a[j]
        F[row] = da * da + db * db - (K / 3.0) * c * c - star.rim_sq[i]

        kc = 2.0 * K * c / 3.0
        cia, cib = cols(i)
        cja, cjb = cols(j)
        J[row, cia] += 2.0 * da - kc * b[j]
        J[row, cja] += -2.0 * da + kc * b[i]
        if cib is not None:
            J[row, cib] += 2.0 * db + kc * a[j]
        if cjb is not None:
            J[row, cjb] += -2.0 * db - kc * a[i]
        J[row, -1] = -c * c / 3.0

    return F, J


def solve_star_newton(star: VertexStar, K_init: float = 0.0, tol: float | None = None) -> RncSolution:
    """
    Solve a vertex star for neighbor normal coordinates and the curvature at its center.

    Newton iteration on the square system of m spoke and m rim equations, started from the
    flat layout. Gauge: neighbor 0 on the positive first axis; the mirror image with
    neighbor 1 in the lower half-plane is reflected away.

    Args:
        star: Leg lengths, neighbors counterclockwise
        K_init: Starting curvature
        tol: Max absolute equation residual (defaults to configured newton_tol)

    Returns:
        Solution with coordinates, K, residual and iteration count

    Raises:
        DegenerateStarError: singular Jacobian
        StarSolveError: no convergence within the iteration limit
    """
    solver = get_config().solver
    tol = solver.newton_tol if tol is None else tol
    m = star.m

    z = _flat_layout(star)
    z[-1] = K_init
    residual = math.inf

    for it in range(1, solver.newton_max_iter + 1):
        F, J = _residual_and_jacobian(z, star)
        try:
            step = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError as e:
            raise DegenerateStarError(f"Singular star Jacobian: {e}", float(np.max(np.abs(F))), it) from e

        z = z + step
        F, _ = _residual_and_jacobian(z, star)
        residual = float(np.max(np.abs(F)))
        step_size = float(np.max(np.abs(step)))
        logger.debug("Newton iteration %d: residual=%.3e, step=%.3e, K=%.15g", it, residual, step_size, z[-1])

        if not np.all(np.isfinite(z)):
            raise StarSolveError("Newton iterate became non-finite", residual, it)

        if residual <= tol and step_size <= solver.newton_step_tol:
            a, b, K = _unpack(z, m)
            # - Rotate by pi if neighbor 0 landed on the negative axis
            if a[0] < 0:
                a, b = -a, -b
            if b[1] < 0:
                b = -b
            coords = [Coord2(a=float(ai), b=float(bi)) for ai, bi in zip(a, b)]
            return RncSolution(coords=coords, K=K, residual_norm=residual, iterations=it)

    raise StarSolveError("Newton star solve did not converge", residual, solver.newton_max_iter)


def sphere_star(xbar: float, corrected: bool, valence: int = 4) -> VertexStar:
    """
    Regular star around the north pole of the unit sphere.

    Neighbor i sits at colatitude asin(xbar) and longitude 2 pi i / valence. Legs are chord
    lengths squared, optionally corrected from the endpoint normals.

    Args:
        xbar: Distance of the neighbors from the polar axis, in (0, 1)
        corrected: Apply the normal-based correction to every leg
        valence: Number of neighbors (>= 3)

    Returns:
        Vertex star with spoke and rim legs
    """
    _require_xbar(xbar)
    sphere = Sphere(radius=1.0)
    pole = SurfaceParams(u=0.0, v=0.0)
    colat = math.asin(xbar)
    ring = [SurfaceParams(u=colat, v=2.0 * math.pi * i / valence) for i in range(valence)]

    def leg(p: SurfaceParams, q: SurfaceParams) -> float:
        if corrected:
            return correct_pair(sphere, p, q, CorrectionMethod.VIA_NORMALS).corrected_sq
        return chord_sq(sphere, p, q)

    return VertexStar(
        m=valence,
        spoke_sq=[leg(pole, q) for q in ring],
        rim_sq=[leg(ring[i], ring[(i + 1) % valence]) for i in range(valence)],
    )
