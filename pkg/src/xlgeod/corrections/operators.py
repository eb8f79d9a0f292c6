"""
Curvature corrections turning a flat squared chord length into an estimate of the
intrinsic (surface geodesic) squared length.

All three operators add a non-negative fourth-order term to the chord, evaluated with the
chord on the right-hand side:

- via_k:            (K(v,v) L^2)^2 / 12
- via_normals:      ((n_p - n_q) . dx)^2 / 12
- via_normal_flow:  (dL^2/dn)^2 / 48
"""

import logging

from xlgeod.corrections.models import CorrectionMethod, CorrectionReport
from xlgeod.errors import CorrectionInputError
from xlgeod.surfaces import vec
from xlgeod.surfaces.catalog import chord_sq as surface_chord_sq
from xlgeod.surfaces.catalog import require_enabled
from xlgeod.surfaces.models import AnalyticSurface, Point3, SurfaceParams, UnitVec3

logger = logging.getLogger(__name__)

# - Relative tolerance between chord_sq and |delta_x|^2
CONSISTENCY_TOL = 1e-9


def _report(chord_sq: float, correction: float, method: CorrectionMethod) -> CorrectionReport:
    return CorrectionReport(
        chord_sq=chord_sq,
        correction=correction,
        corrected_sq=chord_sq + correction,
        method=method,
    )


def _require_chord(chord_sq: float) -> None:
    if chord_sq < 0:
        raise CorrectionInputError(f"Squared chord length must be non-negative, got {chord_sq}")


def correct_via_k(chord_sq: float, k_vv: float) -> CorrectionReport:
    """
    Correct a squared chord with the normal curvature along the chord direction.

    Args:
        chord_sq: Flat squared length L^2 (>= 0)
        k_vv: Normal curvature K(v,v); sign is irrelevant

    Returns:
        Report with correction (k_vv * chord_sq)^2 / 12

    Raises:
        CorrectionInputError: negative chord_sq
    """
    _require_chord(chord_sq)
    kl = k_vv * chord_sq
    return _report(chord_sq, kl * kl / 12.0, CorrectionMethod.VIA_K)


def correct_via_normals(chord_sq: float, n_p: UnitVec3, n_q: UnitVec3, delta_x: Point3) -> CorrectionReport:
    """
    Correct a squared chord with the unit normals at both endpoints.

    Args:
        chord_sq: Flat squared length L^2 (>= 0)
        n_p: Unit normal at p
        n_q: Unit normal at q
        delta_x: Displacement q - p

    Returns:
        Report with correction ((n_p - n_q) . delta_x)^2 / 12

    Raises:
        CorrectionInputError: negative chord_sq, or |delta_x|^2 disagrees with chord_sq
    """
    _require_chord(chord_sq)
    dx_sq = delta_x.norm_sq()
    if abs(dx_sq - chord_sq) > CONSISTENCY_TOL * max(1.0, chord_sq):
        raise CorrectionInputError(f"|delta_x|^2 = {dx_sq!r} is inconsistent with chord_sq = {chord_sq!r}")

    w = vec.dot(vec.sub(n_p.as_tuple(), n_q.as_tuple()), delta_x.as_tuple())
    return _report(chord_sq, w * w / 12.0, CorrectionMethod.VIA_NORMALS)


def normal_flow_derivative(n_p: UnitVec3, n_q: UnitVec3, delta_x: Point3) -> float:
    """
    Rate of change of the squared chord when both endpoints ride the unit-normal flow.

    With delta_x = q - p this is 2 (n_q - n_p) . delta_x; the sign drops out of the
    correction, which only uses its square.
    """
    return 2.0 * vec.dot(vec.sub(n_q.as_tuple(), n_p.as_tuple()), delta_x.as_tuple())


def correct_via_normal_flow(chord_sq: float, dLsq_dn: float) -> CorrectionReport:
    """
    Correct a squared chord with its derivative along the unit-normal flow.

    Args:
        chord_sq: Flat squared length L^2 (>= 0)
        dLsq_dn: Derivative of L^2 under normal flow

    Returns:
        Report with correction dLsq_dn^2 / 48
    """
    _require_chord(chord_sq)
    return _report(chord_sq, dLsq_dn * dLsq_dn / 48.0, CorrectionMethod.VIA_NORMAL_FLOW)


def correct_pair(
    surface: AnalyticSurface,
    p: SurfaceParams,
    q: SurfaceParams,
    method: CorrectionMethod = CorrectionMethod.VIA_NORMALS,
) -> CorrectionReport:
    """
    Corrected squared distance between two surface points.

    Builds chord, endpoint normals and displacement from the surface catalog and applies
    the requested operator. For via_k the normal curvature is taken at p along the chord
    projected onto the tangent plane.

    Args:
        surface: Catalog surface
        p: First endpoint
        q: Second endpoint
        method: Correction operator

    Returns:
        Correction report for the pair
    """
    require_enabled(surface)
    xp = surface.embed_uv(p.u, p.v)
    xq = surface.embed_uv(q.u, q.v)
    dx = vec.sub(xq, xp)
    c_sq = surface_chord_sq(surface, p, q)

    if c_sq == 0.0:
        return _report(0.0, 0.0, method)

    n_p = surface.normal_at(xp)
    n_q = surface.normal_at(xq)

    if method is CorrectionMethod.VIA_K:
        tangential = vec.sub(dx, vec.scale(n_p, vec.dot(dx, n_p)))
        v = vec.normalize(tangential)
        report = correct_via_k(c_sq, -surface.bend(xp, v))
    elif method is CorrectionMethod.VIA_NORMALS:
        report = correct_via_normals(
            c_sq, UnitVec3.from_tuple(n_p), UnitVec3.from_tuple(n_q), Point3.from_tuple(dx)
        )
    else:
        report = correct_via_normal_flow(
            c_sq, normal_flow_derivative(UnitVec3.from_tuple(n_p), UnitVec3.from_tuple(n_q), Point3.from_tuple(dx))
        )

    logger.debug("Corrected %s pair via %s: %.17g -> %.17g", surface.kind, method.value, c_sq, report.corrected_sq)
    return report
