"""
Schwarz lantern audit on the unit cylinder.

Vertices p = (0, 0), r = (2 pi/N, 0) on one ring and q = (pi/N, 1/(2M)) on the next ring
(azimuth, height) span one representative triangle; the lantern is 4NM congruent copies.
"""

import logging
import math

from joblib import Parallel, delayed

from xlgeod.corrections.operators import correct_via_normals
from xlgeod.lantern.models import LanternReport, LanternSpec, TriangleGeometry
from xlgeod.surfaces.catalog import embed, unit_normal
from xlgeod.surfaces.models import Cylinder, SurfaceParams

logger = logging.getLogger(__name__)

# - Total area of the unit cylinder of height 1
CYLINDER_AREA = 2.0 * math.pi


def _heron_sq(base_sq: float, side_sq: float) -> float:
    # - Squared area of an isosceles triangle with the given base and equal sides
    return base_sq * (4.0 * side_sq - base_sq) / 16.0


def _corrected_leg(surface: Cylinder, p: SurfaceParams, q: SurfaceParams, leg_sq: float) -> float:
    delta_x = embed(surface, q) - embed(surface, p)
    return correct_via_normals(leg_sq, unit_normal(surface, p), unit_normal(surface, q), delta_x).corrected_sq


def triangle_geometry(spec: LanternSpec) -> TriangleGeometry:
    """
    Flat and corrected legs and areas of one lantern triangle.

    Flat legs use the sine forms 4 sin^2(pi/N) and 4 sin^2(pi/2N) + 1/(4M^2), which keep full
    relative precision at large N. Corrections come from the endpoint normals of the
    cylinder, whose height components vanish, so only the azimuthal part of the p-q
    displacement contributes.

    Args:
        spec: Lantern parameters

    Returns:
        Triangle legs and areas
    """
    N, M = spec.N, spec.M
    cylinder = Cylinder(radius=1.0)
    p = SurfaceParams(u=0.0, v=0.0)
    r = SurfaceParams(u=2.0 * math.pi / N, v=0.0)
    q = SurfaceParams(u=math.pi / N, v=1.0 / (2 * M))

    Lpr_sq = 4.0 * math.sin(math.pi / N) ** 2
    Lpq_sq = 4.0 * math.sin(math.pi / (2 * N)) ** 2 + 1.0 / (4 * M * M)
    Lpr_sq_corr = _corrected_leg(cylinder, p, r, Lpr_sq)
    Lpq_sq_corr = _corrected_leg(cylinder, p, q, Lpq_sq)

    return TriangleGeometry(
        Lpr_sq=Lpr_sq,
        Lpq_sq=Lpq_sq,
        Lpr_sq_corr=Lpr_sq_corr,
        Lpq_sq_corr=Lpq_sq_corr,
        A_exact=math.pi / (2 * N * M),
        A_flat_sq=_heron_sq(Lpr_sq, Lpq_sq),
        A_corr_sq=_heron_sq(Lpr_sq_corr, Lpq_sq_corr),
    )


def flat_bounds(N: int, M: int) -> tuple[float, float]:
    """Bounds on S^2 - S_flat^2."""
    pi = math.pi
    upper = 4 * pi**4 / (3 * N**2)
    return upper - 4 * pi**6 * (2 + 45 * M**2) / (45 * N**4), upper


def corrected_bounds(N: int, M: int) -> tuple[float, float]:
    """Bounds on S^2 - S_corr^2."""
    pi = math.pi
    upper = 32 * pi**6 / (45 * N**4)
    return upper - 8 * pi**8 * (6 + 63 * M**2) / (189 * N**6), upper


def fractional_flat_bounds(N: int, M: int) -> tuple[float, float]:
    """Bounds on the per-triangle fractional error (A^2 - A_flat^2) / A^2."""
    pi = math.pi
    upper = pi**2 / (3 * N**2)
    return upper - pi**4 * (2 + 45 * M**2) / (45 * N**4), upper


def lantern_report(spec: LanternSpec) -> LanternReport:
    """
    Audit the flat and corrected lantern areas against the error bounds.

    Totals come from the representative triangle: S_flat = 4NM sqrt(A_flat^2) and likewise
    for the corrected area. A bound holds when lower < error < upper strictly.

    Args:
        spec: Lantern parameters

    Returns:
        Full lantern report
    """
    tri = triangle_geometry(spec)
    n_tri = spec.triangles
    S = CYLINDER_AREA

    S_flat = n_tri * math.sqrt(tri.A_flat_sq)
    S_corr = n_tri * math.sqrt(tri.A_corr_sq)
    err_flat = S * S - S_flat * S_flat
    err_corr = S * S - S_corr * S_corr

    bf = flat_bounds(spec.N, spec.M)
    bc = corrected_bounds(spec.N, spec.M)
    bfrac = fractional_flat_bounds(spec.N, spec.M)

    a_sq = tri.A_exact * tri.A_exact
    frac_flat = (a_sq - tri.A_flat_sq) / a_sq
    frac_corr = (a_sq - tri.A_corr_sq) / a_sq

    report = LanternReport(
        spec=spec,
        triangle=tri,
        S=S,
        S_flat=S_flat,
        S_corr=S_corr,
        err_flat=err_flat,
        err_corr=err_corr,
        bounds_flat=bf,
        bounds_corr=bc,
        holds_flat=bf[0] < err_flat < bf[1],
        holds_corr=bc[0] < err_corr < bc[1],
        frac_flat=frac_flat,
        frac_corr=frac_corr,
        frac_bounds_flat=bfrac,
        holds_frac_flat=bfrac[0] < frac_flat < bfrac[1],
    )

    if not (report.holds_flat and report.holds_corr):
        logger.warning(
            "Lantern N=%d M=%d violates a bound: flat=%s corrected=%s",
            spec.N,
            spec.M,
            report.holds_flat,
            report.holds_corr,
        )
    return report


def audit_grid(Ns: list[int], Ms: list[int], jobs: int = 1) -> list[LanternReport]:
    """
    Lantern reports over the grid Ns x Ms, sorted by (N, M).

    Args:
        Ns: Azimuthal parameters
        Ms: Height parameters
        jobs: Parallel workers (-1 = all CPUs)

    Returns:
        One report per grid point
    """
    specs = [LanternSpec(N=N, M=M) for N in Ns for M in Ms]
    logger.debug("Auditing %d lantern specs with %d job(s)", len(specs), jobs)

    if jobs == 1:
        reports = [lantern_report(s) for s in specs]
    else:
        reports = Parallel(n_jobs=jobs)(delayed(lantern_report)(s) for s in specs)

    return sorted(reports, key=lambda rep: (rep.spec.N, rep.spec.M))
