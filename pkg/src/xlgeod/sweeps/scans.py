"""
Convergence-study harness: remainder scans, curvature-estimate sweeps, lantern schedules and
log-log slope fitting.
"""

import logging
import math

import numpy as np
from joblib import Parallel, delayed

from xlgeod.config import get_config
from xlgeod.corrections.operators import correct_via_k
from xlgeod.errors import NonUniqueGeodesicError, SweepError
from xlgeod.lantern.audit import lantern_report
from xlgeod.lantern.models import LanternSpec
from xlgeod.rnc.estimator import solve_star_newton, solve_symmetric_sphere_star, sphere_star
from xlgeod.surfaces import vec
from xlgeod.surfaces.catalog import chord_sq, intrinsic_dist, normal_curvature
from xlgeod.surfaces.geodesics import geodesic_shoot
from xlgeod.surfaces.models import AnalyticSurface, SurfaceParams, UnitVec3
from xlgeod.sweeps.models import ScanResult, Schedule, SlopeFit, SweepRecord

logger = logging.getLogger(__name__)

# - Curvature the uncorrected 4-star converges to on the unit sphere
UNCORRECTED_STAR_K = 1.5

# - Shot length and endpoint distance must agree this closely for a unique geodesic
INJECTIVITY_TOL = 1e-6


def _floor(error: float, reference: float) -> float:
    # - Differences at round-off level of the reference are reported as exact zeros
    if abs(error) <= get_config().sweeps.roundoff_floor * abs(reference):
        return 0.0
    return error


def _fittable(records: list[SweepRecord]) -> bool:
    errors = [r.error for r in records]
    return len(errors) >= 3 and (all(e > 0 for e in errors) or all(e < 0 for e in errors))


def _scan(records: list[SweepRecord], fit: bool = True) -> ScanResult:
    records = sorted(records, key=lambda r: r.scale)
    return ScanResult(records=records, fit=slope_fit(records) if fit and _fittable(records) else None)


def slope_fit(records: list[SweepRecord]) -> SlopeFit:
    """
    Fit log |error| = slope * log scale + intercept by least squares.

    Args:
        records: At least 3 records with non-zero errors of one sign

    Returns:
        Slope, intercept and coefficient of determination

    Raises:
        SweepError: too few records, zero or mixed-sign errors
    """
    if len(records) < 3:
        raise SweepError(f"Slope fit needs at least 3 records, got {len(records)}")
    if not _fittable(records):
        raise SweepError("Slope fit needs non-zero errors of one sign")

    x = np.log([r.scale for r in records])
    y = np.log(np.abs([r.error for r in records]))
    slope, intercept = np.polyfit(x, y, 1)

    ss_res = float(np.sum((y - (slope * x + intercept)) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else min(1.0, max(0.0, 1.0 - ss_res / ss_tot))

    logger.debug("Slope fit over %d points: slope=%.6f, r2=%.8f", len(records), slope, r_squared)
    return SlopeFit(slope=float(slope), intercept=float(intercept), r_squared=r_squared, n_points=len(records))


def remainder_scan(
    surface: AnalyticSurface, p: SurfaceParams, direction: UnitVec3, scales: list[float]
) -> ScanResult:
    """
    Truncation error of the curvature-corrected chord along a geodesic ladder.

    For every scale the endpoint is shot along `direction` with that arc-length; the error is
    intrinsic^2 - chord^2 - (K(v,v) chord^2)^2 / 12 with K(v,v) taken at p along the chord
    projected onto the tangent plane. Intrinsic distances come from the closed-form oracle.

    Args:
        surface: Sphere or cylinder
        p: Base point
        direction: Unit tangent at p
        scales: Arc-lengths

    Returns:
        Records per scale and a slope fit when the errors are one-signed

    Raises:
        NonUniqueGeodesicError: a scale reaches past the injectivity radius, so the shot
            endpoint is closer than the scale along another geodesic
    """
    n_p = surface.normal_at(surface.embed_uv(p.u, p.v))
    xp = surface.embed_uv(p.u, p.v)
    records = []

    for s in scales:
        q = geodesic_shoot(surface, p, direction, s)
        exact = intrinsic_dist(surface, p, q)
        if abs(exact - s) > INJECTIVITY_TOL * max(1.0, s):
            raise NonUniqueGeodesicError(
                f"Scale {s} on the {surface.kind} is past the injectivity radius: "
                f"the endpoint lies at intrinsic distance {exact:.12g}"
            )
        exact_sq = exact * exact
        c_sq = chord_sq(surface, p, q)

        chord = vec.sub(surface.embed_uv(q.u, q.v), xp)
        v = UnitVec3.from_tuple(vec.sub(chord, vec.scale(n_p, vec.dot(chord, n_p))))
        k_vv = normal_curvature(surface, p, v)

        corrected = correct_via_k(c_sq, k_vv).corrected_sq
        records.append(
            SweepRecord(
                scale=s,
                value=corrected,
                error=_floor(exact_sq - corrected, exact_sq),
                label=surface.kind,
                detail={"chord_sq": c_sq, "intrinsic_sq": exact_sq, "k_vv": k_vv},
            )
        )

    return _scan(records)


def sphere_star_sweep(xbars: list[float], corrected: bool) -> ScanResult:
    """
    Closed-form 4-star curvature on the unit sphere over a ladder of xbar.

    Error is K - 3/2 for uncorrected legs and K - 1 for corrected legs.
    """
    target = 1.0 if corrected else UNCORRECTED_STAR_K
    records = []
    for xbar in xbars:
        res = solve_symmetric_sphere_star(xbar, corrected)
        records.append(
            SweepRecord(
                scale=xbar,
                value=res.K,
                error=_floor(res.K - target, target),
                label="corrected" if corrected else "flat",
                detail={"zbar": res.zbar, "xtilde_sq": res.xtilde_sq},
            )
        )
    return _scan(records)


def regular_star_limit(valence: int, corrected: bool) -> float:
    """
    Curvature a regular star on the unit sphere tends to as it shrinks.

    Corrected legs give the true value 1; flat legs give 3 / (2 (1 + cos(2 pi / m))).
    """
    if corrected:
        return 1.0
    return 3.0 / (2.0 * (1.0 + math.cos(2.0 * math.pi / valence)))


def valence_star_sweep(valence: int, xbars: list[float], corrected: bool) -> ScanResult:
    """
    Newton-solved curvature of regular m-stars on the unit sphere over a ladder of xbar.

    Error is K minus the limit returned by `regular_star_limit`.
    """
    target = regular_star_limit(valence, corrected)
    records = []
    for xbar in xbars:
        sol = solve_star_newton(sphere_star(xbar, corrected, valence))
        records.append(
            SweepRecord(
                scale=xbar,
                value=sol.K,
                error=_floor(sol.K - target, target),
                label=f"m={valence}",
                detail={"iterations": float(sol.iterations), "residual_norm": sol.residual_norm},
            )
        )
    return _scan(records)


def _lantern_record(N: int, M: int, corrected: bool) -> SweepRecord:
    rep = lantern_report(LanternSpec(N=N, M=M))
    lower, upper = rep.bounds_corr if corrected else rep.bounds_flat
    holds = rep.holds_corr if corrected else rep.holds_flat
    return SweepRecord(
        scale=float(N),
        value=rep.S_corr if corrected else rep.S_flat,
        error=rep.err_corr if corrected else rep.err_flat,
        label="corrected" if corrected else "flat",
        detail={"M": float(M), "lower": lower, "upper": upper, "holds": float(holds)},
    )


def lantern_schedule_sweep(
    schedule: Schedule, Ns: list[int], corrected: bool, jobs: int = 1
) -> ScanResult:
    """
    Lantern total-area error along a refinement schedule.

    Records use scale = N, so a fitted slope is the convergence order in N. Slopes are only
    fitted for schedules whose error vanishes (M constant or M = N).

    Args:
        schedule: How M follows N
        Ns: Strictly ascending N values
        corrected: Audit the corrected area instead of the flat one
        jobs: Parallel workers (-1 = all CPUs)

    Raises:
        SweepError: Ns not strictly ascending
    """
    if any(b <= a for a, b in zip(Ns, Ns[1:])):
        raise SweepError(f"Ns must be strictly ascending, got {Ns}")

    if jobs == 1:
        records = [_lantern_record(N, schedule.m_for(N), corrected) for N in Ns]
    else:
        records = Parallel(n_jobs=jobs)(delayed(_lantern_record)(N, schedule.m_for(N), corrected) for N in Ns)

    logger.debug("Lantern schedule %s over N=%s (corrected=%s)", schedule, Ns, corrected)
    return _scan(records, fit=schedule.convergent)
