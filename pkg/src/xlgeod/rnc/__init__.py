"""
Riemann-normal-coordinate curvature estimation on vertex stars.
"""

from xlgeod.rnc.estimator import (
    rnc_leg_sq,
    solve_star_newton,
    solve_symmetric_sphere_star,
    sphere_star,
)
from xlgeod.rnc.models import Coord2, RncSolution, SymmetricStarResult, VertexStar

__all__ = [
    "Coord2",
    "RncSolution",
    "SymmetricStarResult",
    "VertexStar",
    "rnc_leg_sq",
    "solve_star_newton",
    "solve_symmetric_sphere_star",
    "sphere_star",
]
