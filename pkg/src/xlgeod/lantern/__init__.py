"""
Schwarz lantern laboratory on the unit cylinder.
"""

from xlgeod.lantern.audit import (
    audit_grid,
    corrected_bounds,
    flat_bounds,
    fractional_flat_bounds,
    lantern_report,
    triangle_geometry,
)
from xlgeod.lantern.models import LanternReport, LanternSpec, TriangleGeometry

__all__ = [
    "LanternReport",
    "LanternSpec",
    "TriangleGeometry",
    "audit_grid",
    "corrected_bounds",
    "flat_bounds",
    "fractional_flat_bounds",
    "lantern_report",
    "triangle_geometry",
]
