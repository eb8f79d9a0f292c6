"""
Convergence sweeps and log-log slope fitting.
"""

from xlgeod.sweeps.models import ScanResult, Schedule, ScheduleKind, SlopeFit, SweepRecord
from xlgeod.sweeps.scans import (
    lantern_schedule_sweep,
    regular_star_limit,
    remainder_scan,
    slope_fit,
    sphere_star_sweep,
    valence_star_sweep,
)

__all__ = [
    "ScanResult",
    "Schedule",
    "ScheduleKind",
    "SlopeFit",
    "SweepRecord",
    "lantern_schedule_sweep",
    "regular_star_limit",
    "remainder_scan",
    "slope_fit",
    "sphere_star_sweep",
    "valence_star_sweep",
]
