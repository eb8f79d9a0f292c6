"""
Arc-length correction operators.
"""

from xlgeod.corrections.models import CorrectionMethod, CorrectionReport
from xlgeod.corrections.operators import (
    correct_pair,
    correct_via_k,
    correct_via_normal_flow,
    correct_via_normals,
    normal_flow_derivative,
)

__all__ = [
    "CorrectionMethod",
    "CorrectionReport",
    "correct_pair",
    "correct_via_k",
    "correct_via_normal_flow",
    "correct_via_normals",
    "normal_flow_derivative",
]
