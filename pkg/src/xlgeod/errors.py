"""
Exceptions raised by xlgeod operations.
"""


class GeometryError(ValueError):
    """Base class for invalid geometric input or failed numerical oracle."""


class NotTangentError(GeometryError):
    """Direction is not tangent to the surface at the given point."""


class NonUniqueGeodesicError(GeometryError):
    """Pair of points is not joined by a unique surface geodesic (antipodal, half-turn apart)."""


class ChartEscapeError(GeometryError):
    """Geodesic integration left the surface or produced non-finite state."""


class FeatureDisabledError(GeometryError):
    """Optional feature switched off in configuration."""


class CorrectionInputError(GeometryError):
    """Inconsistent inputs to an arc-length correction operator."""


class StarSolveError(GeometryError):
    """
    Newton vertex-star solve failed.

    Carries the residual norm and iteration count reached before giving up.
    """

    def __init__(self, message: str, residual_norm: float, iterations: int):
        super().__init__(f"{message} (residual_norm={residual_norm:.3e}, iterations={iterations})")
        self.residual_norm = residual_norm
        self.iterations = iterations


class DegenerateStarError(StarSolveError):
    """Vertex-star Jacobian is singular."""


class SweepError(GeometryError):
    """Sweep inputs cannot be fitted or are badly ordered."""
