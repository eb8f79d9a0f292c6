"""
XLGEOD - curvature-corrected geodesic arc-length toolkit

Corrects flat (chordal) squared lengths between nearby points of a surface in E^3
with the second fundamental form, and uses the corrected lengths to repair the
4-valent sphere-star curvature estimate and to sharpen the Schwarz lantern area error.
"""

__version__ = "0.1.0"
