"""
Tests for the arc-length correction operators.
"""

import math

import mpmath
import numpy as np
import pytest

from xlgeod.corrections import (
    CorrectionMethod,
    correct_pair,
    correct_via_k,
    correct_via_normal_flow,
    correct_via_normals,
    normal_flow_derivative,
)
from xlgeod.errors import CorrectionInputError
from xlgeod.surfaces import Cylinder, Point3, Sphere, SurfaceParams, UnitVec3, embed, unit_normal

SPHERE = Sphere(radius=1.0)
CYLINDER = Cylinder(radius=1.0)


def _pair_inputs(surface, p, q):
    return unit_normal(surface, p), unit_normal(surface, q), embed(surface, q) - embed(surface, p)


def test_correct_via_k_examples():
    """Test the curvature-based correction on the documented values."""
    report = correct_via_k(0.4, 1.0)
    assert report.corrected_sq == pytest.approx(0.4133333333333333, abs=1e-15)
    assert report.method is CorrectionMethod.VIA_K

    # - Exact sphere value is acos(0.8)^2; residual is fourth order small
    assert math.acos(0.8) ** 2 - report.corrected_sq == pytest.approx(7.6034e-4, abs=1e-7)

    # - Flat direction and coincident points
    assert correct_via_k(0.37, 0.0).corrected_sq == 0.37
    assert correct_via_k(0.0, 2.0).corrected_sq == 0.0

    # - Sign of K is irrelevant
    assert correct_via_k(0.3, -1.5).correction == correct_via_k(0.3, 1.5).correction


def test_correct_via_k_rejects_negative_chord():
    """Test rejection of a negative squared chord."""
    with pytest.raises(CorrectionInputError):
        correct_via_k(-1e-3, 1.0)


def test_correct_via_normals_cylinder_ring_leg():
    """Test the normal-based correction on the 6-lantern ring leg."""
    p, r = SurfaceParams(u=0.0, v=0.0), SurfaceParams(u=math.pi / 3, v=0.0)
    n_p, n_r, dx = _pair_inputs(CYLINDER, p, r)

    # - (n_p - n_r) . dx = -4 sin^2(pi/6) = -1
    w = sum((a - b) * c for a, b, c in zip(n_p.as_tuple(), n_r.as_tuple(), dx.as_tuple()))
    assert w == pytest.approx(-1.0, abs=1e-15)

    report = correct_via_normals(1.0, n_p, n_r, dx)
    assert report.corrected_sq == pytest.approx(1.0 + 1.0 / 12.0, abs=1e-12)
    assert report.corrected_sq < (math.pi / 3) ** 2


def test_correct_via_normals_cylinder_climbing_leg():
    """Test the normal-based correction on the p-q leg of the (8, 4) lantern."""
    N, M = 8, 4
    p, q = SurfaceParams(u=0.0, v=0.0), SurfaceParams(u=math.pi / N, v=1.0 / (2 * M))
    chord = 4 * math.sin(math.pi / (2 * N)) ** 2 + 1.0 / (4 * M * M)

    report = correct_via_normals(chord, *_pair_inputs(CYLINDER, p, q))

    # - Only the azimuthal part of the displacement contributes
    assert report.chord_sq == pytest.approx(0.16786593498, abs=1e-10)
    assert report.correction == pytest.approx((4.0 / 3.0) * math.sin(math.pi / 16) ** 4, abs=1e-15)
    assert report.corrected_sq == pytest.approx(0.16979737683, abs=1e-10)


def test_correct_via_normals_parallel_normals():
    """Test that parallel normals give no correction."""
    n = UnitVec3(x=0.0, y=0.0, z=1.0)
    report = correct_via_normals(0.25, n, n, Point3(x=0.3, y=0.4, z=0.0))
    assert report.correction == 0.0
    assert report.corrected_sq == 0.25


def test_correct_via_normals_rejects_inconsistent_chord():
    """Test that chord and displacement must agree."""
    n = UnitVec3(x=0.0, y=0.0, z=1.0)
    with pytest.raises(CorrectionInputError):
        correct_via_normals(0.3, n, n, Point3(x=0.3, y=0.4, z=0.0))


def test_correct_via_normal_flow_examples():
    """Test the normal-flow correction."""
    # - Unit sphere: dL^2/dn = 2 L^2
    assert correct_via_normal_flow(0.4, 0.8).corrected_sq == pytest.approx(0.4 + 0.4**2 / 12, abs=1e-15)
    assert correct_via_normal_flow(0.4, 0.0).corrected_sq == 0.4
    assert correct_via_normal_flow(1.0, 2.0).corrected_sq == pytest.approx(1.0833333333333333, abs=1e-15)


def test_normal_flow_derivative_on_sphere():
    """Test dL^2/dn = 2 L^2 on the unit sphere."""
    p, q = SurfaceParams(u=0.3, v=0.1), SurfaceParams(u=0.8, v=-0.4)
    n_p, n_q, dx = _pair_inputs(SPHERE, p, q)
    assert normal_flow_derivative(n_p, n_q, dx) == pytest.approx(2.0 * dx.norm_sq(), abs=1e-14)


def test_cross_method_agreement_on_sphere():
    """Test via_k with K = 1 against via_normal_flow with 2 L^2 on the unit sphere."""
    for chord in np.linspace(0.01, 1.0, 25):
        a = correct_via_k(float(chord), 1.0)
        b = correct_via_normal_flow(float(chord), 2.0 * float(chord))
        assert a.corrected_sq == pytest.approx(b.corrected_sq, rel=1e-15)


def test_correct_pair_methods_agree_on_sphere():
    """Test that every operator gives the same sphere correction through correct_pair."""
    p, q = SurfaceParams(u=0.0, v=0.0), SurfaceParams(u=0.5, v=1.2)
    reports = [correct_pair(SPHERE, p, q, method) for method in CorrectionMethod]
    for report in reports[1:]:
        assert report.corrected_sq == pytest.approx(reports[0].corrected_sq, abs=1e-14)
    assert reports[0].corrected_sq >= reports[0].chord_sq

    # - Coincident points
    assert correct_pair(SPHERE, p, p).corrected_sq == 0.0


def test_monotone_corrections():
    """Test corrected_sq >= chord_sq for random inputs."""
    rng = np.random.default_rng(9)
    for _ in range(200):
        chord = float(rng.uniform(0, 2))
        assert correct_via_k(chord, float(rng.normal())).corrected_sq >= chord
        assert correct_via_normal_flow(chord, float(rng.normal())).corrected_sq >= chord


def test_cylinder_ring_accuracy():
    """Test |corrected - (2t)^2| <= t^6 on ring legs and the 32/45 residual constant."""
    for N in (7, 8, 16, 32, 64):
        t = math.pi / N
        chord = 4 * math.sin(t) ** 2
        p, r = SurfaceParams(u=0.0, v=0.0), SurfaceParams(u=2 * t, v=0.0)
        corrected = correct_via_normals(chord, *_pair_inputs(CYLINDER, p, r)).corrected_sq
        assert abs(corrected - (2 * t) ** 2) <= t**6

        if N < 16:
            continue

        # - Series oracle: (2t)^2 - c - c^2/12 = (32/45) t^6 + O(t^8)
        with mpmath.workdps(40):
            tm = mpmath.pi / N
            cm = 4 * mpmath.sin(tm) ** 2
            residual = (2 * tm) ** 2 - cm - cm**2 / 12
        assert float(residual / tm**6) == pytest.approx(32.0 / 45.0, rel=0.02)
