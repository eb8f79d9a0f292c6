"""
Tests for the Schwarz lantern audit.
"""

import math

import mpmath
import pytest
from pydantic import ValidationError

from xlgeod.lantern import LanternSpec, audit_grid, lantern_report, triangle_geometry

GRID_NS = [8, 16, 32, 64, 128]
GRID_MS = [1, 2, 4, 8]


def _mp_lantern(N: int, M: int) -> dict[str, float]:
    """Lantern totals straight from the trig formulas at 50 digits."""
    with mpmath.workdps(50):
        pi = mpmath.pi
        lpr = 4 * mpmath.sin(pi / N) ** 2
        ring = 4 * mpmath.sin(pi / (2 * N)) ** 2
        lpq = ring + mpmath.mpf(1) / (4 * M * M)
        lpr_c = lpr + lpr**2 / 12
        lpq_c = lpq + ring**2 / 12
        s_flat = 4 * N * M * mpmath.sqrt(lpr * (4 * lpq - lpr) / 16)
        s_corr = 4 * N * M * mpmath.sqrt(lpr_c * (4 * lpq_c - lpr_c) / 16)
        S = 2 * pi
        return {
            "S_flat": float(s_flat),
            "S_corr": float(s_corr),
            "err_flat": float(S**2 - s_flat**2),
            "err_corr": float(S**2 - s_corr**2),
        }


def test_spec_validation():
    """Test N >= 3 and M >= 1."""
    assert LanternSpec(N=3, M=1).triangles == 12
    with pytest.raises(ValidationError):
        LanternSpec(N=2, M=1)
    with pytest.raises(ValidationError):
        LanternSpec(N=8, M=0)


def test_triangle_geometry_n8_m4():
    """Test legs and areas of the (8, 4) lantern triangle."""
    tri = triangle_geometry(LanternSpec(N=8, M=4))

    assert tri.Lpr_sq == pytest.approx(0.58578643763, abs=1e-10)
    assert tri.Lpq_sq == pytest.approx(0.16786593498, abs=1e-10)
    assert tri.A_exact == pytest.approx(math.pi / 64, abs=1e-15)
    assert math.sqrt(tri.A_flat_sq) == pytest.approx(0.0560070320, abs=1e-9)

    assert tri.Lpr_sq_corr == pytest.approx(0.61438191684, abs=1e-10)
    assert tri.Lpq_sq_corr == pytest.approx(0.16979737683, abs=1e-10)
    assert math.sqrt(tri.A_corr_sq) == pytest.approx(0.0498852510, abs=1e-9)


def test_triangle_geometry_height_limit():
    """Test that the climbing leg tends to the ring chord as M grows."""
    tri = triangle_geometry(LanternSpec(N=8, M=10**6))
    assert tri.Lpq_sq == pytest.approx(4 * math.sin(math.pi / 16) ** 2, abs=1e-12)


def test_lantern_report_n8_m4():
    """Test the (8, 4) audit against the high-precision oracle."""
    rep = lantern_report(LanternSpec(N=8, M=4))
    oracle = _mp_lantern(8, 4)

    assert rep.S == 2 * math.pi
    assert rep.S_flat == pytest.approx(7.1689001, abs=1e-6)
    assert rep.S_corr == pytest.approx(6.3853121, abs=1e-6)
    assert rep.err_flat == pytest.approx(-11.914711, abs=1e-5)
    assert rep.err_corr == pytest.approx(-1.2937928, abs=1e-6)
    for key, value in oracle.items():
        assert getattr(rep, key) == pytest.approx(value, abs=1e-12)

    assert rep.bounds_flat == pytest.approx((-13.034077, 2.0293561), abs=1e-6)
    assert rep.bounds_corr == pytest.approx((-1.3866420, 0.16690785), abs=1e-7)
    assert rep.holds_flat
    assert rep.holds_corr


def test_lantern_report_asymptotic_regime():
    """Test the (100, 1) lantern: flat area below 2 pi, error under the upper bound."""
    rep = lantern_report(LanternSpec(N=100, M=1))
    assert rep.S_flat < 2 * math.pi
    assert 0 < rep.err_flat < 4 * math.pi**4 / (3 * 100**2)
    assert rep.bounds_flat[1] == pytest.approx(0.0129878788, abs=1e-10)
    assert rep.holds_flat and rep.holds_corr


def test_fractional_errors():
    """Test per-triangle fractional errors match the totals."""
    rep = lantern_report(LanternSpec(N=16, M=2))
    S_sq = rep.S**2
    assert rep.frac_flat == pytest.approx(rep.err_flat / S_sq, rel=1e-9)
    assert rep.frac_corr == pytest.approx(rep.err_corr / S_sq, rel=1e-6)
    assert rep.holds_frac_flat


def test_exact_area_identity():
    """Test 4NM A_exact = 2 pi."""
    for N in (3, 8, 17, 128):
        for M in (1, 3, 8):
            tri = triangle_geometry(LanternSpec(N=N, M=M))
            assert abs(4 * N * M * tri.A_exact - 2 * math.pi) <= 1e-12


def test_bounds_hold_on_grid():
    """Test both bound chains on the full N x M grid."""
    reports = audit_grid(GRID_NS, GRID_MS)
    assert len(reports) == 20
    for rep in reports:
        assert rep.holds_flat, (rep.spec, rep.err_flat, rep.bounds_flat)
        assert rep.holds_corr, (rep.spec, rep.err_corr, rep.bounds_corr)
        # - Corrected legs dominate flat legs
        assert rep.triangle.Lpr_sq_corr >= rep.triangle.Lpr_sq
        assert rep.triangle.Lpq_sq_corr >= rep.triangle.Lpq_sq


def test_audit_grid_sorted_and_parallel():
    """Test (N, M) ordering and identical results from parallel workers."""
    serial = audit_grid([32, 8], [4, 1])
    assert [(r.spec.N, r.spec.M) for r in serial] == [(8, 1), (8, 4), (32, 1), (32, 4)]

    parallel = audit_grid([32, 8], [4, 1], jobs=2)
    assert [r.model_dump() for r in parallel] == [r.model_dump() for r in serial]


def test_divergent_schedule():
    """Test that S_flat grows without bound when M = N^3."""
    values = [lantern_report(LanternSpec(N=N, M=N**3)).S_flat for N in (4, 6, 8, 12, 16)]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert values[-1] > 100 * 2 * math.pi
