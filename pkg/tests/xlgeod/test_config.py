"""
Tests for environment-driven configuration.
"""

from xlgeod import config as config_module


def test_defaults():
    """Test default settings."""
    cfg = config_module.Config()
    assert cfg.surfaces.steps_per_unit == 1024
    assert cfg.surfaces.enable_torus is True
    assert cfg.solver.newton_tol == 1e-12
    assert cfg.solver.newton_max_iter == 50
    assert cfg.sweeps.min_remainder_order == 5.8
    assert cfg.report.precision == 17
    assert cfg.report.default_format == "csv"


def test_environment_overrides(monkeypatch):
    """Test that XLGEOD_* variables override defaults after a reload."""
    monkeypatch.setenv("XLGEOD_STEPS_PER_UNIT", "256")
    monkeypatch.setenv("XLGEOD_ENABLE_TORUS", "FALSE")
    monkeypatch.setenv("XLGEOD_FORMAT", "json")
    try:
        cfg = config_module.reload_config()
        assert cfg.surfaces.steps_per_unit == 256
        assert cfg.surfaces.enable_torus is False
        assert cfg.report.default_format == "json"
        assert config_module.get_config() is cfg
    finally:
        monkeypatch.undo()
        config_module.reload_config()
