"""
Tests for the xlgeod command-line frontend and report rendering.
"""

import json
import math

import click
import pytest
from click.testing import CliRunner

import xlgeod.cli as cli_module
from xlgeod.cli import cli, parse, run
from xlgeod.cli.models import LanternCommand, ReportTable, SphereStarCommand, SweepCommand, VerifyTheoremCommand
from xlgeod.cli.report import format_cell, read_csv, render_csv, render_json
from xlgeod.errors import GeometryError
from xlgeod.sweeps import ScheduleKind


def _invoke(tmp_path, args: list[str], name: str = "report.csv"):
    """Run the CLI with the report written to a file; returns (result, report text)."""
    out = tmp_path / name
    result = CliRunner().invoke(cli, [*args, "--output", str(out)])
    return result, out.read_text(encoding="utf-8") if out.exists() else ""


def test_parse_commands():
    """Test parsing of each subcommand."""
    cmd = parse(["lantern", "--n", "8", "--m", "4", "--corrected"])
    assert cmd == LanternCommand(N=8, M=4, corrected=True)

    cmd = parse(["verify-theorem", "--surface", "sphere", "--scales", "0.4,0.2,0.1,0.05"])
    assert isinstance(cmd, VerifyTheoremCommand)
    assert cmd.scales == [0.4, 0.2, 0.1, 0.05]
    assert cmd.radius == 1.0

    cmd = parse(["sphere-star", "--xbars", "0.6,0.2", "--format", "json"])
    assert cmd == SphereStarCommand(xbars=[0.6, 0.2], format="json")

    cmd = parse(["sweep", "--study", "lantern-schedule", "--schedule", "m-const:1", "--ns", "16,32,64"])
    assert isinstance(cmd, SweepCommand)
    assert cmd.schedule.kind is ScheduleKind.M_CONST
    assert cmd.ns == [16, 32, 64]

    cmd = parse(["-v", "sweep", "--study", "sphere-star", "--valence", "6"])
    assert cmd.verbose
    assert cmd.xbars == [0.4, 0.2, 0.1, 0.05]


@pytest.mark.parametrize(
    "argv",
    [
        ["lantern", "--n", "2", "--m", "1"],
        ["lantern", "--n", "8", "--m", "4", "--bogus"],
        ["sphere-star", "--xbars", "1.0"],
        ["sphere-star", "--xbars", "0.2,abc"],
        ["sweep", "--study", "lantern-schedule", "--schedule", "m-const:1"],
        ["sweep", "--study", "lantern-schedule", "--schedule", "m-const:1", "--ns", "32,16"],
        ["sweep", "--study", "lantern-schedule", "--schedule", "m-eq-n4", "--ns", "8,16"],
        ["verify-theorem", "--surface", "torus", "--scales", "0.1"],
        ["verify-theorem", "--surface", "sphere", "--scales", "0.1,0.1,0.2"],
        ["sphere-star", "--xbars", "0.2,0.2"],
        ["sweep", "--study", "sphere-star", "--xbars", "0.1,0.1,0.2"],
        ["sweep", "--study", "lantern-schedule", "--schedule", "m-const:1", "--ns", "8,16,32", "--jobs", "0"],
    ],
)
def test_parse_usage_errors(argv):
    """Test that invalid invocations are usage errors with exit code 2."""
    with pytest.raises(click.UsageError) as exc_info:
        parse(argv)
    assert exc_info.value.exit_code == 2


def test_run_lantern():
    """Test the (8, 4) lantern report."""
    table, code = run(LanternCommand(N=8, M=4, corrected=True))
    assert code == 0
    assert table.checks == {"flat bounds hold": True, "corrected bounds hold": True}

    row = dict(zip(table.header, table.rows[0]))
    assert row["triangles"] == 128
    assert row["S_flat"] == pytest.approx(7.1689001, abs=1e-6)
    assert row["S_corr"] == pytest.approx(6.3853121, abs=1e-6)
    assert row["holds_flat"] is True
    assert row["A_exact"] == pytest.approx(math.pi / 64, abs=1e-15)


def test_run_verify_theorem():
    """Test sixth-order remainder on sphere and zero remainder along the cylinder axis."""
    table, code = run(VerifyTheoremCommand(surface="sphere", scales=[0.4, 0.2, 0.1, 0.05]))
    assert code == 0
    assert 5.8 <= table.metadata["slope"] <= 6.2
    assert all(table.checks.values())
    assert [row[0] for row in table.rows] == [0.05, 0.1, 0.2, 0.4]

    table, code = run(VerifyTheoremCommand(surface="cylinder", direction_angle=math.pi / 2, scales=[0.4, 0.2, 0.1]))
    assert code == 0
    assert table.checks == {"remainder identically zero": True}
    assert table.metadata["slope"] is None


def test_run_sphere_star():
    """Test the uncorrected sphere star sitting on K = 3/2."""
    table, code = run(SphereStarCommand(xbars=[0.6, 0.2]))
    assert code == 0
    k_col = table.header.index("K")
    assert [row[k_col] for row in table.rows] == pytest.approx([1.5, 1.5], abs=1e-12)


def test_run_sweep_lantern_schedule():
    """Test order checks on a convergent lantern schedule."""
    cmd = parse(["sweep", "--study", "lantern-schedule", "--schedule", "m-const:1", "--ns", "16,32,64,128,256"])
    table, code = run(cmd)
    assert code == 0
    assert table.checks == {"order -2 +- 0.1": True}
    assert table.header == ["N", "M", "S_approx", "error", "lower", "upper", "holds"]
    assert [row[0] for row in table.rows] == [16, 32, 64, 128, 256]


def test_run_error_row(monkeypatch):
    """Test that a computation error becomes a single error row with exit code 1."""

    def failing(cmd, table):
        raise GeometryError("no unique geodesic")

    monkeypatch.setitem(cli_module.RUNNERS, "lantern", failing)
    table, code = run(LanternCommand(N=8, M=4))
    assert code == 1
    assert table.header == ["error"]
    assert table.rows == [["GeometryError: no unique geodesic"]]


def test_cli_exit_codes(tmp_path):
    """Test exit codes 0 (checks pass), 1 (check fails) and 2 (usage error)."""
    result, text = _invoke(tmp_path, ["lantern", "--n", "8", "--m", "4", "--corrected"])
    assert result.exit_code == 0
    assert text.startswith("# ")

    # - A single scale cannot be fitted
    result, _ = _invoke(tmp_path, ["verify-theorem", "--surface", "sphere", "--scales", "0.1"], "single.csv")
    assert result.exit_code == 1

    result = CliRunner().invoke(cli, ["lantern", "--n", "2", "--m", "1"])
    assert result.exit_code == 2


def test_csv_report_round_trip(tmp_path):
    """Test that CSV cells read back to the exact doubles."""
    table, _ = run(LanternCommand(N=16, M=2, corrected=True))
    result, text = _invoke(tmp_path, ["lantern", "--n", "16", "--m", "2", "--corrected"])
    assert result.exit_code == 0

    meta, header, rows = read_csv(text)
    assert header == table.header
    assert meta["command"] == "lantern"
    assert json.loads(meta["params"]) == {"N": 16, "M": 2, "corrected": True}
    assert json.loads(meta["checks"]) == table.checks

    for cell, value in zip(rows[0], table.rows[0]):
        if isinstance(value, bool):
            assert cell == ("true" if value else "false")
        elif isinstance(value, float):
            assert float(cell) == value
        else:
            assert cell == str(value)


def test_json_report(tmp_path):
    """Test the JSON report layout."""
    result, text = _invoke(tmp_path, ["sphere-star", "--xbars", "0.4,0.2,0.1", "--corrected", "--format", "json"], "r.json")
    assert result.exit_code == 0

    payload = json.loads(text)
    assert set(payload) == {"meta", "header", "rows"}
    assert payload["header"] == ["xbar", "zbar", "xtilde_sq", "K", "error"]
    assert payload["meta"]["command"] == "sphere-star"
    assert payload["meta"]["checks"] == {"|K - 1| <= 0.35 xbar^2": True, "order 2 +- 0.1": True}
    assert len(payload["rows"]) == 3


def test_format_cell():
    """Test locale-independent cell text."""
    assert format_cell(True, 17) == "true"
    assert format_cell(False, 17) == "false"
    assert format_cell(128, 17) == "128"
    assert format_cell(0.1, 17) == "0.10000000000000001"
    assert float(format_cell(math.pi, 17)) == math.pi


def test_render_deterministic():
    """Test identical output apart from the timestamp."""
    a, _ = run(LanternCommand(N=8, M=1))
    b, _ = run(LanternCommand(N=8, M=1))
    for t in (a, b):
        t.metadata.pop("timestamp")
    assert render_csv(a) == render_csv(b)
    assert render_json(a) == render_json(b)


def test_report_table_arity():
    """Test that rows must match the header."""
    with pytest.raises(ValueError):
        ReportTable(header=["a", "b"], rows=[[1.0]])
    assert ReportTable(header=["a"], rows=[[1.0]]).passed


def test_run_scale_past_injectivity_radius():
    """Test that a sphere scale beyond pi ends in an error row instead of a report."""
    table, code = run(VerifyTheoremCommand(surface="sphere", scales=[4.0, 2.0, 1.0]))
    assert code == 1
    assert table.header == ["error"]
    assert table.rows[0][0].startswith("NonUniqueGeodesicError")
