"""
XLGEOD CLI - curvature-corrected arc-length studies.
"""

import logging
import math
import sys
from datetime import datetime, timezone
from pathlib import Path

import click
from pydantic import ValidationError

from xlgeod import __version__
from xlgeod.cli.models import (
    Command,
    LanternCommand,
    ReportTable,
    SphereStarCommand,
    SweepCommand,
    VerifyTheoremCommand,
)
from xlgeod.cli.report import render, write_report
from xlgeod.config import get_config
from xlgeod.errors import GeometryError
from xlgeod.lantern.audit import lantern_report
from xlgeod.lantern.models import LanternSpec
from xlgeod.surfaces.catalog import tangent_direction
from xlgeod.surfaces.models import Cylinder, Sphere, SurfaceParams
from xlgeod.sweeps.models import ScanResult, Schedule, ScheduleKind
from xlgeod.sweeps.scans import (
    UNCORRECTED_STAR_K,
    lantern_schedule_sweep,
    regular_star_limit,
    remainder_scan,
    sphere_star_sweep,
    valence_star_sweep,
)
from xlgeod.utils import format_checks, red

logger = logging.getLogger(__name__)

# - Fixed base points of the remainder scans
SPHERE_BASE = SurfaceParams(u=0.0, v=0.0)
CYLINDER_BASE = SurfaceParams(u=0.0, v=0.5)

# - Sphere-star acceptance: |K - 1| <= STAR_BOUND xbar^2 for xbar <= STAR_BOUND_XBAR
STAR_BOUND = 0.35
STAR_BOUND_XBAR = 0.6
STAR_IDENTITY_TOL = 1e-12
NEWTON_MATCH_TOL = 1e-9

# - Expected lantern orders in N and their tolerances
LANTERN_ORDERS = {False: (-2.0, 0.1), True: (-4.0, 0.2)}
STAR_ORDER = (2.0, 0.1)


class FloatList(click.ParamType):
    """Comma-separated list of floats, e.g. 0.4,0.2,0.1."""

    name = "floats"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            items = [float(s) for s in value.split(",") if s.strip()]
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of numbers", param, ctx)
        if not items or not all(math.isfinite(x) for x in items):
            self.fail(f"{value!r} must contain finite numbers", param, ctx)
        return items


class IntList(click.ParamType):
    """Comma-separated list of integers, e.g. 16,32,64."""

    name = "ints"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            items = [int(s) for s in value.split(",") if s.strip()]
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)
        if not items:
            self.fail("list is empty", param, ctx)
        return items


class ScheduleType(click.ParamType):
    """Lantern schedule tag: m-const:M, m-eq-n, m-eq-n2 or m-eq-n3."""

    name = "schedule"

    def convert(self, value, param, ctx):
        if isinstance(value, Schedule):
            return value
        try:
            return Schedule.parse(value)
        except (ValueError, ValidationError) as e:
            self.fail(f"{value!r} is not a valid schedule: {e}", param, ctx)


def output_options(f):
    """Shared --format / --output options."""
    f = click.option(
        "--output",
        "-o",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Write the report to a file instead of standard output",
    )(f)
    f = click.option(
        "--format",
        "fmt",
        type=click.Choice(["csv", "json"]),
        default=lambda: get_config().report.default_format,
        help="Report format",
    )(f)
    return f


def build_command(cls: type[Command], **kwargs) -> Command:
    """Validate parameters into a Command; violations become usage errors."""
    ctx = click.get_current_context()
    try:
        return cls(verbose=ctx.obj.get("verbose", False), **kwargs)
    except ValidationError as e:
        msgs = "; ".join(f"{'.'.join(str(p) for p in err['loc']) or 'input'}: {err['msg']}" for err in e.errors())
        raise click.UsageError(msgs, ctx=ctx) from e


@click.group(invoke_without_command=True)
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on standard error")
@click.pass_context
def cli(ctx, verbose: bool):
    """
    XLGEOD CLI - curvature-corrected geodesic arc-length studies.

    Examples:
      xlgeod verify-theorem --surface sphere --scales 0.4,0.2,0.1,0.05
      xlgeod sphere-star --xbars 0.6,0.2 --corrected
      xlgeod lantern --n 8 --m 4 --corrected
      xlgeod sweep --study lantern-schedule --schedule m-const:1 --ns 16,32,64,128,256
      xlgeod sweep --study sphere-star --valence 6 --corrected
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            stream=sys.stderr,
            format="%(asctime)s %(name)s %(levelname)s %(message)s",
        )
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@cli.command(name="verify-theorem")
@click.option("--surface", type=click.Choice(["sphere", "cylinder"]), required=True, help="Test surface")
@click.option("--radius", type=float, default=1.0, show_default=True, help="Surface radius")
@click.option("--direction-angle", type=float, default=0.0, show_default=True, help="Angle from the first tangent axis")
@click.option("--scales", type=FloatList(), required=True, help="Arc-length ladder, e.g. 0.4,0.2,0.1,0.05")
@output_options
def verify_theorem(surface, radius, direction_angle, scales, fmt, output):
    """Remainder order of the curvature-corrected chord."""
    return build_command(
        VerifyTheoremCommand,
        surface=surface,
        radius=radius,
        direction_angle=direction_angle,
        scales=scales,
        format=fmt,
        output=output,
    )


@cli.command(name="sphere-star")
@click.option("--xbars", type=FloatList(), required=True, help="Neighbor offsets in (0, 1), e.g. 0.6,0.2")
@click.option("--corrected", is_flag=True, help="Correct the leg lengths")
@output_options
def sphere_star(xbars, corrected, fmt, output):
    """Curvature of the symmetric 4-star on the unit sphere."""
    return build_command(SphereStarCommand, xbars=xbars, corrected=corrected, format=fmt, output=output)


@cli.command()
@click.option("--n", "N", type=click.IntRange(min=3), required=True, help="Half the azimuthal divisions (>= 3)")
@click.option("--m", "M", type=click.IntRange(min=1), required=True, help="Half the height divisions (>= 1)")
@click.option("--corrected", is_flag=True, help="Also audit the corrected area")
@output_options
def lantern(N, M, corrected, fmt, output):
    """Schwarz lantern area audit on the unit cylinder."""
    return build_command(LanternCommand, N=N, M=M, corrected=corrected, format=fmt, output=output)


@cli.command()
@click.option("--study", type=click.Choice(["lantern-schedule", "sphere-star"]), required=True)
@click.option("--schedule", type=ScheduleType(), default=None, help="m-const:M | m-eq-n | m-eq-n2 | m-eq-n3")
@click.option("--ns", type=IntList(), default=None, help="Ascending N values, e.g. 16,32,64")
@click.option("--xbars", type=FloatList(), default=None, help="Neighbor offsets for the sphere-star study")
@click.option("--valence", type=click.IntRange(min=3), default=4, show_default=True, help="Star valence")
@click.option("--corrected", is_flag=True, help="Use corrected lengths")
@click.option("--jobs", "-j", type=int, default=1, show_default=True, help="Parallel jobs (-1 = all CPUs)")
@output_options
def sweep(study, schedule, ns, xbars, valence, corrected, jobs, fmt, output):
    """Convergence sweeps with log-log slope fits."""
    extra = {"xbars": xbars} if xbars is not None else {}
    return build_command(
        SweepCommand,
        study=study,
        schedule=schedule,
        ns=ns or [],
        valence=valence,
        corrected=corrected,
        jobs=jobs,
        format=fmt,
        output=output,
        **extra,
    )


@cli.result_callback()
@click.pass_context
def execute(ctx, cmd, verbose: bool):
    """Run the parsed command unless only parsing was requested."""
    if cmd is None or ctx.obj.get("parse_only"):
        return cmd

    table, code = run(cmd)
    text = render(table, cmd.format)
    if cmd.output is not None:
        write_report(cmd.output, text)
        click.echo(f"✓ Report written to {cmd.output}", err=True)
    else:
        click.echo(text, nl=False)

    for line in format_checks(table.checks):
        click.echo(line, err=True)
    if table.header == ["error"]:
        click.echo(red(f"✗ {table.rows[0][0]}", bold=True), err=True)
    ctx.exit(code)


def parse(argv: list[str]) -> Command | None:
    """
    Parse and validate command-line arguments without running anything.

    Returns:
        Validated command, or None when only help was requested

    Raises:
        click.UsageError: unknown flags or invalid parameters (exit code 2)
    """
    rv = cli.main(args=list(argv), prog_name="xlgeod", standalone_mode=False, obj={"parse_only": True})
    return rv if isinstance(rv, Command) else None


def _metadata(cmd: Command) -> dict:
    return {
        "command": cmd.name,
        "params": cmd.params(),
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def _fit_metadata(scan: ScanResult) -> dict:
    if scan.fit is None:
        return {"slope": None, "intercept": None, "r_squared": None}
    return {"slope": scan.fit.slope, "intercept": scan.fit.intercept, "r_squared": scan.fit.r_squared}


def _slope_check(scan: ScanResult, target: float, tol: float) -> bool:
    return scan.fit is not None and abs(scan.fit.slope - target) <= tol


def _run_verify_theorem(cmd: VerifyTheoremCommand, table: ReportTable) -> None:
    if cmd.surface == "sphere":
        surface, base = Sphere(radius=cmd.radius), SPHERE_BASE
    else:
        surface, base = Cylinder(radius=cmd.radius), CYLINDER_BASE

    direction = tangent_direction(surface, base, cmd.direction_angle)
    scan = remainder_scan(surface, base, direction, cmd.scales)

    table.header = ["scale", "chord_sq", "intrinsic_sq", "k_vv", "corrected_sq", "remainder"]
    for r in scan.records:
        table.rows.append(
            [r.scale, r.detail["chord_sq"], r.detail["intrinsic_sq"], r.detail["k_vv"], r.value, r.error]
        )
    table.metadata.update(_fit_metadata(scan))

    sweeps = get_config().sweeps
    if all(e == 0.0 for e in scan.errors):
        table.checks["remainder identically zero"] = True
    else:
        fit = scan.fit
        table.checks["remainder one-signed"] = fit is not None
        table.checks[f"remainder order >= {sweeps.min_remainder_order}"] = (
            fit is not None and fit.slope >= sweeps.min_remainder_order
        )
        table.checks[f"fit r^2 >= {sweeps.min_r_squared}"] = fit is not None and fit.r_squared >= sweeps.min_r_squared


def _run_sphere_star(cmd: SphereStarCommand, table: ReportTable) -> None:
    scan = sphere_star_sweep(cmd.xbars, cmd.corrected)

    table.header = ["xbar", "zbar", "xtilde_sq", "K", "error"]
    for r in scan.records:
        table.rows.append([r.scale, r.detail["zbar"], r.detail["xtilde_sq"], r.value, r.error])
    table.metadata.update(_fit_metadata(scan))

    if cmd.corrected:
        table.checks[f"|K - 1| <= {STAR_BOUND} xbar^2"] = all(
            abs(r.error) <= STAR_BOUND * r.scale**2 for r in scan.records if r.scale <= STAR_BOUND_XBAR
        )
        if len(scan.records) >= 3:
            target, tol = STAR_ORDER
            table.checks[f"order {target:g} +- {tol:g}"] = _slope_check(scan, target, tol)
    else:
        table.checks[f"K = {UNCORRECTED_STAR_K:g} within {STAR_IDENTITY_TOL:g}"] = all(
            abs(r.error) <= STAR_IDENTITY_TOL for r in scan.records
        )


def _run_lantern(cmd: LanternCommand, table: ReportTable) -> None:
    rep = lantern_report(LanternSpec(N=cmd.N, M=cmd.M))
    tri = rep.triangle

    table.header = [
        "N", "M", "triangles", "Lpr_sq", "Lpq_sq", "A_exact", "A_flat", "S", "S_flat",
        "err_flat", "lower_flat", "upper_flat", "holds_flat", "frac_flat",
    ]
    row = [
        cmd.N, cmd.M, rep.spec.triangles, tri.Lpr_sq, tri.Lpq_sq, tri.A_exact, math.sqrt(tri.A_flat_sq), rep.S,
        rep.S_flat, rep.err_flat, rep.bounds_flat[0], rep.bounds_flat[1], rep.holds_flat, rep.frac_flat,
    ]
    table.checks["flat bounds hold"] = rep.holds_flat

    if cmd.corrected:
        table.header += [
            "Lpr_sq_corr", "Lpq_sq_corr", "A_corr", "S_corr", "err_corr", "lower_corr", "upper_corr", "holds_corr",
            "frac_corr",
        ]
        row += [
            tri.Lpr_sq_corr, tri.Lpq_sq_corr, math.sqrt(tri.A_corr_sq), rep.S_corr, rep.err_corr,
            rep.bounds_corr[0], rep.bounds_corr[1], rep.holds_corr, rep.frac_corr,
        ]
        table.checks["corrected bounds hold"] = rep.holds_corr

    table.rows.append(row)


def _run_sweep(cmd: SweepCommand, table: ReportTable) -> None:
    if cmd.study == "lantern-schedule":
        scan = lantern_schedule_sweep(cmd.schedule, cmd.ns, cmd.corrected, cmd.jobs)
        table.header = ["N", "M", "S_approx", "error", "lower", "upper", "holds"]
        for r in scan.records:
            table.rows.append(
                [int(r.scale), int(r.detail["M"]), r.value, r.error, r.detail["lower"], r.detail["upper"],
                 bool(r.detail["holds"])]
            )
        table.metadata.update(_fit_metadata(scan))

        if cmd.schedule.convergent:
            target, tol = LANTERN_ORDERS[cmd.corrected]
            table.checks[f"order {target:g} +- {tol:g}"] = _slope_check(scan, target, tol)
        elif cmd.schedule.kind is ScheduleKind.M_EQ_N3 and not cmd.corrected:
            values = scan.values
            table.checks["S_flat strictly increasing"] = all(b > a for a, b in zip(values, values[1:]))
        return

    scan = valence_star_sweep(cmd.valence, cmd.xbars, cmd.corrected)
    table.header = ["xbar", "K", "error", "iterations", "residual_norm"]
    for r in scan.records:
        table.rows.append([r.scale, r.value, r.error, int(r.detail["iterations"]), r.detail["residual_norm"]])
    table.metadata.update(_fit_metadata(scan))
    table.metadata["limit"] = regular_star_limit(cmd.valence, cmd.corrected)

    if cmd.corrected:
        magnitudes = [abs(e) for e in scan.errors]
        table.checks["|K - 1| shrinks with xbar"] = all(b > a for a, b in zip(magnitudes, magnitudes[1:]))
    else:
        table.checks[f"K matches regular-star value within {NEWTON_MATCH_TOL:g}"] = all(
            abs(e) <= NEWTON_MATCH_TOL for e in scan.errors
        )


RUNNERS = {
    "verify-theorem": _run_verify_theorem,
    "sphere-star": _run_sphere_star,
    "lantern": _run_lantern,
    "sweep": _run_sweep,
}


def run(cmd: Command) -> tuple[ReportTable, int]:
    """
    Execute a parsed command.

    Returns:
        (report table, exit code): 0 when every check passes, 1 on a failed check or a
        computation error (reported as a single 'error' row)
    """
    table = ReportTable(header=[], rows=[], metadata=_metadata(cmd))
    try:
        RUNNERS[cmd.name](cmd, table)
        table = ReportTable.model_validate(table.model_dump())
    except (GeometryError, ValidationError) as e:
        logger.debug("Command %s failed", cmd.name, exc_info=True)
        return ReportTable(header=["error"], rows=[[f"{type(e).__name__}: {e}"]], metadata=_metadata(cmd)), 1

    return table, 0 if table.passed else 1


def main():
    """Console entry point."""
    cli(prog_name="xlgeod")


if __name__ == "__main__":
    main()
