"""
torsionlab command line: analyze, verify, sweep, field and exponents.

    python -m scripts.torsionlab --seed 7 verify --suite exponents
    python -m scripts.torsionlab analyze --expr t --expr "t^2" --expr "t^4"

Exit codes: 0 success, 1 failed checks or unexpected errors, 2 domain error,
3 numerical precondition, 64 usage or parse error.

@Time ： 2026-10-18
"""
import sys
from pathlib import Path

import click

from daos.field_dao import write_field_binary, write_field_csv
from daos.report_dao import DECOMPOSITION_REPORT_SCHEMA, write_csv, write_report
from services.experiments.analyze import analyze_curve
from services.experiments.config import load_config
from services.experiments.curves import resolve_curves
from services.experiments.field import field_dump
from services.experiments.sweep import SWEEP_HEADER, uniformity_sweep
from services.experiments.validation import SUITES
from services.experiments.verify import VerifyContext, run_suite
from services.exponents.drury import drury_iterate
from services.exponents.pairs import to_text
from services.exponents.table import TABLE_HEADER, exponent_table
from utils.decorators import handle_command
from utils.errors import UsageError
from utils.logger import Logger
from utils.parallel import worker_count

logger = Logger(__name__)


class TorsionLabGroup(click.Group):
    """click group whose usage errors exit with 64 instead of click's 2."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            code = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as e:
            e.show()
            code = UsageError.exit_code
        except click.ClickException as e:
            e.show()
            code = e.exit_code
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = 1
        code = code if isinstance(code, int) else 0
        if standalone_mode:
            sys.exit(code)
        return code


def _curve_override(curve_path, exprs):
    if curve_path and exprs:
        raise click.UsageError("give either --curve or --expr, not both")
    if curve_path:
        return {"path": curve_path}
    if exprs:
        return {"exprs": list(exprs)}
    return None


def _config(obj, kind, **overrides):
    return load_config(
        obj["config_path"], kind=kind, seed=obj["seed"], out=obj["out"], quick=obj["quick"], **overrides
    )


def _provenance(config):
    return config.model_dump(mode="json")


@click.group(cls=TorsionLabGroup)
@click.option("--config", "config_path", type=click.Path(), default=None, help="Experiment config JSON.")
@click.option("--seed", type=click.IntRange(0, (1 << 64) - 1), default=None, help="u64 seed for every random draw.")
@click.option("--out", type=click.Path(), default=None, help="Output directory.")
@click.option("--quick", is_flag=True, default=None, help="Reduced sample counts and grids.")
@click.pass_context
def cli(ctx, config_path, seed, out, quick):
    ctx.ensure_object(dict)
    ctx.obj.update({"config_path": config_path, "seed": seed, "out": out, "quick": quick})


@cli.command()
@click.option("--curve", "curve_path", type=click.Path(), default=None, help="Curve JSON file.")
@click.option("--expr", "exprs", multiple=True, help="Component polynomial; repeat once per component.")
@click.option("--levels", nargs=2, type=int, default=None, help="Inclusive n range of the level-set table.")
@click.option("--injectivity-samples", type=int, default=None, help="Pairs per bounded piece; 0 skips the probe.")
@click.pass_obj
@handle_command
def analyze(obj, curve_path, exprs, levels, injectivity_samples):
    """Torsion, profile, decomposition and level sets of one curve."""
    config = _config(
        obj,
        "analyze",
        curve=_curve_override(curve_path, exprs),
        analyze={"levels": list(levels) if levels else None, "injectivity_samples": injectivity_samples},
    )
    (label, gamma), *_ = resolve_curves(config.curve, config.seed)
    report = analyze_curve(
        gamma, tuple(config.analyze.levels), config.analyze.injectivity_samples, config.seed, worker_count()
    )
    path = write_report(
        Path(config.out) / "analyze_report.json", report, _provenance(config), schema=DECOMPOSITION_REPORT_SCHEMA
    )
    pieces = len(report["decomposition"]["pieces"])
    click.echo(f"torsion {report['torsion']['text']}; {pieces} pieces; report {path}")
    logger.run_log("analyze", label, "success", {"pieces": pieces, "report": str(path)})


@cli.command()
@click.option("--suite", type=click.Choice(SUITES), default=None, help="Invariant suite to run.")
@click.option("--curves", type=int, default=None, help="Random curves in the geometric suite.")
@click.option("--samples", type=int, default=None, help="Samples per geometric scan.")
@click.pass_obj
@handle_command
def verify(obj, suite, curves, samples):
    """Run an invariant suite; exits 1 when any check fails."""
    config = _config(obj, "verify", verify={"suite": suite, "curves": curves, "samples": samples})
    context = VerifyContext(
        seed=config.seed,
        curves=config.verify.curves,
        samples=config.verify.samples,
        quick=config.quick,
        workers=worker_count(),
    )
    summary = run_suite(config.verify.suite, context)
    path = write_report(Path(config.out) / f"verify_{config.verify.suite}.json", summary, _provenance(config))
    for check in summary["checks"]:
        click.echo(f"{'PASS' if check['passed'] else 'FAIL'} {check['name']} margin={check['margin']}")
    status = "success" if summary["passed"] else "failed"
    logger.run_log("verify", config.verify.suite, status, {"report": str(path)})
    if not summary["passed"]:
        click.get_current_context().exit(1)


@cli.command()
@click.option("--d", "d", type=int, default=None, help="Dimension of the random family.")
@click.option("--N", "N", type=int, default=None, help="Degree bound of the random family.")
@click.option("--count", type=int, default=None, help="Number of curves.")
@click.option("--box", type=float, default=None, help="Coefficient box half-width.")
@click.option("--p", "p", type=str, default=None, help="Lebesgue exponent of the test functions.")
@click.option("--q", "q", type=str, default=None, help="Lebesgue exponent of the extension.")
@click.option("--budget", type=int, default=None, help="Ratio evaluations per curve and weight.")
@click.pass_obj
@handle_command
def sweep(obj, d, N, count, box, p, q, budget):
    """Best norm ratios over a random curve family on matched grids."""
    random = None
    if d is not None or N is not None:
        if d is None or N is None:
            raise click.UsageError("--d and --N go together")
        random = {"random": {"d": d, "N": N, "count": count or 20, "box": box or 1.0}}
    config = _config(obj, "sweep", curve=random, sweep={"p": p, "q": q, "budget": budget})
    if config.curve is None or config.curve.random is None:
        raise click.UsageError("sweep needs a random family (--d/--N or curve.random in the config)")
    curves = [gamma for _, gamma in resolve_curves(config.curve, config.seed)]
    result = uniformity_sweep(curves, config.sweep, worker_count())
    out = Path(config.out)
    write_csv(out / "sweep.csv", SWEEP_HEADER, result["rows"])
    path = write_report(out / "sweep.json", result, _provenance(config))
    click.echo(f"family max {result['family_max']}; unweighted max {result['unweighted_family_max']}; report {path}")
    logger.run_log("sweep", f"d={curves[0].d}", "success", {"failures": result["failures"]})


@cli.command()
@click.option("--curve", "curve_path", type=click.Path(), default=None, help="Curve JSON file.")
@click.option("--expr", "exprs", multiple=True, help="Component polynomial; repeat once per component.")
@click.option("--resolution", type=int, default=None, help="Grid points per axis.")
@click.option("--nodes", type=int, default=None, help="Quadrature nodes on the bump support.")
@click.option("--format", "dump_format", type=click.Choice(["csv", "binary", "both"]), default=None)
@click.pass_obj
@handle_command
def field(obj, curve_path, exprs, resolution, nodes, dump_format):
    """Dump E applied to a Gaussian bump over a box grid."""
    config = _config(
        obj,
        "field",
        curve=_curve_override(curve_path, exprs),
        field={"resolution": resolution, "nodes": nodes, "format": dump_format},
    )
    (label, gamma), *_ = resolve_curves(config.curve, config.seed)
    values = field_dump(gamma, config.field, worker_count())
    out = Path(config.out)
    written = []
    if config.field.format in ("csv", "both"):
        written.append(write_field_csv(out / "field.csv", values))
    if config.field.format in ("binary", "both"):
        written.append(write_field_binary(out / "field.tlfd", values))
    click.echo(f"field {values.grid.shape} tail {values.tail:.3g}; " + ", ".join(str(p) for p in written))
    logger.run_log("field", label, "success", {"files": [str(p) for p in written]})


@cli.command()
@click.option("--d", "d", type=int, required=True, help="Ambient dimension.")
@click.option("--q", "qs", multiple=True, help="Restriction-side q values, e.g. 7/6 or 2.")
@click.option("--drury", "p0", default=None, help="Start of the Drury iteration.")
@click.option("--iterations", type=int, default=5, show_default=True)
@click.pass_obj
@handle_command
def exponents(obj, d, qs, p0, iterations):
    """Exponent table on the scaling line, optionally with a Drury sequence."""
    if obj["config_path"]:
        raise click.UsageError("exponents reads no config file; pass --d with --q or --drury")
    if not qs and p0 is None:
        raise click.UsageError("give at least one --q or --drury")
    out = Path(obj["out"] or "out")
    if qs:
        rows = exponent_table(d, qs)
        write_csv(out / "exponents.csv", TABLE_HEADER, rows)
        click.echo(",".join(TABLE_HEADER))
        for row in rows:
            click.echo(",".join("" if row[key] is None else str(row[key]) for key in TABLE_HEADER))
    if p0 is not None:
        sequence = drury_iterate(d, p0, iterations)
        click.echo("drury " + " ".join(to_text(p) for p in sequence))
    logger.run_log("exponents", f"d={d}", "success", {"qs": list(qs), "p0": p0})


main = cli

if __name__ == "__main__":
    cli()
