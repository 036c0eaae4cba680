"""CLI entry point"""

import asyncio
import logging
from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError as PydanticValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from qbench.core.exceptions import QBenchError

app = typer.Typer(
    name="qbench",
    help="Convex-quadratic bi-objective benchmark - generate, verify, run and aggregate",
)
console = Console()
err_console = Console(stderr=True)

DEFAULT_CONFIG = Path("config/config.yaml")
PRESET_DIR = Path("config/experiments")

EXIT_INVALID = 1
EXIT_VERIFICATION_FAILED = 2

_state: dict[str, Path] = {"config": DEFAULT_CONFIG}


def _setup_logging(verbose: int) -> None:
    from qbench.core.config import EnvSettings

    if verbose >= 2:
        level = "DEBUG"
    elif verbose == 1:
        level = "INFO"
    else:
        level = EnvSettings().log_level.upper()

    logger = logging.getLogger("qbench")
    logger.handlers.clear()
    logger.addHandler(RichHandler(console=err_console, show_path=False, rich_tracebacks=True))
    logger.setLevel(level)
    logger.propagate = False


def _load_config():
    from qbench.core.config import Config, EnvSettings

    config = Config.load(_state["config"])
    env = EnvSettings()
    if env.cache_dir is not None:
        config.cache_dir = env.cache_dir
    return config


def _fail(e: Exception) -> None:
    err_console.print(f"[red]Error:[/red] {e}")
    raise typer.Exit(EXIT_INVALID)


def _write_frame(frame, out: Optional[Path]) -> None:
    from qbench.services.records import write_csv

    if out is None:
        typer.echo(frame.to_csv(index=False, lineterminator="\n", float_format="%.17g"), nl=False)
    else:
        write_csv(frame, out)
        err_console.print(f"[green]✓[/green] Wrote {out}")


@app.callback()
def main(
    verbose: int = typer.Option(0, "--verbose", "-v", count=True, help="-v for INFO, -vv for DEBUG"),
    config: Path = typer.Option(DEFAULT_CONFIG, "--config", help="Configuration file"),
):
    """Convex-quadratic bi-objective benchmark problems with analytic oracles"""
    _setup_logging(verbose)
    _state["config"] = config


@app.command()
def generate(
    class_name: str = typer.Option(..., "--class", "-c", help="Class name, e.g. 7|C"),
    dim: int = typer.Option(10, "--dim", "-d", help="Search space dimension"),
    index: int = typer.Option(0, "--index", "-i", help="Instance index"),
    kappa: Optional[float] = typer.Option(None, "--kappa", help="Condition number (default from config)"),
    spectrum: Optional[str] = typer.Option(None, "--spectrum", help="ellipsoid | cigar | discus"),
    out: Path = typer.Option(Path("instance.json"), "--out", "-o", help="Instance JSON file"),
):
    """Generate one instance and write it as JSON"""
    try:
        from qbench.problems import ProblemClass, sample_instance, save_instance

        config = _load_config()
        problem_class = ProblemClass.from_name(
            class_name, dim, kappa or config.kappa, spectrum or config.spectrum
        )
        inst = sample_instance(problem_class, index)
        save_instance(inst, out)
    except (QBenchError, PydanticValidationError, ValueError) as e:
        _fail(e)

    console.print(
        Panel(
            f"class [cyan]{inst.class_name}[/cyan]  d={inst.dimension}  index={inst.index}\n"
            f"s={inst.s:g}  g={inst.g_weight:.6f}\n"
            f"[green]✓[/green] {out}",
            title="Instance",
        )
    )


@app.command()
def evaluate(
    instance: Path = typer.Option(..., "--instance", help="Instance JSON file"),
    points: Path = typer.Option(..., "--points", help="CSV of decision vectors with a header row"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Objective CSV (stdout if omitted)"),
):
    """Evaluate decision vectors and emit f1, f2 per row"""
    try:
        import pandas as pd

        from qbench.problems import load_instance

        inst = load_instance(instance)
        try:
            x = pd.read_csv(points).to_numpy(dtype=float)
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise QBenchError(f"Cannot read points from {points}: {e}") from e
        values = inst.evaluate_many(x)
    except (QBenchError, PydanticValidationError, ValueError) as e:
        _fail(e)

    _write_frame(pd.DataFrame(values, columns=["f1", "f2"]), out)


@app.command()
def front(
    instance: Path = typer.Option(..., "--instance", help="Instance JSON file"),
    samples: int = typer.Option(1001, "--samples", help="Evenly spaced t samples"),
    mu: Optional[int] = typer.Option(None, "--mu", help="Emit the optimal mu-distribution instead"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Front CSV (stdout if omitted)"),
):
    """Sample the analytic front, or its optimal mu-distribution"""
    try:
        import numpy as np
        import pandas as pd

        from qbench.analytic import FrontParam
        from qbench.problems import load_instance
        from qbench.services.cache import MuDistributionCache

        inst = load_instance(instance)
        if mu is not None:
            cache = MuDistributionCache(_load_config().cache_dir)
            try:
                distribution = cache.get_or_compute(inst, mu)
            finally:
                cache.close()
            t = distribution.t_values
            err_console.print(
                f"normalized hypervolume {distribution.normalized_hypervolume:.12f}"
                f" (reference {distribution.reference_point})"
            )
        else:
            if samples < 2:
                raise QBenchError("--samples must be at least 2")
            t = np.linspace(0.0, 1.0, samples)
        f = FrontParam.from_instance(inst).points(t)
    except (QBenchError, PydanticValidationError, ValueError) as e:
        _fail(e)

    _write_frame(pd.DataFrame({"t": t, "f1": f[:, 0], "f2": f[:, 1]}), out)


@app.command()
def verify(
    class_name: Optional[str] = typer.Option(None, "--class", "-c", help="Class name, e.g. 9/C"),
    dim: int = typer.Option(10, "--dim", "-d", help="Search space dimension"),
    index: int = typer.Option(0, "--index", "-i", help="Instance index"),
    kappa: Optional[float] = typer.Option(None, "--kappa", help="Condition number (default from config)"),
    instance: Optional[Path] = typer.Option(None, "--instance", help="Verify an instance file instead"),
    full: bool = typer.Option(False, "--full", help="Add the brute-force grid check (d = 2)"),
):
    """Check an instance against its invariants and analytic oracles"""
    level = "full" if full else "quick"
    try:
        from qbench.pipeline.verification import verify_instance, verify_loaded
        from qbench.problems import load_instance

        config = _load_config()
        if instance is not None:
            context = asyncio.run(verify_loaded(load_instance(instance), level, config.verification))
        elif class_name is not None:
            context = asyncio.run(
                verify_instance(
                    class_name,
                    dim,
                    index,
                    level,
                    kappa or config.kappa,
                    config.spectrum,
                    config.verification,
                )
            )
        else:
            raise QBenchError("Either --class or --instance is required")
    except (QBenchError, PydanticValidationError, ValueError) as e:
        _fail(e)

    inst = context.instance
    table = Table(title=f"{inst.class_name} d={inst.dimension} index={inst.index} ({level})")
    table.add_column("check")
    table.add_column("result")
    table.add_column("residual", justify="right")
    table.add_column("detail")
    for check in context.checks:
        table.add_row(
            check.name,
            "[green]pass[/green]" if check.passed else "[red]FAIL[/red]",
            "" if check.residual is None else f"{check.residual:.3e}",
            check.detail,
        )
    console.print(table)

    if not context.passed:
        names = ", ".join(check.name for check in context.failed_checks())
        console.print(f"[red]✗ Verification failed:[/red] {names}")
        raise typer.Exit(EXIT_VERIFICATION_FAILED)
    console.print("[green]✓ All checks passed[/green]")


@app.command()
def run(
    spec: Optional[Path] = typer.Option(None, "--spec", help="Experiment spec (YAML or JSON)"),
    preset: Optional[str] = typer.Option(None, "--preset", "-p", help="Preset name under config/experiments"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory override"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes override"),
):
    """Run an experiment and write runs.csv and mu_distributions.json"""
    try:
        from qbench.core.config import Config, EnvSettings, ExperimentSpec
        from qbench.pipeline.experiment import ExperimentPipeline
        from qbench.services.cache import MuDistributionCache

        if spec is not None:
            experiment = ExperimentSpec.load(spec)
            config = _load_config()
        elif preset is not None:
            config = Config.load_with_preset(_state["config"], PRESET_DIR / f"{preset}.yaml")
            experiment = config.experiment
        else:
            raise QBenchError("Either --spec or --preset is required")

        updates = {}
        if out is not None:
            updates["output_dir"] = out
        env_workers = EnvSettings().workers
        if workers is not None or env_workers is not None:
            updates["workers"] = workers if workers is not None else env_workers
        if updates:
            experiment = ExperimentSpec(**{**experiment.model_dump(), **updates})

        console.print(Panel("[bold blue]qbench experiment[/bold blue]"))
        console.print(f"classes: [cyan]{len(experiment.class_names)}[/cyan]  d={experiment.dimension}")
        console.print(f"instances: [cyan]{len(experiment.indices)}[/cyan]  solvers: {', '.join(experiment.solvers)}")

        cache = MuDistributionCache(config.cache_dir)
        try:
            result = asyncio.run(ExperimentPipeline(experiment, cache).run())
        finally:
            cache.close()
    except (QBenchError, PydanticValidationError, ValueError) as e:
        _fail(e)

    console.print(f"\n[green]✓[/green] {len(result.records)} runs written to {result.runs_path}")
    console.print(f"[green]✓[/green] optimal mu-distributions written to {result.mu_path}")


@app.command()
def aggregate(
    input_path: Path = typer.Option(..., "--in", help="runs.csv or the directory holding it"),
    group: str = typer.Option("taxonomy", "--group", "-g", help="Grouping: shape, alignment, separability, rotation, taxonomy, all, class"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Aggregate CSV (stdout if omitted)"),
):
    """Median and 10%/90% quantiles of normalized hypervolume per group"""
    try:
        from qbench.services.aggregate import aggregate as aggregate_runs
        from qbench.services.records import read_runs

        frame = aggregate_runs(read_runs(input_path), group)
    except (QBenchError, PydanticValidationError, ValueError) as e:
        _fail(e)

    _write_frame(frame, out)


@app.command()
def list_classes(
    group: Optional[str] = typer.Option(None, "--group", "-g", help="Only classes of this group"),
):
    """List the 54 class names, or the members of a group"""
    from qbench.problems.classes import CLASS_GROUPS, all_class_names, group_members

    try:
        names = group_members(group) if group else all_class_names()
    except QBenchError as e:
        err_console.print(f"available groups: {', '.join(CLASS_GROUPS)}")
        _fail(e)

    for name in names:
        console.print(name, highlight=False)


@app.command()
def validate():
    """Check the configuration, presets and environment"""
    from qbench.core.config import Config, EnvSettings

    console.print("[bold]Validating configuration...[/bold]")
    ok = True

    try:
        env = EnvSettings()
        console.print(f"  [green]✓[/green] environment (log level {env.log_level})")
    except PydanticValidationError as e:
        console.print(f"  [red]✗[/red] environment: {e}")
        ok = False

    config_path = _state["config"]
    if config_path.exists():
        try:
            config = Config.load(config_path)
            console.print(f"  [green]✓[/green] {config_path}")
            console.print(
                f"    kappa={config.kappa:g}  spectrum={config.spectrum}  "
                f"mu={config.solver.population_size}  budget={config.solver.budget}"
            )
        except (QBenchError, PydanticValidationError) as e:
            console.print(f"  [red]✗[/red] {config_path}: {e}")
            ok = False
    else:
        console.print(f"  [yellow]○[/yellow] {config_path} not found (using defaults)")

    for preset in sorted(PRESET_DIR.glob("*.yaml")):
        try:
            Config.load_with_preset(config_path, preset)
            console.print(f"  [green]✓[/green] preset {preset.stem}")
        except (QBenchError, PydanticValidationError) as e:
            console.print(f"  [red]✗[/red] preset {preset.stem}: {e}")
            ok = False

    if not ok:
        raise typer.Exit(EXIT_INVALID)


@app.command()
def version():
    """Show the version"""
    from qbench import __version__

    console.print(f"qbench v{__version__}")


if __name__ == "__main__":
    app()
