"""Command-line interface for comparing clusterings and running the bias and timing studies."""

from collections.abc import Callable, Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import TextIO

import click
from pydantic import ValidationError

from concord.constants import (
    BENCH_K_GRID,
    BENCH_N_GRID,
    BENCH_SCHEMA,
    DEFAULT_DELIMITER,
    DEFAULT_THREADS,
    ENV_THREADS,
    EXIT_DEGENERATE,
    EXIT_INPUT_ERROR,
    FORMAT_PAIR,
    OUTPUT_JSON,
    OUTPUT_TSV,
    SIMULATE_SCHEMA,
    SKIPPED_MARKER,
)
from concord.exceptions import DegenerateResult, InputError, LengthMismatch
from concord.helpers.files import read_matrix
from concord.helpers.output import render, rows_to_csv
from concord.indices import compare, compare_table
from concord.labels import read_label_file
from concord.models.multinomial import ScenarioSpec
from concord.models.run_config import RunConfig
from concord.multinomial import bias, load_distribution, moments, scenario_distribution
from workflows.flows.bench import bench_flow
from workflows.flows.simulate import run_simulation


class InputFailure(click.ClickException):
    """Unusable input; exits with status 2."""

    exit_code = EXIT_INPUT_ERROR


class DegenerateFailure(click.ClickException):
    """A requested index is undefined for the input; exits with status 3."""

    exit_code = EXIT_DEGENERATE


@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except (InputError, ValidationError) as e:
        raise InputFailure(str(e)) from e
    except DegenerateResult as e:
        raise DegenerateFailure(str(e)) from e


def _grid(cast: type) -> Callable[[click.Context, click.Parameter, str | None], list | None]:
    def parse(ctx: click.Context, param: click.Parameter, value: str | None) -> list | None:
        if value is None:
            return None
        try:
            return [cast(item) for item in value.split(",") if item.strip()]
        except ValueError as e:
            raise click.BadParameter(f"expected a comma-separated list ({e})") from e

    return parse


def _format_options(command: Callable) -> Callable:
    command = click.option(
        "--format",
        "output_format",
        type=click.Choice([OUTPUT_JSON, OUTPUT_TSV]),
        default=OUTPUT_JSON,
        show_default=True,
        help="Output format.",
    )(command)
    command = click.option(
        "--header", is_flag=True, help="Input files start with a header line."
    )(command)
    return click.option(
        "--delimiter",
        default=DEFAULT_DELIMITER,
        show_default=True,
        help="Field separator of delimited input files.",
    )(command)


def _grid_options(command: Callable) -> Callable:
    command = click.option(
        "--n-grid", "n_grid", callback=_grid(int), help="Comma-separated item counts."
    )(command)
    command = click.option(
        "--K-grid", "k_grid", callback=_grid(int), help="Comma-separated cluster counts."
    )(command)
    command = click.option(
        "--seed", type=int, default=0, show_default=True, help="Master random seed."
    )(command)
    return click.option(
        "--output",
        type=click.File("w"),
        default="-",
        help="CSV destination (stdout by default).",
    )(command)


def _config(**options: object) -> RunConfig:
    # unset options fall back to the RunConfig defaults
    return RunConfig(**{key: value for key, value in options.items() if value is not None})


@click.group()
def cli() -> None:
    """Compare clusterings with pair-counting indices."""
    pass


@cli.command("compare")
@click.argument("files", nargs=-1, type=click.Path(path_type=Path))
@click.option(
    "--table",
    type=click.Path(path_type=Path),
    help="Read an already tabulated K x L contingency matrix instead of labels.",
)
@click.option("--require-mari", is_flag=True, help="Exit 3 if the MARI is undefined.")
@click.option(
    "--require-ari-normalized",
    is_flag=True,
    help="Exit 3 if the normalized ARI is undefined.",
)
@_format_options
def compare_command(
    files: tuple[Path, ...],
    table: Path | None,
    require_mari: bool,
    require_ari_normalized: bool,
    delimiter: str,
    header: bool,
    output_format: str,
) -> None:
    """Compare two clusterings given as one two-column file or two one-column files."""
    with _exit_codes():
        config = _config(
            subcommand="compare",
            inputs=list(files),
            table=table,
            delimiter=delimiter,
            header=header,
            output_format=output_format,
            require_mari=require_mari,
            require_ari_normalized=require_ari_normalized,
        )
        click.echo(run_compare(config), nl=False)


def run_compare(config: RunConfig) -> str:
    """Compare the configured inputs and serialize the report.

    Raises:
        InputError: On unreadable or inconsistent inputs
        DegenerateResult: If n < 2, or an index required by the config is undefined
    """
    if config.table is not None:
        if config.inputs:
            raise click.UsageError("give either label files or --table, not both")
        report = compare_table(
            read_matrix(config.table, config.delimiter, config.header)
        )
    elif len(config.inputs) == 1:
        c1, c2 = read_label_file(
            config.inputs[0], FORMAT_PAIR, config.delimiter, config.header
        )
        report = compare(c1, c2)
    elif len(config.inputs) == 2:
        first, second = config.inputs
        c1 = read_label_file(first, delimiter=config.delimiter, header=config.header)
        c2 = read_label_file(second, delimiter=config.delimiter, header=config.header)
        if c1.n != c2.n:
            raise LengthMismatch(c1.n, c2.n, f"{first} and {second}")
        report = compare(c1, c2)
    else:
        raise click.UsageError("compare needs one two-column file or two label files")

    required = {
        "mari": config.require_mari,
        "ari_normalized": config.require_ari_normalized,
    }
    for name, needed in required.items():
        if needed and name in report.issues:
            raise DegenerateFailure(
                f"{report.issues[name]}: {name} is undefined for n = {report.n}"
            )
    return render(report, config.output_format)


@cli.command("expect")
@click.argument("pi_file", required=False, type=click.Path(path_type=Path))
@click.option("-n", "--n", "n", type=int, help="Number of items for n-dependent moments.")
@click.option("--scenario", type=int, help="Use a simulation scenario instead of a pi file.")
@click.option("--K", "k", type=int, help="Cluster count of the scenario.")
@click.option("--epsilon", type=float, help="Noise level of the scenario.")
@_format_options
def expect_command(
    pi_file: Path | None,
    n: int | None,
    scenario: int | None,
    k: int | None,
    epsilon: float | None,
    delimiter: str,
    header: bool,
    output_format: str,
) -> None:
    """Print model moments, and the bias at n items, for a pi matrix or a scenario."""
    with _exit_codes():
        spec = None
        if scenario is not None:
            if k is None or epsilon is None:
                raise click.UsageError("--scenario needs --K and --epsilon")
            spec = ScenarioSpec(scenario_id=scenario, k=k, epsilon=epsilon)
        config = _config(
            subcommand="expect",
            inputs=[pi_file] if pi_file is not None else None,
            n=n,
            scenario=spec,
            delimiter=delimiter,
            header=header,
            output_format=output_format,
        )
        click.echo(run_expect(config), nl=False)


def run_expect(config: RunConfig) -> str:
    """Evaluate the model moments, and the bias when n is set, and serialize them.

    Raises:
        InputError: If the pi matrix or scenario is invalid
    """
    if config.scenario is not None and config.inputs:
        raise click.UsageError("give either a pi file or --scenario, not both")
    if config.scenario is not None:
        pi = scenario_distribution(config.scenario)
    elif len(config.inputs) == 1:
        pi = load_distribution(config.inputs[0], config.delimiter, config.header)
    else:
        raise click.UsageError("expect needs a pi file or --scenario")

    payload: dict = {"moments": moments(pi, config.n)}
    if config.n is not None:
        payload["bias"] = bias(pi, config.n)
    return render(payload, config.output_format)


@cli.command("simulate")
@click.option(
    "--scenario", "scenarios", callback=_grid(int), help="Comma-separated scenario ids."
)
@click.option(
    "--epsilon", "epsilons", callback=_grid(float), help="Comma-separated noise levels."
)
@click.option("--mc", type=int, help="Monte-Carlo replicates per cell (off by default).")
@click.option(
    "--independent",
    is_flag=True,
    help="Replace every scenario by the product of its marginals.",
)
@click.option(
    "--threads",
    type=int,
    default=DEFAULT_THREADS,
    envvar=ENV_THREADS,
    show_default=True,
    help="Worker threads for grid cells.",
)
@_grid_options
def simulate_command(
    scenarios: list[int] | None,
    epsilons: list[float] | None,
    mc: int | None,
    independent: bool,
    threads: int,
    n_grid: list[int] | None,
    k_grid: list[int] | None,
    seed: int,
    output: TextIO,
) -> None:
    """Write the bias study as CSV, one row per (scenario, K, epsilon, n)."""
    with _exit_codes():
        config = _config(
            subcommand="simulate",
            scenarios=scenarios,
            epsilons=epsilons,
            k_grid=k_grid,
            n_grid=n_grid,
            mc=mc,
            independent=independent,
            threads=threads,
            seed=seed,
        )
        rows = run_simulation(config)
        output.write(rows_to_csv(rows, SIMULATE_SCHEMA))


@cli.command("bench")
@click.option(
    "--reps",
    type=int,
    default=5,
    show_default=True,
    help="Timed repeats per cell; the median is reported.",
)
@click.option(
    "--dense-cap",
    type=int,
    help="Largest dense table, in cells, that is still timed [default: CONCORD_DENSE_CAP].",
)
@_grid_options
def bench_command(
    reps: int,
    dense_cap: int | None,
    n_grid: list[int] | None,
    k_grid: list[int] | None,
    seed: int,
    output: TextIO,
) -> None:
    """Write sparse and dense summary timings as CSV, one row per (n, K)."""
    with _exit_codes():
        config = _config(
            subcommand="bench",
            reps=reps,
            dense_cap=dense_cap,
            n_grid=n_grid or list(BENCH_N_GRID),
            k_grid=k_grid or list(BENCH_K_GRID),
            seed=seed,
        )
        rows = bench_flow(config)
        output.write(rows_to_csv(rows, BENCH_SCHEMA, {"dense_seconds": SKIPPED_MARKER}))


if __name__ == "__main__":
    cli()
