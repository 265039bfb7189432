"""CLI adapter for ``aft_sim`` built on ``rich-click`` and ``lib_cli_exit_tools``.

Purpose
-------
Run scenarios, parameter sweeps and ARTIRA qualification from the shell
without writing Python.

Contents
--------
* :data:`CLICK_CONTEXT_SETTINGS` – shared Click settings ensuring ``-h`` works.
* :func:`cli` – root command that wires traceback handling into
  ``lib_cli_exit_tools``.
* :func:`cli_run` – replay a scenario; metrics as JSON, decisions as CSV.
* :func:`cli_sweep` – one metrics row per axis value, as CSV.
* :func:`cli_qualify` – certify a transform against paired samples.
* :func:`cli_examples` – write the bundled scenarios to a directory.
* :func:`cli_info` – distribution metadata.
* :func:`main` – entry point used by ``console_scripts`` registration.

System Role
-----------
Outermost layer. Commands call :mod:`aft_sim.core` only. Library errors map
to exit codes here: ``2`` for validation problems and unknown sweep axes,
``3`` for unreadable input; commit failures are data and exit ``0``.
"""

from __future__ import annotations

import dataclasses
import json
import sys
from contextlib import contextmanager
from importlib import metadata
from pathlib import Path
from typing import Final, Iterable, Iterator, Optional, Sequence

import lib_cli_exit_tools
import rich_click as click

from . import core
from .domain.artira import ArtiraTriple, Rejection
from .domain.errors import InvalidAxis, InvalidFormat, ValidationError
from .examples import write_examples

CLICK_CONTEXT_SETTINGS = {"help_option_names": ["-h", "--help"]}
_TRACEBACK_SUMMARY_LIMIT: Final[int] = 500
_TRACEBACK_VERBOSE_LIMIT: Final[int] = 10_000

EXIT_VALIDATION: Final[int] = 2
EXIT_PARSE: Final[int] = 3

SPACE_CHOICES: Final[tuple[str, ...]] = ("absolute_difference", "euclidean_vector", "discrete01")
_SEED_RANGE = click.IntRange(0, 2**64 - 1)


def _bind_traceback_settings(enabled: bool) -> None:
    """Mirror traceback preference into ``lib_cli_exit_tools`` config."""

    lib_cli_exit_tools.config.traceback = enabled
    lib_cli_exit_tools.config.traceback_force_color = enabled


def _resolve_version() -> str:
    """Return the installed package version, ``"0.0.0"`` when not installed."""

    try:
        return metadata.version("aft_sim")
    except metadata.PackageNotFoundError:
        return "0.0.0"


def _describe_distribution() -> Iterable[str]:
    """Yield human-readable metadata lines for the distribution."""

    meta = _load_distribution_metadata()
    if meta is None:
        yield "aft_sim (metadata unavailable)"
        return
    yield f"Info for {meta.get('Name', 'aft_sim')}:"
    yield f"  Version         : {meta.get('Version', _resolve_version())}"
    yield f"  Requires-Python : {meta.get('Requires-Python', '>=3.10')}"
    summary = meta.get("Summary")
    if summary:
        yield f"  Summary         : {summary}"
    for entry in meta.get_all("Project-URL") or []:
        yield f"  {entry}"


def _load_distribution_metadata() -> metadata.PackageMetadata | None:
    try:
        return metadata.metadata("aft_sim")
    except metadata.PackageNotFoundError:
        return None


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Translate library errors into the documented exit codes.

    With ``--traceback`` the error propagates so ``lib_cli_exit_tools`` can
    print the full stack instead.
    """

    try:
        yield
    except (ValidationError, InvalidAxis) as exc:
        _fail(exc, EXIT_VALIDATION)
    except InvalidFormat as exc:
        _fail(exc, EXIT_PARSE)


def _fail(exc: Exception, code: int) -> None:
    if lib_cli_exit_tools.config.traceback:
        raise exc
    click.echo(f"Error: {exc}", err=True)
    raise SystemExit(code)


@click.group(
    help="Deterministic simulator for quorum replication with artificial redundancy",
    context_settings=CLICK_CONTEXT_SETTINGS,
    invoke_without_command=False,
)
@click.version_option(
    version=_resolve_version(),
    prog_name="aft_sim",
    message="aft_sim version %(version)s",
)
@click.option(
    "--traceback/--no-traceback",
    is_flag=True,
    default=False,
    help="Show full Python traceback on errors",
)
@click.pass_context
def cli(ctx: click.Context, traceback: bool) -> None:
    """Root command configuring traceback handling for all subcommands.

    Side Effects
        Mutates ``lib_cli_exit_tools.config.traceback`` and
        ``lib_cli_exit_tools.config.traceback_force_color``.
    """

    ctx.ensure_object(dict)
    ctx.obj["traceback"] = traceback
    _bind_traceback_settings(traceback)


@cli.command("info", context_settings=CLICK_CONTEXT_SETTINGS)
def cli_info() -> None:
    """Print distribution metadata so users can confirm installation."""

    for line in _describe_distribution():
        click.echo(line)


@cli.command("run", context_settings=CLICK_CONTEXT_SETTINGS)
@click.argument("scenario", metavar="FILE")
@click.option(
    "--csv",
    "csv_path",
    type=click.Path(path_type=Path, dir_okay=False, writable=True),
    default=None,
    help="Write the per-request decision table to this path",
)
@click.option("--seed", type=_SEED_RANGE, default=None, help="Override the scenario seed")
@click.option("--indent", type=int, default=None, help="Pretty-print the metrics JSON")
def cli_run(scenario: str, csv_path: Optional[Path], seed: Optional[int], indent: Optional[int]) -> None:
    """Replay FILE (a path or a bundled scenario name) and print its metrics as JSON.

    Examples
    --------
    >>> from click.testing import CliRunner
    >>> result = CliRunner().invoke(cli, ["run", "par_exact"])
    >>> json.loads(result.output)["commit_rate"]
    1.0
    """

    with _exit_codes():
        loaded = core.load_scenario(scenario, seed=seed)
        result = core.run_scenario(loaded)
        if csv_path is not None:
            core.write_decisions_csv(result, csv_path)
    click.echo(json.dumps(dataclasses.asdict(result.metrics), indent=indent))


@cli.command("sweep", context_settings=CLICK_CONTEXT_SETTINGS)
@click.argument("scenario", metavar="FILE")
@click.option("--axis", required=True, help="Parameter to vary: epsilon, alpha, drop_prob or f")
@click.option("--values", "values_text", required=True, help="Comma-separated axis values")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker processes (default AFT_SIM_WORKERS or 1)")
@click.option("--seed", type=_SEED_RANGE, default=None, help="Override the scenario seed")
@click.option(
    "--csv",
    "csv_path",
    type=click.Path(path_type=Path, dir_okay=False, writable=True),
    default=None,
    help="Write the table to this path instead of stdout",
)
def cli_sweep(
    scenario: str,
    axis: str,
    values_text: str,
    workers: Optional[int],
    seed: Optional[int],
    csv_path: Optional[Path],
) -> None:
    """Run FILE once per value of ``--axis``; rows come out in the order given."""

    with _exit_codes():
        settings = core.resolve_run_settings(seed=seed, workers=workers)
        loaded = core.load_scenario(scenario, seed=seed)
        chosen = core.parse_axis(axis)
        rows = core.sweep(loaded, chosen, core.parse_axis_values(chosen, values_text), workers=settings.workers)
        table = core.sweep_csv(chosen, rows)
    _emit_table(table, csv_path)


@cli.command("qualify", context_settings=CLICK_CONTEXT_SETTINGS)
@click.option(
    "--samples",
    type=click.Path(path_type=Path, exists=True, dir_okay=False, readable=True),
    required=True,
    help="CSV of paired (x, y) samples",
)
@click.option("--transform", "transform_text", required=True, help="Transform spec, e.g. 'affine(5/9, -160/9)'")
@click.option("--alpha", type=float, required=True, help="Required certainty in (0, 1]")
@click.option("--epsilon", type=float, required=True, help="Target error bound")
@click.option(
    "--space",
    type=click.Choice(SPACE_CHOICES, case_sensitive=False),
    default="absolute_difference",
    show_default=True,
    help="Metric space used for residuals",
)
@click.option("--step", type=float, default=0.01, show_default=True, help="Epsilon grid step")
def cli_qualify(samples: Path, transform_text: str, alpha: float, epsilon: float, space: str, step: float) -> None:
    """Certify a transform against paired samples and print the outcome as JSON.

    A rejection is reported with exit code 0 together with the best
    ``(alpha, epsilon)`` the samples support.
    """

    with _exit_codes():
        outcome = core.qualify_samples(
            samples,
            transform_text,
            alpha=alpha,
            epsilon=epsilon,
            space=space.lower(),
            epsilon_step=step,
        )
    click.echo(json.dumps(_describe_outcome(outcome)))


@cli.command("examples", context_settings=CLICK_CONTEXT_SETTINGS)
@click.option(
    "--destination",
    type=click.Path(path_type=Path, file_okay=False, dir_okay=True, resolve_path=True),
    required=True,
    help="Directory that will receive the scenario files",
)
@click.option(
    "--force/--no-force",
    default=False,
    help="Overwrite existing scenario files if set",
    show_default=True,
)
def cli_examples(destination: Path, force: bool) -> None:
    """Write the bundled scenarios under *destination* and list what was written."""

    created = write_examples(destination, force=force)
    click.echo(_format_paths(created))


def _emit_table(table: str, csv_path: Optional[Path]) -> None:
    if csv_path is None:
        click.echo(table, nl=False)
        return
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    csv_path.write_text(table, encoding="utf-8", newline="")


def _describe_outcome(outcome: ArtiraTriple | Rejection) -> dict[str, object]:
    """Return a JSON-ready summary of a qualification outcome.

    >>> _describe_outcome(Rejection(0.5, 1.0, 0.9, 1.0))
    {'qualified': False, 'best_alpha': 0.5, 'best_epsilon': 1.0, 'target_alpha': 0.9, 'target_epsilon': 1.0}
    """

    if isinstance(outcome, Rejection):
        return {"qualified": False, **dataclasses.asdict(outcome)}
    return {
        "qualified": True,
        "model": outcome.model.value,
        "alpha": outcome.alpha,
        "epsilon": outcome.epsilon,
    }


def _format_paths(paths: Iterable[Path]) -> str:
    """Return a JSON list of *paths*."""

    return json.dumps([str(path) for path in paths], indent=2)


def main(argv: Optional[Sequence[str]] = None, *, restore_traceback: bool = True) -> int:
    """Execute the CLI with shared exit handling and return the exit code."""

    previous_traceback = getattr(lib_cli_exit_tools.config, "traceback", False)
    previous_force_color = getattr(lib_cli_exit_tools.config, "traceback_force_color", False)
    try:
        try:
            return lib_cli_exit_tools.run_cli(
                cli,
                argv=list(argv) if argv is not None else None,
                prog_name="aft_sim",
            )
        except BaseException as exc:  # noqa: BLE001 - funnel through shared printers
            lib_cli_exit_tools.print_exception_message(
                trace_back=lib_cli_exit_tools.config.traceback,
                length_limit=(
                    _TRACEBACK_VERBOSE_LIMIT if lib_cli_exit_tools.config.traceback else _TRACEBACK_SUMMARY_LIMIT
                ),
            )
            return lib_cli_exit_tools.get_system_exit_code(exc)
    finally:
        if restore_traceback:
            lib_cli_exit_tools.config.traceback = previous_traceback
            lib_cli_exit_tools.config.traceback_force_color = previous_force_color


if __name__ == "__main__":  # pragma: no cover - exercised via console entry point
    raise SystemExit(main(sys.argv[1:]))
