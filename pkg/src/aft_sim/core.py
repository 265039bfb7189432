"""Composition root expressed as a string of small orchestration phrases.

Purpose
    Wire adapters, settings and the simulator together behind a handful of
    functions that the CLI and library users call.

Contents
    - ``resolve_run_settings``: default → env → flag layering of seed and
      worker count.
    - ``load_scenario`` / ``load_scenario_text``: parse a file, a bundled
      scenario or raw text with the effective seed applied.
    - ``run_scenario``: replay a scenario under a bound run identifier.
    - ``sweep``: one metrics row per axis value, optionally in worker
      processes.
    - ``qualify_samples``: certify a transform against paired samples.
    - ``emit_scenario`` / ``decisions_csv`` / ``sweep_csv``: text renderings.
    - ``write_decisions_csv``: persist the per-request table.

System Integration
    Outermost ring next to the CLI. Application code never logs; this module
    reports what it decided through :mod:`aft_sim.observability`.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from pathlib import Path
from typing import Mapping, Sequence

from .adapters.csv_io.default import CsvDecisionSink, load_samples_csv, render_decisions_csv, render_sweep_csv
from .adapters.env.default import ENV_PREFIX, DefaultEnvLoader
from .adapters.scenario_file.default import emit_scenario as _emit_scenario
from .adapters.scenario_file.default import parse_scenario, parse_transform
from .application.redundancy import qualify_artira
from .application.settings import RunSettings, resolve_settings
from .application.simnet.engine import run
from .application.sweep import SweepAxis, parse_axis, parse_axis_values, sweep_row
from .domain.artira import ArtiraTriple, PairedSamples, Rejection, TransformSpec
from .domain.errors import NotFound
from .domain.metric import MetricSpace
from .domain.scenario import Metrics, RunResult, Scenario
from .examples.bundled import bundled_scenario_names, bundled_scenario_text
from .observability import bind_run_id, log_debug, log_info, log_warning, make_event

__all__ = [
    "resolve_run_settings",
    "load_scenario",
    "load_scenario_text",
    "run_scenario",
    "sweep",
    "parse_axis",
    "parse_axis_values",
    "qualify_samples",
    "emit_scenario",
    "decisions_csv",
    "write_decisions_csv",
    "sweep_csv",
]


def resolve_run_settings(
    *,
    seed: int | None = None,
    workers: int | None = None,
    environ: Mapping[str, str] | None = None,
) -> RunSettings:
    """Layer defaults, ``AFT_SIM_*`` variables and explicit arguments (highest wins).

    Examples
    --------
    >>> resolve_run_settings(environ={"AFT_SIM_SEED": "11"}).seed
    11
    >>> resolve_run_settings(seed=3, environ={"AFT_SIM_SEED": "11"}).sources["seed"]
    'flag'
    """

    env_layer = DefaultEnvLoader(environ=environ).load(ENV_PREFIX)
    settings = resolve_settings([("env", env_layer), ("flag", {"seed": seed, "workers": workers})])
    log_debug("settings_resolved", seed=settings.seed, workers=settings.workers, sources=dict(settings.sources))
    return settings


def load_scenario_text(
    text: str,
    *,
    seed: int | None = None,
    environ: Mapping[str, str] | None = None,
    source: str | None = None,
) -> Scenario:
    """Parse *text* and apply the seed precedence flag > file > env > default.

    Examples
    --------
    >>> from aft_sim.examples import bundled_scenario_text
    >>> load_scenario_text(bundled_scenario_text("par_exact"), environ={}).seed
    1
    >>> load_scenario_text(bundled_scenario_text("par_exact"), seed=99, environ={}).seed
    99
    """

    settings = resolve_run_settings(seed=seed, environ=environ)
    scenario = parse_scenario(text, fallback_seed=settings.seed, source=source)
    effective = settings.seed_for(scenario.seed)
    if effective != scenario.seed:
        scenario = dataclasses.replace(scenario, seed=effective)
    return scenario


def load_scenario(
    path_or_name: str | Path,
    *,
    seed: int | None = None,
    environ: Mapping[str, str] | None = None,
) -> Scenario:
    """Load a scenario file, or a bundled scenario when *path_or_name* names one.

    Raises ``NotFound`` when neither exists.
    """

    path = Path(path_or_name)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        source = str(path)
    elif str(path_or_name) in bundled_scenario_names():
        text = bundled_scenario_text(str(path_or_name))
        source = f"bundled:{path_or_name}"
    else:
        raise NotFound(f"scenario file not found: {path_or_name}")
    return load_scenario_text(text, seed=seed, environ=environ, source=source)


def run_scenario(scenario: Scenario) -> RunResult:
    """Replay *scenario* and log its lifecycle under run id ``<name>@<seed>``.

    Commit failures are part of the result, never exceptions.
    """

    bind_run_id(f"{scenario.name}@{scenario.seed}")
    try:
        log_info("run_started", **make_event("run", scenario.name, {"requests": len(scenario.workload)}))
        for node in scenario.nodes:
            for fault in node.faults:
                log_debug("fault_injected", node=node.node_id, at_time=fault.at_time, kind=fault.kind.value)
        result = run(scenario)
        for decision in result.decisions:
            log_debug(
                "round_decided",
                request=decision.request_index,
                kind=decision.kind.value,
                outcome=decision.outcome.value,
                match_size=decision.match_size,
            )
        metrics = result.metrics
        log_info(
            "run_finished",
            **make_event(
                "run",
                scenario.name,
                {
                    "commit_rate": metrics.commit_rate,
                    "mean_abs_error": metrics.mean_abs_error,
                    "messages_sent": metrics.messages_sent,
                },
            ),
        )
        return result
    finally:
        bind_run_id(None)


def sweep(
    scenario: Scenario,
    axis: str | SweepAxis,
    values: Sequence[float | int],
    *,
    workers: int = 1,
) -> list[tuple[float | int, Metrics]]:
    """Return one metrics row per value, in the order of *values*.

    With ``workers > 1`` rows run in separate processes; every row still
    uses the scenario's own seed.
    """

    chosen = axis if isinstance(axis, SweepAxis) else parse_axis(axis)
    if workers > 1 and len(values) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            metrics = list(pool.map(sweep_row, repeat(scenario), repeat(chosen), values))
    else:
        metrics = [sweep_row(scenario, chosen, value) for value in values]
    rows = list(zip(values, metrics))
    for value, row in rows:
        log_debug(
            "sweep_row_finished",
            **make_event("sweep", scenario.name, {"axis": chosen.value, "value": value, "commit_rate": row.commit_rate}),
        )
    return rows


def qualify_samples(
    samples: PairedSamples | str | Path,
    transform: TransformSpec | str,
    *,
    alpha: float,
    epsilon: float,
    space: MetricSpace | str = MetricSpace.ABSOLUTE_DIFFERENCE,
    epsilon_step: float = 0.01,
) -> ArtiraTriple | Rejection:
    """Certify *transform* against *samples* (a ``PairedSamples`` or a CSV path).

    *space* may be given by its scenario-file name, e.g. ``"discrete01"``.

    A rejection is a normal result carrying the best achievable pair.

    Examples
    --------
    >>> samples = PairedSamples.of([(212, 100), (32, 0), (-40, -40)])
    >>> qualify_samples(samples, "affine(5/9, -160/9)", alpha=1.0, epsilon=0.0).model.value
    'PAR'
    """

    pairs = samples if isinstance(samples, PairedSamples) else load_samples_csv(samples)
    spec = transform if isinstance(transform, TransformSpec) else parse_transform(transform)
    outcome = qualify_artira(pairs, spec, alpha, epsilon, MetricSpace(space), epsilon_step)
    if isinstance(outcome, Rejection):
        log_warning(
            "artira_rejected",
            transform=spec.kind.value,
            best_alpha=outcome.best_alpha,
            best_epsilon=outcome.best_epsilon,
        )
    else:
        log_info(
            "artira_qualified",
            transform=spec.kind.value,
            alpha=outcome.alpha,
            epsilon=outcome.epsilon,
            model=outcome.model.value,
        )
    return outcome


def emit_scenario(scenario: Scenario) -> str:
    """Canonical scenario text (parses back to an equal scenario)."""

    return _emit_scenario(scenario)


def decisions_csv(result: RunResult) -> str:
    """Per-request CSV of *result*."""

    return render_decisions_csv(result.decisions)


def write_decisions_csv(result: RunResult, path: str | Path) -> Path:
    """Write the per-request CSV of *result* to *path* and return the path."""

    sink = CsvDecisionSink(path)
    sink.write(result.decisions)
    return sink.path


def sweep_csv(axis: str | SweepAxis, rows: Sequence[tuple[float | int, Metrics]]) -> str:
    """Sweep table whose first column is named after *axis*."""

    name = axis.value if isinstance(axis, SweepAxis) else axis
    return render_sweep_csv(name, rows)
