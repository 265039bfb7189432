"""Composition-root tests: seed layering, scenario loading, replay, sweeps and qualification."""

from __future__ import annotations

import logging
from pathlib import Path

import pytest

from aft_sim import core
from aft_sim.domain.artira import ArtiraTriple, PairedSamples, Rejection, ReplicationModel
from aft_sim.domain.errors import NotFound, ValidationError
from aft_sim.examples import bundled_scenario_text


def test_seed_layers_follow_flag_file_env_default(clean_env) -> None:
    text = bundled_scenario_text("par_exact")
    without_seed = text.replace("seed = 1\n", "")
    assert core.load_scenario_text(without_seed, environ={}).seed == 0
    assert core.load_scenario_text(without_seed, environ={"AFT_SIM_SEED": "21"}).seed == 21
    assert core.load_scenario_text(text, environ={"AFT_SIM_SEED": "21"}).seed == 1
    assert core.load_scenario_text(text, seed=8, environ={"AFT_SIM_SEED": "21"}).seed == 8


def test_environment_is_read_when_no_mapping_is_given(clean_env) -> None:
    clean_env.setenv("AFT_SIM_WORKERS", "3")
    settings = core.resolve_run_settings()
    assert (settings.workers, settings.sources["workers"]) == (3, "env")


def test_bad_environment_values_are_validation_errors() -> None:
    with pytest.raises(ValidationError, match="workers from env must be a positive integer"):
        core.resolve_run_settings(environ={"AFT_SIM_WORKERS": "0"})


def test_load_scenario_prefers_files_over_bundled_names(tmp_path: Path, monkeypatch) -> None:
    monkeypatch.chdir(tmp_path)
    (tmp_path / "par_exact").write_text(bundled_scenario_text("par_exact").replace("seed = 1", "seed = 44"), encoding="utf-8")
    assert core.load_scenario("par_exact", environ={}).seed == 44
    assert core.load_scenario("par_celsius", environ={}).name == "par_celsius"
    with pytest.raises(NotFound):
        core.load_scenario(tmp_path / "nowhere.scn", environ={})


def test_run_scenario_logs_its_lifecycle(caplog) -> None:
    caplog.set_level(logging.DEBUG, logger="aft_sim")
    scenario = core.load_scenario("par_exact", environ={})
    result = core.run_scenario(scenario)
    messages = [record.getMessage() for record in caplog.records]
    assert messages.count("round_decided") == len(result.decisions)
    finished = next(record for record in caplog.records if record.getMessage() == "run_finished")
    assert finished.context["run_id"] == "par_exact@1"
    assert finished.context["commit_rate"] == 1.0
    assert finished.context["layer"] == "run"


def test_run_id_is_released_after_a_run() -> None:
    from aft_sim.observability import RUN_ID

    core.run_scenario(core.load_scenario("par_exact", environ={}))
    assert RUN_ID.get() is None


def test_sweep_rows_match_with_or_without_workers() -> None:
    scenario = core.load_scenario("par_exact", environ={})
    serial = core.sweep(scenario, "drop_prob", [0.0, 0.3, 1.0])
    parallel = core.sweep(scenario, "drop_prob", [0.0, 0.3, 1.0], workers=2)
    assert serial == parallel
    assert [value for value, _ in serial] == [0.0, 0.3, 1.0]
    assert serial[0][1].commit_rate == 1.0
    assert serial[2][1].commit_rate == 0.0


def test_sweep_csv_has_one_row_per_value() -> None:
    scenario = core.load_scenario("par_exact", environ={})
    table = core.sweep_csv("epsilon", core.sweep(scenario, "epsilon", [0.0, 0.5]))
    lines = table.splitlines()
    assert lines[0].startswith("epsilon,requests,committed,commit_rate")
    assert [line.split(",")[0] for line in lines[1:]] == ["0", "0.5"]


def test_qualify_from_a_sample_file(tmp_path: Path) -> None:
    path = tmp_path / "temps.csv"
    path.write_text("fahrenheit,celsius\n212,100\n32,0\n-40,-40\n", encoding="utf-8")
    outcome = core.qualify_samples(path, "affine(5/9, -160/9)", alpha=1.0, epsilon=0.0)
    assert isinstance(outcome, ArtiraTriple)
    assert outcome.model is ReplicationModel.PAR


def test_rejection_is_logged_as_a_warning(caplog) -> None:
    caplog.set_level(logging.INFO, logger="aft_sim")
    samples = PairedSamples.of([(1, 2), (2, 4), (3, 7)])
    outcome = core.qualify_samples(samples, "identity", alpha=1.0, epsilon=0.5, space="absolute_difference")
    assert isinstance(outcome, Rejection)
    (record,) = [record for record in caplog.records if record.getMessage() == "artira_rejected"]
    assert record.levelno == logging.WARNING


def test_decisions_reach_disk(tmp_path: Path) -> None:
    result = core.run_scenario(core.load_scenario("par_celsius", environ={}))
    written = core.write_decisions_csv(result, tmp_path / "celsius.csv")
    assert written.read_text(encoding="utf-8") == core.decisions_csv(result)
    assert len(written.read_text(encoding="utf-8").splitlines()) == len(result.decisions) + 1


def test_emitted_scenario_reloads() -> None:
    scenario = core.load_scenario("sar_medical", environ={})
    assert core.load_scenario_text(core.emit_scenario(scenario), environ={}) == scenario
