from __future__ import annotations

import pytest

from aft_sim.application.settings import DEFAULT_SETTINGS, RunSettings, merge_layers, resolve_settings
from aft_sim.domain.errors import ValidationError


def test_defaults_stand_alone() -> None:
    settings = resolve_settings([])
    assert (settings.seed, settings.workers) == (DEFAULT_SETTINGS["seed"], DEFAULT_SETTINGS["workers"])
    assert dict(settings.sources) == {"seed": "default", "workers": "default"}


def test_higher_layers_win_key_by_key() -> None:
    settings = resolve_settings([("env", {"seed": 11, "workers": 2}), ("flag", {"seed": 3})])
    assert (settings.seed, settings.workers) == (3, 2)
    assert dict(settings.sources) == {"seed": "flag", "workers": "env"}


def test_unknown_keys_and_nones_are_ignored() -> None:
    merged, sources = merge_layers([("env", {"colour": "red", "seed": None})])
    assert merged == {} and sources == {}


@pytest.mark.parametrize(
    ("layer", "message"),
    [
        ({"seed": -1}, "seed from env must be a 64-bit unsigned integer, got -1"),
        ({"seed": 2**64}, f"seed from env must be a 64-bit unsigned integer, got {2**64}"),
        ({"seed": True}, "seed from env must be a 64-bit unsigned integer, got True"),
        ({"workers": 0}, "workers from env must be a positive integer, got 0"),
        ({"workers": 2.5}, "workers from env must be a positive integer, got 2.5"),
    ],
)
def test_bad_values_name_their_layer(layer: dict[str, object], message: str) -> None:
    with pytest.raises(ValidationError) as caught:
        resolve_settings([("env", layer)])
    assert caught.value.problems == (message,)


def test_file_seed_sits_between_env_and_flag() -> None:
    from_env = RunSettings(seed=7, sources={"seed": "env"})
    from_flag = RunSettings(seed=9, sources={"seed": "flag"})
    default = RunSettings()
    assert from_env.seed_for(4) == 4
    assert from_env.seed_for(None) == 7
    assert from_flag.seed_for(4) == 9
    assert default.seed_for(None) == 0
