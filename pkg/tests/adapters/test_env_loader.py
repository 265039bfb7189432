"""Environment loader tests covering the ``AFT_SIM_`` namespace and value coercion."""

from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from aft_sim.adapters.env.default import ENV_PREFIX, DefaultEnvLoader


def test_only_namespaced_variables_are_loaded() -> None:
    """Foreign variables and the bare prefix never leak into the settings layer."""

    environ = {"AFT_SIM_SEED": "42", "AFT_SIM_WORKERS": "4", "AFT_SIMULATOR": "x", "AFT_SIM_": "y", "HOME": "/root"}
    assert DefaultEnvLoader(environ=environ).load(ENV_PREFIX) == {"seed": 42, "workers": 4}


def test_values_are_coerced_to_primitives() -> None:
    environ = {"AFT_SIM_A": "true", "AFT_SIM_B": "2.5", "AFT_SIM_C": "none", "AFT_SIM_D": "many"}
    assert DefaultEnvLoader(environ=environ).load("AFT_SIM_") == {"a": True, "b": 2.5, "c": None, "d": "many"}


def test_process_environment_is_the_default(monkeypatch) -> None:
    monkeypatch.setenv("AFT_SIM_SEED", "17")
    assert DefaultEnvLoader().load()["seed"] == 17


@given(st.integers(min_value=0, max_value=2**64 - 1))
def test_any_seed_survives_the_round_through_text(seed: int) -> None:
    loader = DefaultEnvLoader(environ={"AFT_SIM_SEED": str(seed)})
    assert loader.load()["seed"] == seed
