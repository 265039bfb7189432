from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT_PATH = Path(__file__).resolve().parents[1]
SRC_PATH = ROOT_PATH / "src"
for entry in (SRC_PATH, ROOT_PATH):
    if str(entry) not in sys.path:
        sys.path.insert(0, str(entry))


@pytest.fixture(autouse=True)
def _clear_run_id():
    """Keep the run identifier from leaking between tests."""

    from aft_sim.observability import bind_run_id

    yield
    bind_run_id(None)


@pytest.fixture()
def clean_env(monkeypatch: pytest.MonkeyPatch) -> pytest.MonkeyPatch:
    """Remove every ``AFT_SIM_*`` variable so seeds come from files or defaults."""

    import os

    for key in list(os.environ):
        if key.startswith("AFT_SIM_"):
            monkeypatch.delenv(key, raising=False)
    return monkeypatch
