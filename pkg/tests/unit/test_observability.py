"""Unit tests for structured logging utilities in ``observability``.

Validates the null handler, run-id binding, and event construction behaviour
that downstream consumers attach handlers to.
"""

from __future__ import annotations

import logging

import pytest

from aft_sim import bind_run_id, get_logger
from aft_sim.observability import RUN_ID, log_debug, log_info, make_event


def test_null_handler_present() -> None:
    """Package logger should always include a NullHandler to avoid surprises."""

    logger = get_logger()
    assert any(isinstance(handler, logging.NullHandler) for handler in logger.handlers)


def test_run_id_in_log(caplog: pytest.LogCaptureFixture) -> None:
    """Structured logs should include the bound run identifier and contextual fields."""

    caplog.set_level(logging.INFO, logger="aft_sim")
    bind_run_id("par_exact@1")
    log_info("run_finished", commit_rate=1.0, scenario="par_exact")
    record = caplog.records[-1]
    assert record.getMessage() == "run_finished"
    assert getattr(record, "context") == {"run_id": "par_exact@1", "commit_rate": 1.0, "scenario": "par_exact"}


def test_disabled_level_emits_nothing(caplog: pytest.LogCaptureFixture) -> None:
    caplog.set_level(logging.INFO, logger="aft_sim")
    log_debug("round_decided", request=0)
    assert not [record for record in caplog.records if record.getMessage() == "round_decided"]


def test_bind_run_id_clears_context() -> None:
    """Clearing the run ID should reset the context variable to None."""

    bind_run_id("temp@0")
    bind_run_id(None)
    assert RUN_ID.get() is None


def test_make_event_merges_optional_payload() -> None:
    """make_event should merge optional metadata without mutating base keys."""

    event = make_event("run", "sar_medical", {"requests": 3})
    assert event == {"layer": "run", "scenario": "sar_medical", "requests": 3}
    assert make_event("sweep", None) == {"layer": "sweep", "scenario": None}
