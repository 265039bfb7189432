"""Structured logging helpers for simulation runs.

Purpose
    Give every diagnostic the same shape: an event name as the message and a
    ``context`` mapping with the active run identifier and event fields.

Contents
    - ``RUN_ID``: context variable holding the active run identifier.
    - ``get_logger``: the package logger (silent until a handler is attached).
    - ``bind_run_id``: binds or clears the active run identifier.
    - ``log_debug`` / ``log_info`` / ``log_warning`` / ``log_error``: emit
      structured entries through one private emitter.
    - ``make_event``: builder for stable event payloads.

System Integration
    Used by the adapters and the composition root. Domain and application
    code never log; ``core`` reports what they decided.
"""

from __future__ import annotations

import logging
from contextvars import ContextVar
from typing import Any, Final, Mapping

RUN_ID: ContextVar[str | None] = ContextVar("aft_sim_run_id", default=None)
"""Identifier of the run whose events are being emitted."""

_LOGGER: Final[logging.Logger] = logging.getLogger("aft_sim")
_LOGGER.addHandler(logging.NullHandler())


def get_logger() -> logging.Logger:
    """Expose the package logger so applications may attach handlers."""

    return _LOGGER


def bind_run_id(run_id: str | None) -> None:
    """Bind or clear the active run identifier.

    Examples
    --------
    >>> bind_run_id('par_exact@0')
    >>> RUN_ID.get()
    'par_exact@0'
    >>> bind_run_id(None)
    >>> RUN_ID.get() is None
    True
    """

    RUN_ID.set(run_id)


def log_debug(message: str, **fields: Any) -> None:
    _emit(logging.DEBUG, message, fields)


def log_info(message: str, **fields: Any) -> None:
    _emit(logging.INFO, message, fields)


def log_warning(message: str, **fields: Any) -> None:
    _emit(logging.WARNING, message, fields)


def log_error(message: str, **fields: Any) -> None:
    _emit(logging.ERROR, message, fields)


def make_event(
    layer: str,
    scenario: str | None,
    payload: Mapping[str, Any] | None = None,
) -> dict[str, Any]:
    """Build a structured payload naming the emitting layer and scenario.

    Examples
    --------
    >>> make_event('sweep', 'sar_medical', {'axis': 'epsilon'})
    {'layer': 'sweep', 'scenario': 'sar_medical', 'axis': 'epsilon'}
    """

    event: dict[str, Any] = {"layer": layer, "scenario": scenario}
    if payload:
        event |= dict(payload)
    return event


def _emit(level: int, message: str, fields: Mapping[str, Any]) -> None:
    """Send one entry with the run context; skipped when *level* is disabled."""

    if not _LOGGER.isEnabledFor(level):
        return
    context: dict[str, Any] = {"run_id": RUN_ID.get()}
    context.update(fields)
    _LOGGER.log(level, message, extra={"context": context})
