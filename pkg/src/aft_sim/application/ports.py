"""Application-layer ports describing collaborator responsibilities.

Purpose
-------
Define the structural contracts that transforms, simulated nodes and adapters
satisfy so orchestration code depends on behaviour, not on concrete classes.

Contents
--------
* :class:`Transform` – a decoder or coder function with a draw counter.
* :class:`ExactTransform` – a rational transform that can hand over
  unrounded (:data:`Exact`) results.
* :class:`Acceptor` – a simulated node that executes, answers and fails.
* :class:`ScenarioCodec` – turns scenario text into a ``Scenario`` and back.
* :class:`DecisionSink` – persists per-request decisions.
* :class:`EnvLoader` – materialises namespaced process environment variables.

System Role
-----------
Each adapter implements one protocol; contract tests in
``tests/adapters/test_port_contracts.py`` keep the inversion enforceable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Protocol, Sequence, Union, runtime_checkable

from ..domain.artira import TransformSpec
from ..domain.metric import Value
from ..domain.quorum import Decision
from ..domain.scenario import FaultEvent, Scenario


@runtime_checkable
class Transform(Protocol):
    """A transform ``F`` or ``F⁻¹`` over :data:`~aft_sim.domain.metric.Value`.

    Deterministic transforms ignore *draw*; stochastic ones derive their
    randomness from it so replays are exact.
    """

    spec: TransformSpec

    def apply(self, value: Value, draw: int) -> Value:
        """Return the transformed value or raise ``DomainError``."""
        ...


Exact = Union[Fraction, tuple[Fraction, ...]]
"""Unrounded output of a rational transform, kept as an artira's coded state."""


@runtime_checkable
class ExactTransform(Transform, Protocol):
    """A transform that can skip its final rounding step."""

    def exact(self, value: Value | Exact) -> Exact:
        """Return the unrounded result; ``apply`` rounds it once."""
        ...


@runtime_checkable
class Acceptor(Protocol):
    """A simulated node as seen by the round coordinator."""

    node_id: int

    @property
    def is_up(self) -> bool: ...

    def execute(self, value: Value) -> Value | None:
        """Apply a write and return the post-execution state (``None`` when it cannot)."""
        ...

    def read_state(self) -> Value | None:
        """Return the current state as exposed to readers."""
        ...

    def inject(self, fault: FaultEvent) -> None:
        """Apply a crash, recovery or Byzantine toggle."""
        ...


@runtime_checkable
class ScenarioCodec(Protocol):
    """Parse and emit the scenario text format."""

    def parse(self, text: str) -> Scenario:
        """Return a validated scenario or raise ``ParseError``/``ValidationError``."""
        ...

    def emit(self, scenario: Scenario) -> str:
        """Return canonical text that parses back to *scenario*."""
        ...


@runtime_checkable
class DecisionSink(Protocol):
    """Persist decisions (one row per request)."""

    def write(self, decisions: Sequence[Decision]) -> None: ...


@runtime_checkable
class EnvLoader(Protocol):
    """Read namespaced environment variables into a flat mapping."""

    def load(self, prefix: str) -> Mapping[str, object]: ...
