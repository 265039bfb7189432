"""Public API surface for ``aft_sim``.

Purpose
-------
Expose the curated symbols consumers need: scenario loading and replay,
sweeps, ARTIRA qualification, the core value objects and the error
taxonomy.

Contents
--------
* :mod:`aft_sim.core` orchestration (``load_scenario``, ``run_scenario``,
  ``sweep``, ``qualify_samples`` …)
* Redundancy analysis and consensus primitives re-exported from the
  application layer
* Value objects (:class:`Scenario`, :class:`Decision`, :class:`Metrics`,
  :class:`TransformSpec`, :class:`QuorumConfig` …)
* Error hierarchy rooted at :class:`AftError`
* Observability bindings (:func:`bind_run_id`, :func:`get_logger`)
"""

from __future__ import annotations

from .application.artira import Adapter
from .application.consensus import aft_match, aft_value, detect_fault, ft_match, ft_value, learn_read, learn_write
from .application.protocol import run_phase_read, run_phase_write
from .application.redundancy import (
    build_action_map,
    check_partial_redundancy,
    check_redundancy,
    classify_relation,
    estimate_beta,
    estimate_correlation,
    qualify_artira,
    reverse_action_map,
)
from .core import (
    decisions_csv,
    emit_scenario,
    load_scenario,
    load_scenario_text,
    qualify_samples,
    resolve_run_settings,
    run_scenario,
    sweep,
    sweep_csv,
    write_decisions_csv,
)
from .domain.artira import ArtiraTriple, PairedSamples, Rejection, ReplicationModel, TransformSpec
from .domain.errors import (
    AftError,
    DomainError,
    InvalidAxis,
    InvalidFormat,
    KindMismatch,
    NotFound,
    ParseError,
    ValidationError,
)
from .domain.metric import MetricSpace, Symbol, distance, in_neighborhood
from .domain.quorum import Decision, FaultModel, Policy, PolicyKind, QuorumConfig, Response, WriteMode
from .domain.scenario import Metrics, RunResult, Scenario
from .examples import bundled_scenario_names, bundled_scenario_text, write_examples
from .observability import bind_run_id, get_logger

__all__ = [
    "load_scenario",
    "load_scenario_text",
    "run_scenario",
    "sweep",
    "sweep_csv",
    "qualify_samples",
    "resolve_run_settings",
    "emit_scenario",
    "decisions_csv",
    "write_decisions_csv",
    "bundled_scenario_names",
    "bundled_scenario_text",
    "write_examples",
    "Adapter",
    "aft_match",
    "aft_value",
    "ft_match",
    "ft_value",
    "learn_write",
    "learn_read",
    "detect_fault",
    "run_phase_write",
    "run_phase_read",
    "estimate_correlation",
    "check_redundancy",
    "estimate_beta",
    "check_partial_redundancy",
    "build_action_map",
    "reverse_action_map",
    "classify_relation",
    "qualify_artira",
    "ArtiraTriple",
    "PairedSamples",
    "Rejection",
    "ReplicationModel",
    "TransformSpec",
    "MetricSpace",
    "Symbol",
    "distance",
    "in_neighborhood",
    "Decision",
    "FaultModel",
    "Policy",
    "PolicyKind",
    "QuorumConfig",
    "Response",
    "WriteMode",
    "Metrics",
    "RunResult",
    "Scenario",
    "AftError",
    "DomainError",
    "InvalidAxis",
    "InvalidFormat",
    "KindMismatch",
    "NotFound",
    "ParseError",
    "ValidationError",
    "bind_run_id",
    "get_logger",
]
