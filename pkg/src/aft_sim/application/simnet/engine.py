"""Replay a scenario's workload and aggregate the decisions into metrics."""

from __future__ import annotations

import dataclasses
import math
from typing import Sequence

from ...domain.errors import KindMismatch
from ...domain.metric import Value, distance
from ...domain.quorum import Decision, RequestKind
from ...domain.scenario import Metrics, RunMode, RunResult, Scenario, ensure_valid
from .cluster import Cluster
from .network import ChannelCounters

__all__ = ["run", "summarize", "initial_reference"]


def run(scenario: Scenario) -> RunResult:
    """Execute *scenario* end to end; identical inputs give identical results.

    Raises ``ValidationError`` listing every problem before any round runs.

    Examples
    --------
    >>> from aft_sim.domain.quorum import QuorumConfig
    >>> from aft_sim.domain.scenario import NodeSpec, WorkloadOp
    >>> scenario = Scenario(
    ...     "demo", 0, QuorumConfig.sized(1), tuple(NodeSpec(i, 0.0) for i in range(3)),
    ...     (WorkloadOp.write(2.0), WorkloadOp.read()),
    ... )
    >>> result = run(scenario)
    >>> [d.learned for d in result.decisions], result.metrics.commit_rate
    ([2.0, 2.0], 1.0)
    """

    ensure_valid(scenario)
    cluster = Cluster(scenario.nodes, scenario.cfg, space=scenario.space, net=scenario.net, seed=scenario.seed)
    reference = initial_reference(scenario)
    decisions: list[Decision] = []
    for op in scenario.workload:
        if op.kind is RequestKind.WRITE:
            assert op.value is not None and scenario.mode.write_mode is not None
            decision = cluster.write(
                op.value,
                mode=scenario.mode.write_mode,
                policy=scenario.policy,
                epsilon=scenario.protocol_epsilon,
                alpha=scenario.protocol_alpha,
            )
            reference = op.value
        elif scenario.mode is RunMode.DETECT_ONLY:
            decision = cluster.detect(epsilon=scenario.protocol_epsilon, alpha=scenario.protocol_alpha)
        else:
            decision = cluster.read(
                policy=scenario.policy,
                epsilon=scenario.protocol_epsilon,
                alpha=scenario.protocol_alpha,
            )
        decisions.append(_with_reference(decision, reference, scenario))
    return RunResult(tuple(decisions), summarize(decisions, scenario, cluster.network.counters))


def initial_reference(scenario: Scenario) -> Value:
    """Ground truth before any write: the lowest-id exact replica's initial state, else node 0's."""

    ordered = sorted(scenario.nodes, key=lambda node: node.node_id)
    replicas = [node for node in ordered if not node.is_artira]
    return (replicas or ordered)[0].initial


def summarize(decisions: Sequence[Decision], scenario: Scenario, counters: ChannelCounters) -> Metrics:
    """Aggregate per-request decisions into run metrics.

    Detection precision and recall are filled in for detect-only runs and
    score ``suspects`` against the Byzantine-active repliers. A ratio whose
    denominator is zero counts as perfect (``1.0``).
    """

    requests = len(decisions)
    committed = sum(1 for decision in decisions if decision.committed)
    errors = [decision.abs_error for decision in decisions if decision.abs_error is not None]
    precision = recall = None
    if scenario.mode is RunMode.DETECT_ONLY:
        precision, recall = _detection_rates(decisions)
    return Metrics(
        requests=requests,
        committed=committed,
        commit_rate=committed / requests if requests else 0.0,
        mean_abs_error=math.fsum(errors) / len(errors) if errors else 0.0,
        max_abs_error=max(errors, default=0.0),
        messages_sent=counters.sent,
        messages_delivered=counters.delivered,
        messages_dropped=counters.dropped,
        replication_factor=scenario.cfg.n,
        detection_precision=precision,
        detection_recall=recall,
    )


def _with_reference(decision: Decision, reference: Value, scenario: Scenario) -> Decision:
    error: float | None = None
    if decision.committed and decision.learned is not None:
        try:
            error = distance(scenario.space, decision.learned, reference)
        except KindMismatch:
            error = math.inf
    return dataclasses.replace(decision, reference=reference, abs_error=error)


def _detection_rates(decisions: Sequence[Decision]) -> tuple[float, float]:
    true_positive = false_positive = false_negative = 0
    for decision in decisions:
        if decision.report is None:
            continue
        suspects = decision.report.suspects
        truth = decision.byzantine_ids
        true_positive += len(suspects & truth)
        false_positive += len(suspects - truth)
        false_negative += len(truth - suspects)
    precision = true_positive / (true_positive + false_positive) if true_positive + false_positive else 1.0
    recall = true_positive / (true_positive + false_negative) if true_positive + false_negative else 1.0
    return precision, recall
