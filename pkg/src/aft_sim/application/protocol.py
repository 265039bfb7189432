"""Single-request protocol phases over a fresh simulated cluster.

Purpose
    Expose the Propose/Accept/Learn write and the direct read as plain
    functions, for callers that need one decision rather than a whole
    workload.

System Role
    Each call builds a :class:`~aft_sim.application.simnet.cluster.Cluster`
    from *nodes*, so faults scheduled at tick 0 take effect before the
    request. The simulator's engine reuses one cluster across requests.
"""

from __future__ import annotations

from typing import Sequence

from ..domain.metric import MetricSpace, Value
from ..domain.quorum import Decision, Policy, QuorumConfig, WriteMode
from ..domain.scenario import NetModel, NodeSpec
from .simnet.cluster import Cluster

__all__ = ["run_phase_write", "run_phase_read"]


def run_phase_write(
    proposal: Value,
    nodes: Sequence[NodeSpec],
    cfg: QuorumConfig,
    mode: WriteMode,
    policy: Policy,
    space: MetricSpace,
    epsilon: float,
    alpha: float,
    *,
    net: NetModel | None = None,
    seed: int = 0,
) -> Decision:
    """Run one write and return its decision; a missing quorum yields ``committed=False``.

    Examples
    --------
    >>> nodes = [NodeSpec(i, 0) for i in range(3)]
    >>> decision = run_phase_write(
    ...     42, nodes, QuorumConfig.sized(1), WriteMode.VECTOR, Policy.random(0),
    ...     MetricSpace.ABSOLUTE_DIFFERENCE, 0.0, 1.0,
    ... )
    >>> decision.committed, decision.learned, dict(decision.per_node_states)
    (True, 42, {0: 42, 1: 42, 2: 42})
    """

    cluster = Cluster(nodes, cfg, space=space, net=net, seed=seed)
    return cluster.write(proposal, mode=mode, policy=policy, epsilon=epsilon, alpha=alpha)


def run_phase_read(
    nodes: Sequence[NodeSpec],
    cfg: QuorumConfig,
    policy: Policy,
    space: MetricSpace,
    epsilon: float,
    alpha: float,
    *,
    net: NetModel | None = None,
    seed: int = 0,
) -> Decision:
    """Read every live node's decoded state and learn by *policy* over the matched set."""

    cluster = Cluster(nodes, cfg, space=space, net=net, seed=seed)
    return cluster.read(policy=policy, epsilon=epsilon, alpha=alpha)
