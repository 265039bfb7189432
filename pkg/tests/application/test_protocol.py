from __future__ import annotations

from fractions import Fraction

import pytest

from aft_sim.application.protocol import run_phase_read, run_phase_write
from aft_sim.domain.artira import ArtiraTriple, ReplicationModel, TransformSpec
from aft_sim.domain.metric import MetricSpace
from aft_sim.domain.quorum import FaultModel, Policy, PolicyKind, QuorumConfig, WriteMode
from aft_sim.domain.scenario import ArtiraProfile, FaultEvent, FaultKind, NetModel, NodeSpec, Role

ABS = MetricSpace.ABSOLUTE_DIFFERENCE
CFG = QuorumConfig.sized(1, FaultModel.CRASH_STOP)
TO_CELSIUS = TransformSpec.affine(Fraction(5, 9), Fraction(-160, 9))


def _replicas(count: int = 3, initial=0.0) -> list[NodeSpec]:
    return [NodeSpec(node_id, initial) for node_id in range(count)]


def _celsius_artira(node_id: int) -> NodeSpec:
    triple = ArtiraTriple(TO_CELSIUS, TO_CELSIUS.default_inverse(), 1.0, 0.0, ReplicationModel.PAR)
    return NodeSpec(node_id, 0.0, artira=ArtiraProfile(triple))


def test_vector_write_commits_on_every_replica() -> None:
    decision = run_phase_write(5.0, _replicas(), CFG, WriteMode.VECTOR, Policy.random(0), ABS, 0.0, 1.0)
    assert decision.committed
    assert decision.learned == 5.0
    assert dict(decision.per_node_states) == {0: 5.0, 1: 5.0, 2: 5.0}
    assert decision.message_count == 6


def test_artira_post_state_is_decoded() -> None:
    nodes = _replicas(2) + [_celsius_artira(2)]
    decision = run_phase_write(100, nodes, CFG, WriteMode.VECTOR, Policy(PolicyKind.MEDIAN), ABS, 0.0, 1.0)
    assert decision.committed
    assert decision.per_node_states[2] == 100.0
    assert decision.match_size == 3


@pytest.mark.parametrize("value", [-198.9, 37.3, 0.1, 1e-9, 123456.789])
def test_par_artira_is_indistinguishable_from_a_replica_at_zero_epsilon(value: float) -> None:
    to_fahrenheit = TransformSpec.affine(Fraction(9, 5), 32)
    triple = ArtiraTriple(to_fahrenheit, to_fahrenheit.default_inverse(), 1.0, 0.0, ReplicationModel.PAR)
    nodes = _replicas(2) + [NodeSpec(2, 0.0, artira=ArtiraProfile(triple))]
    decision = run_phase_write(value, nodes, CFG, WriteMode.VECTOR, Policy(PolicyKind.MEDIAN), ABS, 0.0, 1.0)
    assert decision.match_size == 3
    assert decision.per_node_states[2] == value


def test_leader_state_write_learns_the_proposer_state() -> None:
    decision = run_phase_write(7, _replicas(), CFG, WriteMode.LEADER_STATE, Policy.random(0), ABS, 0.0, 1.0)
    assert decision.committed
    assert decision.learned == 7
    assert decision.vetoes == frozenset()


def test_write_without_live_proposer_has_no_quorum() -> None:
    nodes = [
        NodeSpec(0, 0.0, faults=(FaultEvent(0, FaultKind.CRASH),)),
        NodeSpec(1, 0.0, roles=frozenset({Role.ACCEPTOR, Role.LEARNER})),
        NodeSpec(2, 0.0, roles=frozenset({Role.ACCEPTOR, Role.LEARNER})),
    ]
    decision = run_phase_write(1.0, nodes, CFG, WriteMode.VECTOR, Policy.random(0), ABS, 0.0, 1.0)
    assert not decision.committed
    assert decision.learned is None
    assert decision.message_count == 0


def test_crashed_minority_does_not_block_a_write() -> None:
    nodes = _replicas()
    nodes[2] = NodeSpec(2, 0.0, faults=(FaultEvent(0, FaultKind.CRASH),))
    decision = run_phase_write(3.0, nodes, CFG, WriteMode.VECTOR, Policy.random(0), ABS, 0.0, 1.0)
    assert decision.committed
    assert set(decision.per_node_states) == {0, 1}


def test_read_returns_the_initial_state() -> None:
    decision = run_phase_read(_replicas(initial=4), CFG, Policy(PolicyKind.MEDIAN), ABS, 0.0, 1.0)
    assert decision.committed
    assert decision.learned == 4
    assert decision.message_count == 6


def test_total_message_loss_means_no_quorum() -> None:
    decision = run_phase_read(_replicas(), CFG, Policy.random(0), ABS, 0.0, 1.0, net=NetModel(drop_prob=1.0))
    assert not decision.committed
    assert decision.per_node_states == {}


@pytest.mark.parametrize("seed", [0, 1, 99])
def test_phases_replay_identically(seed: int) -> None:
    net = NetModel(jitter=2, drop_prob=0.2)
    first = run_phase_write(9.0, _replicas(), CFG, WriteMode.VECTOR, Policy.random(seed), ABS, 0.0, 1.0, net=net, seed=seed)
    second = run_phase_write(9.0, _replicas(), CFG, WriteMode.VECTOR, Policy.random(seed), ABS, 0.0, 1.0, net=net, seed=seed)
    assert first == second
