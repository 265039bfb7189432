from __future__ import annotations

import pytest

from aft_sim.domain.errors import ValidationError
from aft_sim.domain.metric import MetricSpace, Symbol
from aft_sim.domain.quorum import FaultModel, Policy, PolicyKind, QuorumConfig, WriteMode
from aft_sim.domain.scenario import (
    ByzantineStrategy,
    FaultEvent,
    FaultKind,
    NetModel,
    NodeSpec,
    Role,
    RunMode,
    Scenario,
    WorkloadOp,
    ensure_valid,
    scenario_problems,
)
from tests.support import make_scenario


def _nodes(count: int, initial=0.0) -> list[NodeSpec]:
    return [NodeSpec(node_id, initial) for node_id in range(count)]


def test_valid_scenario_has_no_problems() -> None:
    scenario = make_scenario(_nodes(3), [WorkloadOp.write(1.0), WorkloadOp.read()])
    assert scenario_problems(scenario) == []
    assert ensure_valid(scenario) is scenario


def test_round_timeout_defaults_to_three_worst_case_hops() -> None:
    assert NetModel().round_timeout == 3
    assert NetModel(base_delay=2, jitter=1).round_timeout == 9
    assert NetModel(timeout=7).round_timeout == 7


def test_run_mode_write_modes() -> None:
    assert RunMode.VECTOR.write_mode is WriteMode.VECTOR
    assert RunMode.LEADER_STATE.write_mode is WriteMode.LEADER_STATE
    assert RunMode.DETECT_ONLY.write_mode is None


@pytest.mark.parametrize(
    ("kind", "model", "allowed"),
    [
        (FaultKind.CRASH, FaultModel.CRASH_STOP, True),
        (FaultKind.RECOVER, FaultModel.CRASH_STOP, False),
        (FaultKind.RECOVER, FaultModel.CRASH_RECOVERY, True),
        (FaultKind.BYZANTINE_ON, FaultModel.CRASH_RECOVERY, False),
        (FaultKind.BYZANTINE_OFF, FaultModel.BYZANTINE, True),
        (FaultKind.RECOVER, FaultModel.BYZANTINE, False),
    ],
)
def test_fault_kinds_per_model(kind: FaultKind, model: FaultModel, allowed: bool) -> None:
    assert FaultEvent(0, kind, ByzantineStrategy.mute()).allowed_under(model) is allowed


def test_problems_are_collected_together() -> None:
    nodes = (
        NodeSpec(0, 0.0, roles=frozenset({Role.ACCEPTOR}), faults=(FaultEvent(-1, FaultKind.RECOVER),)),
        NodeSpec(2, 0.0, roles=frozenset({Role.ACCEPTOR})),
    )
    scenario = Scenario(
        name="broken",
        seed=0,
        cfg=QuorumConfig.sized(1),
        nodes=nodes,
        workload=(WorkloadOp.read(),),
        net=NetModel(drop_prob=1.5),
        protocol_alpha=0.0,
    )
    problems = scenario_problems(scenario)
    assert "scenario declares n = 3 but defines 2 nodes" in problems
    assert "node ids must be dense 0..1, got [0, 2]" in problems
    assert "no node has the proposer role" in problems
    assert "node 0: fault time must be non-negative, got -1" in problems
    assert "node 0: recover is not allowed under crash_stop" in problems
    assert "net.drop_prob must lie in [0, 1], got 1.5" in problems
    assert "protocol alpha must lie in (0, 1], got 0.0" in problems
    with pytest.raises(ValidationError) as info:
        ensure_valid(scenario)
    assert info.value.problems == tuple(problems)


def test_detect_only_forbids_writes() -> None:
    scenario = make_scenario(_nodes(3), [WorkloadOp.write(1.0)], mode=RunMode.DETECT_ONLY)
    assert "detect_only mode forbids write operations" in scenario_problems(scenario)


def test_byzantine_on_needs_a_strategy() -> None:
    nodes = _nodes(3) + [NodeSpec(3, 0.0, faults=(FaultEvent(0, FaultKind.BYZANTINE_ON),))]
    scenario = make_scenario(nodes, [WorkloadOp.read()], fault_model=FaultModel.BYZANTINE)
    assert "node 3: byzantine_on needs a strategy" in scenario_problems(scenario)


def test_vectors_need_one_length_and_the_euclidean_space() -> None:
    nodes = [NodeSpec(0, (0.0, 0.0)), NodeSpec(1, (0.0, 0.0)), NodeSpec(2, (0.0,))]
    problems = scenario_problems(make_scenario(nodes, [WorkloadOp.read()]))
    assert "vector values must share one length, got [1, 2]" in problems
    assert "vector values need space = euclidean_vector" in problems


def test_more_than_sixteen_nodes_is_a_problem() -> None:
    scenario = make_scenario(_nodes(17), [WorkloadOp.read()], f=8)
    assert "at most 16 nodes are supported, got 17" in scenario_problems(scenario)


def test_symbols_must_be_single_tokens() -> None:
    nodes = _nodes(3, Symbol("green"))
    scenario = make_scenario(nodes, [WorkloadOp.write(Symbol("two words"))])
    assert "symbol values must be single tokens without separators" in scenario_problems(scenario)


def test_euclidean_space_accepts_vectors() -> None:
    scenario = Scenario(
        "vectors",
        0,
        QuorumConfig.sized(1),
        tuple(NodeSpec(i, (0.0, 0.0)) for i in range(3)),
        (WorkloadOp.write((1.0, 2.0)),),
        space=MetricSpace.EUCLIDEAN_VECTOR,
    )
    assert scenario_problems(scenario) == []


def test_scenarios_learn_the_median_unless_told_otherwise() -> None:
    scenario = Scenario("defaults", 0, QuorumConfig.sized(1), tuple(NodeSpec(i, 0.0) for i in range(3)), (WorkloadOp.read(),))
    assert scenario.policy == Policy(PolicyKind.MEDIAN)
