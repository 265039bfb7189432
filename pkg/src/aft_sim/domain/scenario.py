"""Scenario description: nodes, faults, network, workload, and run results.

Purpose
    A ``Scenario`` is a complete reproducible experiment. This module holds
    the value objects that describe one and :func:`scenario_problems`, which
    lists every invariant a scenario violates so callers can raise a single
    :class:`~aft_sim.domain.errors.ValidationError`.

Contents
    - ``Role``, ``ArtiraProfile``, ``NodeSpec``.
    - ``ByzantineKind`` / ``ByzantineStrategy``, ``FaultKind`` / ``FaultEvent``.
    - ``NetModel``.
    - ``RunMode``, ``WorkloadOp``, ``Scenario``.
    - ``Metrics``, ``RunResult``.
    - ``scenario_problems`` / ``ensure_valid``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .artira import ArtiraTriple
from .errors import ValidationError
from .metric import MetricSpace, Symbol, Value, ValueKind, kind_of
from .quorum import Decision, FaultModel, Policy, PolicyKind, QuorumConfig, RequestKind, WriteMode

__all__ = [
    "Role",
    "ALL_ROLES",
    "ArtiraProfile",
    "NodeSpec",
    "ByzantineKind",
    "ByzantineStrategy",
    "FaultKind",
    "FaultEvent",
    "NetModel",
    "RunMode",
    "WorkloadOp",
    "Scenario",
    "Metrics",
    "RunResult",
    "MAX_CLIQUE_NODES",
    "scenario_problems",
    "ensure_valid",
]

MAX_CLIQUE_NODES = 16
"""Upper bound on cluster size for exact maximum-clique matching."""


class Role(Enum):
    PROPOSER = "proposer"
    ACCEPTOR = "acceptor"
    LEARNER = "learner"


ALL_ROLES: frozenset[Role] = frozenset(Role)


@dataclass(frozen=True, slots=True)
class ArtiraProfile:
    """Adapter configuration of an artira node.

    ``inverse_epsilon``/``inverse_alpha`` describe the coder's own
    uncertainty; the defaults describe a perfect coder.
    """

    triple: ArtiraTriple
    inverse_epsilon: float = 0.0
    inverse_alpha: float = 1.0


@dataclass(frozen=True, slots=True)
class NodeSpec:
    """A simulated node: exact replica (``artira is None``) or artira."""

    node_id: int
    initial: Value
    roles: frozenset[Role] = ALL_ROLES
    artira: ArtiraProfile | None = None
    faults: tuple[FaultEvent, ...] = ()

    @property
    def is_artira(self) -> bool:
        return self.artira is not None


class ByzantineKind(Enum):
    ARBITRARY = "arbitrary"
    MAX_SKEW = "max_skew"
    MUTE = "mute"


@dataclass(frozen=True, slots=True)
class ByzantineStrategy:
    """How a Byzantine node corrupts replies.

    ``magnitude`` is the uniform spread for ``ARBITRARY`` and the skew for
    ``MAX_SKEW``; ``MUTE`` ignores it.
    """

    kind: ByzantineKind
    magnitude: float = 0.0

    @classmethod
    def arbitrary(cls, spread: float = 1000.0) -> ByzantineStrategy:
        return cls(ByzantineKind.ARBITRARY, float(spread))

    @classmethod
    def max_skew(cls, epsilon: float) -> ByzantineStrategy:
        return cls(ByzantineKind.MAX_SKEW, float(epsilon))

    @classmethod
    def mute(cls) -> ByzantineStrategy:
        return cls(ByzantineKind.MUTE)


class FaultKind(Enum):
    CRASH = "crash"
    RECOVER = "recover"
    BYZANTINE_ON = "byzantine_on"
    BYZANTINE_OFF = "byzantine_off"


_ALLOWED_FAULTS: dict[FaultModel, frozenset[FaultKind]] = {
    FaultModel.CRASH_STOP: frozenset({FaultKind.CRASH}),
    FaultModel.CRASH_RECOVERY: frozenset({FaultKind.CRASH, FaultKind.RECOVER}),
    FaultModel.BYZANTINE: frozenset({FaultKind.CRASH, FaultKind.BYZANTINE_ON, FaultKind.BYZANTINE_OFF}),
}


@dataclass(frozen=True, slots=True)
class FaultEvent:
    at_time: int
    kind: FaultKind
    strategy: ByzantineStrategy | None = None

    def allowed_under(self, model: FaultModel) -> bool:
        return self.kind in _ALLOWED_FAULTS[model]


@dataclass(frozen=True, slots=True)
class NetModel:
    """Logical-tick network: ``base_delay + uniform(0..jitter)``, seeded drops."""

    base_delay: int = 1
    jitter: int = 0
    drop_prob: float = 0.0
    timeout: int | None = None

    @property
    def round_timeout(self) -> int:
        """Ticks a round waits for replies; defaults to three worst-case hops."""

        if self.timeout is not None:
            return self.timeout
        return 3 * (self.base_delay + self.jitter)


class RunMode(Enum):
    LEADER_STATE = "leader_state"
    VECTOR = "vector"
    DETECT_ONLY = "detect_only"

    @property
    def write_mode(self) -> WriteMode | None:
        if self is RunMode.LEADER_STATE:
            return WriteMode.LEADER_STATE
        if self is RunMode.VECTOR:
            return WriteMode.VECTOR
        return None


@dataclass(frozen=True, slots=True)
class WorkloadOp:
    kind: RequestKind
    value: Value | None = None

    @classmethod
    def write(cls, value: Value) -> WorkloadOp:
        return cls(RequestKind.WRITE, value)

    @classmethod
    def read(cls) -> WorkloadOp:
        return cls(RequestKind.READ)


@dataclass(frozen=True, slots=True)
class Scenario:
    name: str
    seed: int
    cfg: QuorumConfig
    nodes: tuple[NodeSpec, ...]
    workload: tuple[WorkloadOp, ...]
    net: NetModel = NetModel()
    mode: RunMode = RunMode.VECTOR
    policy: Policy = Policy(PolicyKind.MEDIAN)
    protocol_epsilon: float = 0.0
    protocol_alpha: float = 1.0
    space: MetricSpace = MetricSpace.ABSOLUTE_DIFFERENCE


@dataclass(frozen=True, slots=True)
class Metrics:
    """Aggregated outcome of a run. Detection rates are ``None`` outside detect-only runs."""

    requests: int
    committed: int
    commit_rate: float
    mean_abs_error: float
    max_abs_error: float
    messages_sent: int
    messages_delivered: int
    messages_dropped: int
    replication_factor: int
    detection_precision: float | None = None
    detection_recall: float | None = None


@dataclass(frozen=True, slots=True)
class RunResult:
    decisions: tuple[Decision, ...]
    metrics: Metrics


def scenario_problems(scenario: Scenario) -> list[str]:
    """Return every invariant *scenario* violates (empty when valid).

    Examples
    --------
    >>> cfg = QuorumConfig.sized(1)
    >>> nodes = tuple(NodeSpec(i, 1.0) for i in range(2))
    >>> scenario_problems(Scenario("demo", 0, cfg, nodes, (WorkloadOp.write(1.0),)))
    ['scenario declares n = 3 but defines 2 nodes']
    """

    found: list[str] = []
    found.extend(_seed_problems(scenario.seed))
    found.extend(_node_problems(scenario))
    found.extend(_fault_problems(scenario))
    found.extend(_protocol_problems(scenario))
    found.extend(_workload_problems(scenario))
    found.extend(_vector_problems(scenario))
    return found


def ensure_valid(scenario: Scenario) -> Scenario:
    """Return *scenario* unchanged or raise ``ValidationError`` listing every problem."""

    problems = scenario_problems(scenario)
    if problems:
        raise ValidationError(problems)
    return scenario


def _seed_problems(seed: int) -> list[str]:
    if not 0 <= seed < 2**64:
        return [f"seed must be a 64-bit unsigned integer, got {seed}"]
    return []


def _node_problems(scenario: Scenario) -> list[str]:
    found: list[str] = []
    ids = [node.node_id for node in scenario.nodes]
    if len(ids) != scenario.cfg.n:
        found.append(f"scenario declares n = {scenario.cfg.n} but defines {len(ids)} nodes")
    if sorted(ids) != list(range(len(ids))):
        found.append(f"node ids must be dense 0..{len(ids) - 1}, got {sorted(ids)}")
    if len(ids) > MAX_CLIQUE_NODES:
        found.append(f"at most {MAX_CLIQUE_NODES} nodes are supported, got {len(ids)}")
    if not any(Role.PROPOSER in node.roles for node in scenario.nodes):
        found.append("no node has the proposer role")
    for node in scenario.nodes:
        if node.artira is None:
            continue
        if not node.artira.inverse_epsilon >= 0.0:
            found.append(f"node {node.node_id}: inverse_epsilon must be non-negative")
        if not 0.0 <= node.artira.inverse_alpha <= 1.0:
            found.append(f"node {node.node_id}: inverse_alpha must lie in [0, 1]")
    return found


def _fault_problems(scenario: Scenario) -> list[str]:
    found: list[str] = []
    model = scenario.cfg.fault_model
    for node in scenario.nodes:
        for event in node.faults:
            if event.at_time < 0:
                found.append(f"node {node.node_id}: fault time must be non-negative, got {event.at_time}")
            if not event.allowed_under(model):
                found.append(f"node {node.node_id}: {event.kind.value} is not allowed under {model.value}")
            if event.kind is FaultKind.BYZANTINE_ON and event.strategy is None:
                found.append(f"node {node.node_id}: byzantine_on needs a strategy")
    return found


def _protocol_problems(scenario: Scenario) -> list[str]:
    found: list[str] = []
    if not 0.0 < scenario.protocol_alpha <= 1.0:
        found.append(f"protocol alpha must lie in (0, 1], got {scenario.protocol_alpha}")
    if not scenario.protocol_epsilon >= 0.0:
        found.append(f"protocol epsilon must be non-negative, got {scenario.protocol_epsilon}")
    net = scenario.net
    if net.base_delay < 1:
        found.append(f"net.base_delay must be a positive tick count, got {net.base_delay}")
    if net.jitter < 0:
        found.append(f"net.jitter must be non-negative, got {net.jitter}")
    if not 0.0 <= net.drop_prob <= 1.0:
        found.append(f"net.drop_prob must lie in [0, 1], got {net.drop_prob}")
    if net.timeout is not None and net.timeout < 1:
        found.append(f"net.timeout must be a positive tick count, got {net.timeout}")
    return found


def _workload_problems(scenario: Scenario) -> list[str]:
    found: list[str] = []
    if scenario.mode is RunMode.DETECT_ONLY and any(op.kind is RequestKind.WRITE for op in scenario.workload):
        found.append("detect_only mode forbids write operations")
    for index, op in enumerate(scenario.workload):
        if op.kind is RequestKind.WRITE and op.value is None:
            found.append(f"workload item {index}: write needs a value")
        if op.kind is RequestKind.DETECT:
            found.append(f"workload item {index}: detect is not a workload operation")
    return found


def _vector_problems(scenario: Scenario) -> list[str]:
    values: list[Value] = [node.initial for node in scenario.nodes]
    values.extend(op.value for op in scenario.workload if op.value is not None)
    lengths = {len(value) for value in values if kind_of(value) is ValueKind.VECTOR}  # type: ignore[arg-type]
    found: list[str] = []
    if len(lengths) > 1:
        found.append(f"vector values must share one length, got {sorted(lengths)}")
    if lengths and scenario.space is MetricSpace.ABSOLUTE_DIFFERENCE:
        found.append("vector values need space = euclidean_vector")
    if any(isinstance(value, Symbol) and not _is_clean_symbol(value) for value in values):
        found.append("symbol values must be single tokens without separators")
    return found


def _is_clean_symbol(symbol: Symbol) -> bool:
    return bool(symbol.name) and not any(ch in symbol.name for ch in " ,()#=[]\t")
