"""Quorum configuration, replies, match sets, policies and decisions.

Purpose
    Carry the data that flows through one protocol round: who may fail, what
    every node answered, which replies matched, and what the requester
    learned.

Contents
    - ``FaultModel`` / ``QuorumConfig`` with the standard default sizing.
    - ``Response``: one node's reply with its declared certification.
    - ``MatchMode`` / ``MatchSet``: the matched subset of replies.
    - ``PolicyKind`` / ``Policy``: how a learned value is chosen.
    - ``WriteMode``: leader-state or vector writes.
    - ``RequestKind`` / ``Outcome`` / ``FaultReport`` / ``Decision``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .errors import ValidationError
from .metric import Value

__all__ = [
    "FaultModel",
    "QuorumConfig",
    "default_sizing",
    "quorum_problems",
    "Response",
    "MatchMode",
    "MatchSet",
    "PolicyKind",
    "Policy",
    "WriteMode",
    "RequestKind",
    "Outcome",
    "FaultReport",
    "Decision",
]


class FaultModel(Enum):
    CRASH_STOP = "crash_stop"
    CRASH_RECOVERY = "crash_recovery"
    BYZANTINE = "byzantine"


@dataclass(frozen=True, slots=True)
class QuorumConfig:
    """``n`` nodes, ``f`` tolerated faults, quorum ``q`` under a fault model.

    Examples
    --------
    >>> QuorumConfig.sized(1, FaultModel.CRASH_STOP)
    QuorumConfig(n=3, f=1, q=2, fault_model=<FaultModel.CRASH_STOP: 'crash_stop'>)
    >>> QuorumConfig.sized(1, FaultModel.BYZANTINE).q
    3
    >>> QuorumConfig(n=3, f=1, q=5, fault_model=FaultModel.CRASH_STOP)
    Traceback (most recent call last):
    ...
    aft_sim.domain.errors.ValidationError: q (5) must satisfy q ≤ n (3)
    """

    n: int
    f: int
    q: int
    fault_model: FaultModel = FaultModel.CRASH_STOP

    def __post_init__(self) -> None:
        problems = quorum_problems(self.n, self.f, self.q)
        if problems:
            raise ValidationError(problems)

    @classmethod
    def sized(
        cls,
        f: int,
        fault_model: FaultModel = FaultModel.CRASH_STOP,
        *,
        n: int | None = None,
        q: int | None = None,
    ) -> QuorumConfig:
        """Build a config, filling ``n``/``q`` with the standard sizing when omitted."""

        default_n, default_q = default_sizing(f, fault_model)
        return cls(
            n=default_n if n is None else n,
            f=f,
            q=default_q if q is None else q,
            fault_model=fault_model,
        )


def default_sizing(f: int, fault_model: FaultModel) -> tuple[int, int]:
    """Return ``(n, q)``: ``(2f+1, f+1)`` for crash models, ``(3f+1, 2f+1)`` for Byzantine."""

    if fault_model is FaultModel.BYZANTINE:
        return 3 * f + 1, 2 * f + 1
    return 2 * f + 1, f + 1


def quorum_problems(n: int, f: int, q: int) -> list[str]:
    """Return every violated quorum invariant."""

    found: list[str] = []
    if n < 1:
        found.append(f"n must be positive, got {n}")
    if f < 0:
        found.append(f"f must be non-negative, got {f}")
    if q < 1:
        found.append(f"q must be positive, got {q}")
    if q > n:
        found.append(f"q ({q}) must satisfy q ≤ n ({n})")
    if f >= n:
        found.append(f"f ({f}) must satisfy f < n ({n})")
    return found


@dataclass(frozen=True, slots=True)
class Response:
    """A node's reply. Exact replicas always declare ``ε = 0`` and ``α = 1``."""

    node_id: int
    value: Value
    is_artira: bool = False
    declared_epsilon: float = 0.0
    declared_alpha: float = 1.0
    round: int = 0

    def __post_init__(self) -> None:
        if not self.is_artira and (self.declared_epsilon != 0.0 or self.declared_alpha != 1.0):
            raise ValidationError(f"exact replica {self.node_id} must declare epsilon 0 and alpha 1")
        if not self.declared_epsilon >= 0.0:
            raise ValidationError(f"node {self.node_id} declared a negative epsilon")
        if not 0.0 <= self.declared_alpha <= 1.0:
            raise ValidationError(f"node {self.node_id} declared alpha outside [0, 1]")


class MatchMode(Enum):
    EXACT = "exact"
    EPSILON_BOUNDED = "epsilon_bounded"
    PROBABILISTIC = "probabilistic"


@dataclass(frozen=True, slots=True)
class MatchSet:
    """Matched subset of replies; ``matched`` holds iff it reaches the quorum."""

    member_ids: frozenset[int]
    matched: bool
    mode: MatchMode
    aggregate_alpha: float = 1.0

    @property
    def size(self) -> int:
        return len(self.member_ids)

    def sorted_members(self) -> list[int]:
        return sorted(self.member_ids)


class PolicyKind(Enum):
    RANDOM = "random"
    MIN = "min"
    MAX = "max"
    MEAN = "mean"
    MEDIAN = "median"
    PREFER_REPLICA = "prefer_replica"


@dataclass(frozen=True, slots=True)
class Policy:
    """Learn policy; ``seed`` is only read by ``RANDOM``."""

    kind: PolicyKind
    seed: int = 0

    @classmethod
    def random(cls, seed: int) -> Policy:
        return cls(PolicyKind.RANDOM, seed)


class WriteMode(Enum):
    LEADER_STATE = "leader_state"
    VECTOR = "vector"


class RequestKind(Enum):
    WRITE = "write"
    READ = "read"
    DETECT = "detect"


class Outcome(Enum):
    COMMITTED = "committed"
    NO_QUORUM = "no_quorum"
    DETECTED = "detected"


@dataclass(frozen=True, slots=True)
class FaultReport:
    """Nodes outside the maximum clique, with the clique's aggregate certainty."""

    suspects: frozenset[int]
    confidence: float
    ambiguous: bool = False
    members: frozenset[int] = frozenset()


@dataclass(frozen=True)
class Decision:
    """Outcome of one request.

    ``learned`` is ``None`` whenever ``committed`` is false; a round never
    fabricates a value. ``byzantine_ids`` records which repliers were
    Byzantine-active, the ground truth detection is scored against.
    """

    request_index: int
    kind: RequestKind
    committed: bool
    learned: Value | None
    per_node_states: Mapping[int, Value] = field(default_factory=dict)
    message_count: int = 0
    match: MatchSet | None = None
    vetoes: frozenset[int] = frozenset()
    report: FaultReport | None = None
    byzantine_ids: frozenset[int] = frozenset()
    reference: Value | None = None
    abs_error: float | None = None

    @property
    def outcome(self) -> Outcome:
        if self.kind is RequestKind.DETECT:
            return Outcome.DETECTED
        return Outcome.COMMITTED if self.committed else Outcome.NO_QUORUM

    @property
    def match_size(self) -> int:
        return 0 if self.match is None else self.match.size

    @property
    def aggregate_alpha(self) -> float | None:
        return None if self.match is None else self.match.aggregate_alpha
