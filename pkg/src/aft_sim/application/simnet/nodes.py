"""A simulated acceptor: exact replica or artira behind its adapter.

Purpose
    Hold one node's state and apply the faults injected into it.

Contents
    - :class:`SimNode` – ``execute`` / ``read_state`` / ``respond`` /
      ``inject``.

System Role
    The cluster owns one ``SimNode`` per :class:`~aft_sim.domain.scenario.NodeSpec`.
    Artiras store the *coded* value (unrounded when the coder is rational)
    and hand out the *decoded* one, so every state leaving the node has
    passed through ``F``. Writes go through to durable storage; a crash
    under crash-recovery loses only the volatile copy, and a crash under
    any other model loses both.
"""

from __future__ import annotations

import math

from ...domain.errors import DomainError, ModelMismatch, NoInverse
from ...domain.metric import MetricSpace, Symbol, Value, ValueKind, kind_of
from ...domain.quorum import FaultModel, Response
from ...domain.scenario import ByzantineKind, ByzantineStrategy, FaultEvent, FaultKind, NodeSpec, Role
from ..artira import Adapter
from ..ports import Exact
from ..streams import STREAM_BYZANTINE, keyed_generator, node_key

__all__ = ["SimNode"]


class SimNode:
    """One node of the simulated cluster.

    Examples
    --------
    >>> node = SimNode(NodeSpec(0, 1.0), FaultModel.CRASH_RECOVERY, seed=0)
    >>> node.execute(5.0)
    5.0
    >>> node.inject(FaultEvent(3, FaultKind.CRASH))
    >>> node.is_up, node.read_state()
    (False, None)
    >>> node.inject(FaultEvent(4, FaultKind.RECOVER))
    >>> node.read_state()
    5.0
    """

    def __init__(
        self,
        spec: NodeSpec,
        fault_model: FaultModel,
        space: MetricSpace = MetricSpace.ABSOLUTE_DIFFERENCE,
        *,
        seed: int,
    ) -> None:
        self.spec = spec
        self.node_id = spec.node_id
        self._fault_model = fault_model
        self._seed = seed
        self.adapter: Adapter | None = (
            None
            if spec.artira is None
            else Adapter.from_profile(spec.artira, space, stream=(seed, node_key(spec.node_id)))
        )
        self._up = True
        self._strategy: ByzantineStrategy | None = None
        self._corruptions = 0
        initial = self._store_form(spec.initial)
        self._volatile: Value | Exact | None = initial
        self._durable: Value | Exact | None = initial

    @property
    def is_up(self) -> bool:
        return self._up

    @property
    def is_artira(self) -> bool:
        return self.adapter is not None

    @property
    def byzantine_active(self) -> bool:
        return self._up and self._strategy is not None

    @property
    def declared_epsilon(self) -> float:
        return 0.0 if self.adapter is None else self.adapter.effective_epsilon

    @property
    def declared_alpha(self) -> float:
        return 1.0 if self.adapter is None else self.adapter.effective_alpha

    def has_role(self, role: Role) -> bool:
        return role in self.spec.roles

    def execute(self, value: Value) -> Value | None:
        """Apply a write and return the post-state a reader would see.

        Returns ``None`` when the node is down or cannot code the value (an
        artira without inverse, or a value outside the coder's domain); the
        node then abstains instead of storing anything.
        """

        if not self._up:
            return None
        if self.adapter is None:
            self._volatile = self._durable = value
            return value
        try:
            raw = self.adapter.encode(value)
            state = self.adapter.decode(raw)
        except (NoInverse, DomainError):
            return None
        self._volatile = self._durable = raw
        return state

    def read_state(self) -> Value | None:
        """Decoded current state, or ``None`` while down or empty."""

        if not self._up or self._volatile is None:
            return None
        if self.adapter is None:
            return self._volatile  # type: ignore[return-value]
        try:
            return self.adapter.decode(self._volatile)
        except DomainError:
            return None

    def respond(self, state: Value | None, round_id: int) -> Response | None:
        """Wrap *state* into a reply, corrupted if the node is Byzantine-active."""

        if state is None or not self._up:
            return None
        value = state if self._strategy is None else self._corrupt(state, self._strategy)
        if value is None:
            return None
        return Response(
            node_id=self.node_id,
            value=value,
            is_artira=self.is_artira,
            declared_epsilon=self.declared_epsilon,
            declared_alpha=self.declared_alpha,
            round=round_id,
        )

    def inject(self, fault: FaultEvent) -> None:
        if not fault.allowed_under(self._fault_model):
            raise ModelMismatch(
                f"node {self.node_id}: {fault.kind.value} is not allowed under {self._fault_model.value}"
            )
        if fault.kind is FaultKind.CRASH:
            self._up = False
            self._volatile = None
            if self._fault_model is not FaultModel.CRASH_RECOVERY:
                self._durable = None
        elif fault.kind is FaultKind.RECOVER:
            if not self._up:
                self._up = True
                self._volatile = self._durable
        elif fault.kind is FaultKind.BYZANTINE_ON:
            self._strategy = fault.strategy
        else:
            self._strategy = None

    def _store_form(self, initial: Value) -> Value | Exact:
        if self.adapter is None or not self.adapter.has_inverse:
            return initial
        try:
            return self.adapter.encode(initial)
        except DomainError:
            return initial

    def _corrupt(self, value: Value, strategy: ByzantineStrategy) -> Value | None:
        if strategy.kind is ByzantineKind.MUTE:
            return None
        kind = kind_of(value)
        if kind is ValueKind.BOOLEAN:
            return (not value) if strategy.kind is ByzantineKind.ARBITRARY else value
        if kind is ValueKind.SYMBOL:
            return Symbol(f"{value.name}~") if strategy.kind is ByzantineKind.ARBITRARY else value  # type: ignore[union-attr]
        if strategy.kind is ByzantineKind.MAX_SKEW:
            offset = strategy.magnitude
        else:
            rng = keyed_generator(self._seed, STREAM_BYZANTINE, node_key(self.node_id), self._corruptions)
            self._corruptions += 1
            offset = float(rng.uniform(-strategy.magnitude, strategy.magnitude))
        if kind is ValueKind.VECTOR:
            share = offset / math.sqrt(len(value)) if value else 0.0  # type: ignore[arg-type]
            return tuple(float(x) + share for x in value)  # type: ignore[union-attr]
        return float(value) + offset  # type: ignore[arg-type]
