"""Round-by-round execution of requests over a simulated cluster.

Purpose
-------
Drive the message flow of one request at a time over logical ticks and
hand the collected replies to the learn rules.

Round
-----
1. Every event due at or before the round's start tick fires; faults run
   before messages at the same tick.
2. Writes go to the proposer, the lowest-id live node with the proposer
   role. It executes, replies, and broadcasts ACCEPT carrying the proposal
   and its own post-state to every other acceptor.
3. Acceptors execute, compare their post-state with the proposer's, reply,
   and flag a veto when the bound is exceeded.
4. Reads and detection sweeps go straight to every node.
5. The round closes ``timeout + 1`` ticks after it started. Replies that
   arrive later belong to a closed round and are discarded.
6. A write whose proposer crashed before executing it is handed, at that
   close, to the next live proposer that has not tried it yet, and the
   round gets a fresh timeout.

System Role
-----------
The engine replays a scenario's workload through :meth:`Cluster.write`,
:meth:`Cluster.read` and :meth:`Cluster.detect`. Nothing here is
nondeterministic: the queue orders ties by insertion and every random draw
is keyed by the run seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ...domain.errors import NotFound
from ...domain.metric import MetricSpace, Value
from ...domain.quorum import Decision, FaultReport, MatchSet, Policy, QuorumConfig, RequestKind, Response, WriteMode
from ...domain.scenario import FaultEvent, FaultKind, NetModel, NodeSpec, Role
from ..consensus import aft_match, detect_fault, exceeds_bound, learn_read, learn_write
from .events import Event, EventQueue, FaultFired, Message, MessageKind, RoundClose
from .network import SimNetwork
from .nodes import SimNode

__all__ = ["Cluster", "REQUESTER_ID"]

REQUESTER_ID = -1


@dataclass(slots=True)
class _Round:
    round_id: int
    kind: RequestKind
    sent_before: int
    leader_id: int | None = None
    proposal: Value | None = None
    proposed: bool = False
    leader_crashed: bool = False
    tried: set[int] = field(default_factory=set)
    replies: dict[int, Response] = field(default_factory=dict)
    vetoes: set[int] = field(default_factory=set)
    byzantine: set[int] = field(default_factory=set)
    closed: bool = False

    def responses(self) -> list[Response]:
        return [self.replies[node_id] for node_id in sorted(self.replies)]


class Cluster:
    """Simulated nodes, network and clock for one run.

    Parameters
    ----------
    nodes:
        Node descriptions; scheduled faults are queued immediately.
    cfg:
        Quorum sizing and fault model.
    space / net / seed:
        Metric space of the values, network model and run seed.

    Examples
    --------
    >>> from aft_sim.domain.quorum import FaultModel
    >>> cluster = Cluster([NodeSpec(i, 0.0) for i in range(3)], QuorumConfig.sized(1, FaultModel.CRASH_STOP))
    >>> decision = cluster.write(4.0, mode=WriteMode.VECTOR, policy=Policy.random(0), epsilon=0.0, alpha=1.0)
    >>> decision.committed, decision.learned, decision.message_count
    (True, 4.0, 6)
    >>> cluster.read(policy=Policy.random(0), epsilon=0.0, alpha=1.0).learned
    4.0
    """

    def __init__(
        self,
        nodes: Sequence[NodeSpec],
        cfg: QuorumConfig,
        *,
        space: MetricSpace = MetricSpace.ABSOLUTE_DIFFERENCE,
        net: NetModel | None = None,
        seed: int = 0,
    ) -> None:
        self.cfg = cfg
        self.space = space
        self.net = net if net is not None else NetModel()
        self.network = SimNetwork(self.net, seed)
        self.nodes: dict[int, SimNode] = {
            spec.node_id: SimNode(spec, cfg.fault_model, space, seed=seed)
            for spec in sorted(nodes, key=lambda spec: spec.node_id)
        }
        self._queue: EventQueue[Event] = EventQueue()
        self._rounds = 0
        self._next_start = 0
        self._active: _Round | None = None
        self._epsilon = 0.0
        for spec in nodes:
            for fault in sorted(spec.faults, key=lambda event: event.at_time):
                self._queue.schedule(fault.at_time, FaultFired(spec.node_id, fault))

    @property
    def now(self) -> int:
        return self._queue.now

    def inject(self, node_id: int, fault: FaultEvent) -> None:
        """Apply *fault* to *node_id* at the current tick."""

        if node_id not in self.nodes:
            raise NotFound(f"no node with id {node_id}")
        self.nodes[node_id].inject(fault)
        state = self._active
        if fault.kind is FaultKind.CRASH and state is not None and state.leader_id == node_id:
            state.leader_crashed = True

    def write(
        self,
        proposal: Value,
        *,
        mode: WriteMode,
        policy: Policy,
        epsilon: float,
        alpha: float,
    ) -> Decision:
        state = self._open(RequestKind.WRITE, epsilon)
        state.proposal = proposal
        state.leader_id = self._proposer()
        if state.leader_id is not None:
            self._request(state)
        self._drain(state)
        match, learned = learn_write(
            state.responses(),
            self.cfg,
            mode=mode,
            leader_id=state.leader_id,
            vetoes=state.vetoes,
            policy=policy,
            space=self.space,
            epsilon=epsilon,
            alpha=alpha,
            draw=state.round_id,
        )
        return self._decide(state, match, learned)

    def read(self, *, policy: Policy, epsilon: float, alpha: float) -> Decision:
        state = self._broadcast_read(RequestKind.READ, epsilon)
        match, learned = learn_read(
            state.responses(),
            self.cfg,
            policy=policy,
            space=self.space,
            epsilon=epsilon,
            alpha=alpha,
            draw=state.round_id,
        )
        return self._decide(state, match, learned)

    def detect(self, *, epsilon: float, alpha: float) -> Decision:
        """Read every node and flag the repliers outside the maximum clique; never commits."""

        state = self._broadcast_read(RequestKind.DETECT, epsilon)
        responses = state.responses()
        report: FaultReport = detect_fault(responses, self.cfg, self.space, epsilon, alpha)
        match = aft_match(responses, self.cfg, self.space, epsilon, alpha)
        return self._decide(state, match, None, report=report)

    def _broadcast_read(self, kind: RequestKind, epsilon: float) -> _Round:
        state = self._open(kind, epsilon)
        for node_id in self.nodes:
            self._send(Message(MessageKind.READ, REQUESTER_ID, node_id, state.round_id))
        self._drain(state)
        return state

    def _open(self, kind: RequestKind, epsilon: float) -> _Round:
        start = max(self._queue.now, self._next_start)
        self._run_until(start)
        self._queue.advance_to(start)
        state = _Round(round_id=self._rounds, kind=kind, sent_before=self.network.counters.sent)
        self._rounds += 1
        self._active = state
        self._epsilon = epsilon
        self._queue.schedule(start + self.net.round_timeout + 1, RoundClose(state.round_id))
        return state

    def _run_until(self, at_time: int) -> None:
        while (pending := self._queue.peek_time()) is not None and pending <= at_time:
            _, event = self._queue.pop()
            self._dispatch(event)

    def _drain(self, state: _Round) -> None:
        while not state.closed:
            _, event = self._queue.pop()
            self._dispatch(event)
        self._next_start = self._queue.now + 1

    def _proposer(self, exclude: set[int] | frozenset[int] = frozenset()) -> int | None:
        for node_id, node in self.nodes.items():
            if node_id not in exclude and node.is_up and node.has_role(Role.PROPOSER):
                return node_id
        return None

    def _request(self, state: _Round) -> None:
        assert state.leader_id is not None
        state.tried.add(state.leader_id)
        self._send(Message(MessageKind.REQUEST, REQUESTER_ID, state.leader_id, state.round_id, value=state.proposal))

    def _hand_over(self, state: _Round) -> bool:
        """Resend a write whose proposer crashed before executing it; ``False`` closes the round."""

        if state.kind is not RequestKind.WRITE or state.proposed or not state.leader_crashed:
            return False
        successor = self._proposer(exclude=state.tried)
        if successor is None:
            return False
        state.leader_id = successor
        state.leader_crashed = False
        self._queue.schedule(self._queue.now + self.net.round_timeout + 1, RoundClose(state.round_id))
        self._request(state)
        return True

    def _send(self, message: Message) -> None:
        arrival = self.network.transmit(message, self._queue.now)
        if arrival is not None:
            self._queue.schedule(arrival, message)

    def _dispatch(self, event: Event) -> None:
        if isinstance(event, FaultFired):
            self.inject(event.node_id, event.fault)
        elif isinstance(event, RoundClose):
            state = self._active
            if state is not None and state.round_id == event.round_id and not self._hand_over(state):
                state.closed = True
        elif event.dst == REQUESTER_ID:
            self._collect(event)
        else:
            self._deliver(event)

    def _collect(self, message: Message) -> None:
        state = self._active
        if state is None or state.closed or state.round_id != message.round_id or message.response is None:
            return
        state.replies[message.src] = message.response
        if message.veto:
            state.vetoes.add(message.src)
        if message.byzantine:
            state.byzantine.add(message.src)

    def _deliver(self, message: Message) -> None:
        node = self.nodes[message.dst]
        if not node.is_up:
            return
        if message.kind is MessageKind.REQUEST:
            self._propose(node, message)
        elif message.kind is MessageKind.ACCEPT:
            self._accept(node, message)
        elif message.kind is MessageKind.READ:
            self._reply(node, node.respond(node.read_state(), message.round_id), message.round_id)

    def _propose(self, node: SimNode, message: Message) -> None:
        assert message.value is not None
        if self._active is not None and self._active.round_id == message.round_id:
            self._active.proposed = True
        response = node.respond(node.execute(message.value), message.round_id)
        leader_state = None if response is None else response.value
        for node_id, other in self.nodes.items():
            if node_id == node.node_id or not other.has_role(Role.ACCEPTOR):
                continue
            self._send(
                Message(
                    MessageKind.ACCEPT,
                    node.node_id,
                    node_id,
                    message.round_id,
                    value=message.value,
                    leader_state=leader_state,
                    leader_epsilon=node.declared_epsilon,
                )
            )
        self._reply(node, response, message.round_id)

    def _accept(self, node: SimNode, message: Message) -> None:
        assert message.value is not None
        state = node.execute(message.value)
        if state is None:
            return
        veto = message.leader_state is not None and exceeds_bound(
            self.space,
            state,
            message.leader_state,
            max(self._epsilon, node.declared_epsilon + message.leader_epsilon),
        )
        self._reply(node, node.respond(state, message.round_id), message.round_id, veto=veto)

    def _reply(self, node: SimNode, response: Response | None, round_id: int, *, veto: bool = False) -> None:
        if response is None:
            return
        self._send(
            Message(
                MessageKind.REPLY,
                node.node_id,
                REQUESTER_ID,
                round_id,
                response=response,
                veto=veto,
                byzantine=node.byzantine_active,
            )
        )

    def _decide(
        self,
        state: _Round,
        match: MatchSet,
        learned: Value | None,
        *,
        report: FaultReport | None = None,
    ) -> Decision:
        self._active = None
        return Decision(
            request_index=state.round_id,
            kind=state.kind,
            committed=learned is not None,
            learned=learned,
            per_node_states={node_id: reply.value for node_id, reply in sorted(state.replies.items())},
            message_count=self.network.counters.sent - state.sent_before,
            match=match,
            vetoes=frozenset(state.vetoes),
            report=report,
            byzantine_ids=frozenset(state.byzantine),
        )
