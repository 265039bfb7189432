"""Priority queue of timed simulation events.

Events are ordered by ``(time, sequence)``; the sequence number makes equal
times dequeue in insertion order. The clock only moves forward.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Generic, TypeVar

from ...domain.errors import PastEvent
from ...domain.metric import Value
from ...domain.quorum import Response
from ...domain.scenario import FaultEvent

__all__ = ["MessageKind", "Message", "FaultFired", "RoundClose", "Event", "EventQueue"]


class MessageKind(Enum):
    REQUEST = "request"
    ACCEPT = "accept"
    READ = "read"
    REPLY = "reply"


@dataclass(frozen=True, slots=True)
class Message:
    """A point-to-point message; the requester is node ``-1``.

    ``value`` carries the proposal on REQUEST and ACCEPT; ``leader_state`` and
    ``leader_epsilon`` are piggybacked on ACCEPT. A REPLY carries the
    ``response``, a ``veto`` flag when its sender saw the bound violated, and
    ``byzantine``, the simulator-side ground truth the protocol never reads.
    """

    kind: MessageKind
    src: int
    dst: int
    round_id: int
    value: Value | None = None
    leader_state: Value | None = None
    leader_epsilon: float = 0.0
    response: Response | None = None
    veto: bool = False
    byzantine: bool = False


@dataclass(frozen=True, slots=True)
class FaultFired:
    node_id: int
    fault: FaultEvent


@dataclass(frozen=True, slots=True)
class RoundClose:
    round_id: int


Event = Message | FaultFired | RoundClose

T = TypeVar("T")


class EventQueue(Generic[T]):
    """Min-heap keyed by ``(time, sequence)`` with a monotone clock.

    Examples
    --------
    >>> queue = EventQueue[str]()
    >>> queue.schedule(5, "first")
    >>> queue.schedule(5, "second")
    >>> queue.schedule(2, "early")
    >>> [queue.pop()[1] for _ in range(3)]
    ['early', 'first', 'second']
    >>> queue.now
    5
    >>> queue.schedule(1, "late")
    Traceback (most recent call last):
    ...
    aft_sim.domain.errors.PastEvent: cannot schedule at t=1 before the clock (t=5)
    """

    def __init__(self) -> None:
        self._heap: list[tuple[int, int, T]] = []
        self._sequence = itertools.count()
        self.now = 0

    def __len__(self) -> int:
        return len(self._heap)

    def schedule(self, at_time: int, event: T) -> None:
        if at_time < self.now:
            raise PastEvent(f"cannot schedule at t={at_time} before the clock (t={self.now})")
        heapq.heappush(self._heap, (at_time, next(self._sequence), event))

    def peek_time(self) -> int | None:
        return self._heap[0][0] if self._heap else None

    def pop(self) -> tuple[int, T]:
        at_time, _, event = heapq.heappop(self._heap)
        self.now = at_time
        return at_time, event

    def advance_to(self, at_time: int) -> None:
        """Move the clock forward without dequeuing; earlier pending events must be popped first."""

        pending = self.peek_time()
        if pending is not None and pending < at_time:
            raise PastEvent(f"events pending at t={pending} before advancing to t={at_time}")
        self.now = max(self.now, at_time)
