"""Seeded point-to-point channels with delay, jitter and drops."""

from __future__ import annotations

from dataclasses import dataclass, field

from ...domain.scenario import NetModel
from ..streams import STREAM_NETWORK, keyed_generator, node_key
from .events import Message

__all__ = ["ChannelCounters", "SimNetwork"]


@dataclass(slots=True)
class ChannelCounters:
    """Message totals; ``sent == delivered + dropped`` at every instant."""

    sent: int = 0
    delivered: int = 0
    dropped: int = 0


@dataclass(slots=True)
class SimNetwork:
    """Decides, at send time, whether and when each message arrives.

    Every ``(src, dst)`` channel numbers its messages. The n-th message on a
    channel draws from a generator keyed by the run seed, both endpoints and
    n, so adding traffic on one channel never perturbs another.

    Examples
    --------
    >>> from aft_sim.application.simnet.events import MessageKind
    >>> network = SimNetwork(NetModel(base_delay=2), seed=1)
    >>> network.transmit(Message(MessageKind.READ, -1, 0, 0), now=10)
    12
    >>> network.counters
    ChannelCounters(sent=1, delivered=1, dropped=0)
    """

    model: NetModel
    seed: int
    counters: ChannelCounters = field(default_factory=ChannelCounters)
    _channels: dict[tuple[int, int], int] = field(default_factory=dict)

    def transmit(self, message: Message, now: int) -> int | None:
        """Return the arrival tick of *message*, or ``None`` when it is dropped."""

        channel = (message.src, message.dst)
        index = self._channels.get(channel, 0)
        self._channels[channel] = index + 1
        self.counters.sent += 1
        model = self.model
        if model.drop_prob <= 0.0 and model.jitter == 0:
            self.counters.delivered += 1
            return now + model.base_delay
        rng = keyed_generator(self.seed, STREAM_NETWORK, node_key(message.src), node_key(message.dst), index)
        if model.drop_prob > 0.0 and rng.random() < model.drop_prob:
            self.counters.dropped += 1
            return None
        self.counters.delivered += 1
        jitter = int(rng.integers(0, model.jitter + 1)) if model.jitter else 0
        return now + model.base_delay + jitter
