"""Deterministic discrete-event simulator.

Contents
--------
* :mod:`aft_sim.application.simnet.events` – ``EventQueue`` keyed by
  ``(time, sequence)``.
* :mod:`aft_sim.application.simnet.network` – seeded delays, drops and
  message counters.
* :mod:`aft_sim.application.simnet.nodes` – ``SimNode`` (state, adapter,
  fault injection).
* :mod:`aft_sim.application.simnet.cluster` – one-round quorum exchanges.
* :mod:`aft_sim.application.simnet.engine` – ``run(scenario)``.
"""

from __future__ import annotations

from .cluster import Cluster
from .engine import run, summarize
from .events import EventQueue
from .nodes import SimNode

__all__ = ["Cluster", "EventQueue", "SimNode", "run", "summarize"]
