"""Parameter sweeps over a base scenario.

Purpose
    Vary one knob of a scenario and replay it per value at the same seed, so
    the rows differ only by the swept parameter.

Contents
    - ``SweepAxis``: the knobs that can be swept.
    - ``parse_axis`` / ``parse_axis_values``: text to axis and values.
    - ``apply_axis``: the scenario for one value.
    - ``sweep_row`` / ``run_sweep``: metrics per value, in axis order.
"""

from __future__ import annotations

import dataclasses
from enum import Enum
from typing import Iterable, Sequence

from ..domain.errors import InvalidAxis
from ..domain.quorum import QuorumConfig
from ..domain.scenario import Metrics, NodeSpec, Scenario
from .simnet.engine import run

__all__ = ["SweepAxis", "parse_axis", "parse_axis_values", "apply_axis", "sweep_row", "run_sweep"]


class SweepAxis(Enum):
    EPSILON = "epsilon"
    ALPHA = "alpha"
    DROP_PROB = "drop_prob"
    F = "f"


def parse_axis(name: str) -> SweepAxis:
    """Return the axis called *name*.

    Examples
    --------
    >>> parse_axis("drop_prob")
    <SweepAxis.DROP_PROB: 'drop_prob'>
    >>> parse_axis("colour")
    Traceback (most recent call last):
    ...
    aft_sim.domain.errors.InvalidAxis: unknown sweep axis 'colour' (expected one of: epsilon, alpha, drop_prob, f)
    """

    try:
        return SweepAxis(name.strip().lower())
    except ValueError:
        expected = ", ".join(axis.value for axis in SweepAxis)
        raise InvalidAxis(f"unknown sweep axis {name!r} (expected one of: {expected})") from None


def parse_axis_values(axis: SweepAxis, text: str) -> list[float | int]:
    """Parse a comma list of values for *axis*; an empty list is allowed.

    Examples
    --------
    >>> parse_axis_values(SweepAxis.EPSILON, "0, 0.1,0.25")
    [0.0, 0.1, 0.25]
    >>> parse_axis_values(SweepAxis.F, "1,2")
    [1, 2]
    >>> parse_axis_values(SweepAxis.F, "")
    []
    """

    tokens = [token.strip() for token in text.split(",") if token.strip()]
    values: list[float | int] = []
    for token in tokens:
        try:
            values.append(int(token) if axis is SweepAxis.F else float(token))
        except ValueError:
            kind = "an integer" if axis is SweepAxis.F else "a number"
            raise InvalidAxis(f"sweep value {token!r} for axis {axis.value} is not {kind}") from None
    return values


def apply_axis(base: Scenario, axis: SweepAxis, value: float | int) -> Scenario:
    """Return *base* with *axis* set to *value*.

    Sweeping ``f`` resizes the cluster to the standard sizing for the fault
    model: extra nodes are fault-free copies of node 0 and surplus nodes are
    dropped from the top of the id range.
    """

    if axis is SweepAxis.EPSILON:
        return dataclasses.replace(base, protocol_epsilon=float(value))
    if axis is SweepAxis.ALPHA:
        return dataclasses.replace(base, protocol_alpha=float(value))
    if axis is SweepAxis.DROP_PROB:
        return dataclasses.replace(base, net=dataclasses.replace(base.net, drop_prob=float(value)))
    if isinstance(value, bool) or int(value) != value or value < 0:
        raise InvalidAxis(f"axis f needs non-negative integers, got {value!r}")
    cfg = QuorumConfig.sized(int(value), base.cfg.fault_model)
    return dataclasses.replace(base, cfg=cfg, nodes=_resize(base.nodes, cfg.n))


def sweep_row(base: Scenario, axis: SweepAxis, value: float | int) -> Metrics:
    """Run *base* with *axis* set to *value*; top level so worker processes can import it."""

    return run(apply_axis(base, axis, value)).metrics


def run_sweep(base: Scenario, axis: SweepAxis, values: Iterable[float | int]) -> list[tuple[float | int, Metrics]]:
    """Sequential sweep; rows follow *values* order."""

    return [(value, sweep_row(base, axis, value)) for value in values]


def _resize(nodes: Sequence[NodeSpec], count: int) -> tuple[NodeSpec, ...]:
    ordered = sorted(nodes, key=lambda node: node.node_id)
    kept = ordered[:count]
    template = dataclasses.replace(ordered[0], faults=())
    extra = [dataclasses.replace(template, node_id=node_id) for node_id in range(len(kept), count)]
    return tuple(kept + extra)
