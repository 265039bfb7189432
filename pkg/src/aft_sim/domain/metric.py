"""Response values, metric spaces, and closed-ball neighbourhood tests.

Purpose
    Every matching predicate compares replies through a distance ``d``. This
    module fixes what a reply value may be and the three built-in metric
    spaces over those values.

Contents
    - ``Symbol``: opaque token compared by equality only.
    - ``Value``: the union of reply kinds (real, integer, boolean, vector,
      symbol).
    - ``ValueKind`` / ``kind_of``: classify a value.
    - ``MetricSpace``: ``ABSOLUTE_DIFFERENCE``, ``EUCLIDEAN_VECTOR``,
      ``DISCRETE01``.
    - ``distance`` / ``in_neighborhood`` / ``values_equal``.

System Role
    Pure functions over immutable values, shared by redundancy analysis,
    adapters, consensus, and the simulator. Real arithmetic is plain IEEE
    double without tolerance of its own; all slack lives in protocol ``ε``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import DomainError, KindMismatch

__all__ = [
    "Symbol",
    "Value",
    "ValueKind",
    "MetricSpace",
    "kind_of",
    "is_numeric",
    "values_equal",
    "distance",
    "in_neighborhood",
]


@dataclass(frozen=True, slots=True, order=True)
class Symbol:
    """Opaque token; unequal symbols sit at infinite distance."""

    name: str

    def __str__(self) -> str:
        return self.name


Value = Union[float, int, bool, tuple[float, ...], Symbol]
"""A reply value. ``bool`` is checked before ``int`` everywhere."""


class ValueKind(Enum):
    REAL = "real"
    INTEGER = "integer"
    BOOLEAN = "boolean"
    VECTOR = "vector"
    SYMBOL = "symbol"


class MetricSpace(Enum):
    """Built-in metric spaces over :data:`Value`."""

    ABSOLUTE_DIFFERENCE = "absolute_difference"
    EUCLIDEAN_VECTOR = "euclidean_vector"
    DISCRETE01 = "discrete01"


_NUMERIC = frozenset({ValueKind.REAL, ValueKind.INTEGER})
_EQUALITY_ONLY = frozenset({ValueKind.BOOLEAN, ValueKind.SYMBOL})


def kind_of(value: Value) -> ValueKind:
    """Classify *value*.

    Examples
    --------
    >>> kind_of(True), kind_of(3), kind_of(2.5)
    (<ValueKind.BOOLEAN: 'boolean'>, <ValueKind.INTEGER: 'integer'>, <ValueKind.REAL: 'real'>)
    >>> kind_of((1.0, 2.0))
    <ValueKind.VECTOR: 'vector'>
    """

    if isinstance(value, bool):
        return ValueKind.BOOLEAN
    if isinstance(value, int):
        return ValueKind.INTEGER
    if isinstance(value, float):
        return ValueKind.REAL
    if isinstance(value, tuple):
        return ValueKind.VECTOR
    if isinstance(value, Symbol):
        return ValueKind.SYMBOL
    raise KindMismatch(f"unsupported value type {type(value).__name__}")


def is_numeric(value: Value) -> bool:
    """Return ``True`` for real and integer scalars (booleans excluded)."""

    return kind_of(value) in _NUMERIC


def values_equal(u: Value, v: Value) -> bool:
    """Exact, kind-aware equality.

    Reals and integers compare numerically; booleans never equal numbers.

    Examples
    --------
    >>> values_equal(1, 1.0), values_equal(True, 1), values_equal(Symbol("a"), Symbol("a"))
    (True, False, True)
    """

    ku, kv = kind_of(u), kind_of(v)
    if ku in _NUMERIC and kv in _NUMERIC:
        return u == v
    if ku is not kv:
        return False
    return u == v


def distance(space: MetricSpace, u: Value, v: Value) -> float:
    """Return ``d(u, v)`` under *space*.

    Raises
    ------
    KindMismatch
        When the kinds (or vector lengths) cannot be compared in *space*.

    Examples
    --------
    >>> distance(MetricSpace.EUCLIDEAN_VECTOR, (3.0, 4.0), (0.0, 0.0))
    5.0
    >>> distance(MetricSpace.DISCRETE01, Symbol("a"), Symbol("a"))
    0.0
    >>> distance(MetricSpace.ABSOLUTE_DIFFERENCE, Symbol("a"), Symbol("b"))
    inf
    """

    ku, kv = kind_of(u), kind_of(v)
    _require_compatible(ku, kv, u, v)
    if space is MetricSpace.DISCRETE01:
        return 0.0 if values_equal(u, v) else 1.0
    if ku in _EQUALITY_ONLY:
        return 0.0 if u == v else math.inf
    if ku is ValueKind.VECTOR:
        if space is not MetricSpace.EUCLIDEAN_VECTOR:
            raise KindMismatch("vectors need the euclidean_vector space")
        return math.dist(u, v)  # type: ignore[arg-type]
    return _scalar_gap(u, v)  # type: ignore[arg-type]


def in_neighborhood(space: MetricSpace, center: Value, r: float, candidate: Value) -> bool:
    """Closed-ball membership: ``distance(center, candidate) ≤ r``.

    Examples
    --------
    >>> in_neighborhood(MetricSpace.ABSOLUTE_DIFFERENCE, 100.0, 0.5, 100.5)
    True
    >>> in_neighborhood(MetricSpace.ABSOLUTE_DIFFERENCE, 100.0, 0.5, 100.51)
    False
    """

    if r < 0:
        raise DomainError(f"neighbourhood radius must be non-negative, got {r}")
    return distance(space, center, candidate) <= r


def _require_compatible(ku: ValueKind, kv: ValueKind, u: Value, v: Value) -> None:
    if ku in _NUMERIC and kv in _NUMERIC:
        return
    if ku is not kv:
        raise KindMismatch(f"cannot compare {ku.value} with {kv.value}")
    if ku is ValueKind.VECTOR and len(u) != len(v):  # type: ignore[arg-type]
        raise KindMismatch(f"vector lengths differ ({len(u)} vs {len(v)})")  # type: ignore[arg-type]


def _scalar_gap(u: float | int, v: float | int) -> float:
    if isinstance(u, int) and isinstance(v, int):
        return float(abs(u - v))
    return abs(float(u) - float(v))

