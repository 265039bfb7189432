from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aft_sim.domain.errors import DomainError, KindMismatch
from aft_sim.domain.metric import MetricSpace, Symbol, ValueKind, distance, in_neighborhood, kind_of, values_equal

ABS = MetricSpace.ABSOLUTE_DIFFERENCE
VEC = MetricSpace.EUCLIDEAN_VECTOR
DISCRETE = MetricSpace.DISCRETE01

FINITE = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
VECTOR3 = st.tuples(FINITE, FINITE, FINITE)


def test_kind_of_checks_booleans_before_integers() -> None:
    assert kind_of(True) is ValueKind.BOOLEAN
    assert kind_of(0) is ValueKind.INTEGER
    assert kind_of(Symbol("red")) is ValueKind.SYMBOL


def test_kind_of_rejects_foreign_types() -> None:
    with pytest.raises(KindMismatch):
        kind_of("text")  # type: ignore[arg-type]


def test_absolute_difference_mixes_integers_and_reals() -> None:
    assert distance(ABS, 3, 1.5) == 1.5
    assert distance(ABS, 7, 2) == 5.0


def test_euclidean_distance() -> None:
    assert distance(VEC, (3.0, 4.0), (0.0, 0.0)) == 5.0


def test_vectors_need_the_euclidean_space() -> None:
    with pytest.raises(KindMismatch):
        distance(ABS, (1.0,), (2.0,))


def test_vector_length_mismatch() -> None:
    with pytest.raises(KindMismatch):
        distance(VEC, (1.0, 2.0), (1.0,))


def test_mixed_kinds_do_not_compare() -> None:
    with pytest.raises(KindMismatch):
        distance(ABS, True, 1)
    with pytest.raises(KindMismatch):
        distance(DISCRETE, Symbol("a"), 1.0)


def test_discrete_space_is_zero_or_one() -> None:
    assert distance(DISCRETE, 2.0, 2) == 0.0
    assert distance(DISCRETE, 2.0, 2.5) == 1.0
    assert distance(DISCRETE, Symbol("a"), Symbol("b")) == 1.0


def test_equality_only_kinds_are_zero_or_infinite() -> None:
    assert distance(ABS, False, False) == 0.0
    assert math.isinf(distance(ABS, True, False))


def test_values_equal_never_equates_booleans_and_numbers() -> None:
    assert values_equal(1, 1.0)
    assert not values_equal(True, 1)
    assert not values_equal(Symbol("x"), Symbol("y"))


def test_neighbourhood_is_closed() -> None:
    assert in_neighborhood(ABS, 10.0, 0.5, 10.5)
    assert not in_neighborhood(ABS, 10.0, 0.5, 10.500001)


def test_negative_radius_is_rejected() -> None:
    with pytest.raises(DomainError):
        in_neighborhood(ABS, 0.0, -0.1, 0.0)


@given(FINITE, FINITE)
def test_absolute_difference_is_symmetric(u: float, v: float) -> None:
    assert distance(ABS, u, v) == distance(ABS, v, u)


@given(FINITE)
def test_distance_to_self_is_zero(u: float) -> None:
    assert distance(ABS, u, u) == 0.0
    assert in_neighborhood(ABS, u, 0.0, u)


@given(VECTOR3, VECTOR3, VECTOR3)
def test_euclidean_triangle_inequality(a, b, c) -> None:
    assert distance(VEC, a, c) <= distance(VEC, a, b) + distance(VEC, b, c) + 1e-6
