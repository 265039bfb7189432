from __future__ import annotations

import pytest

from aft_sim.domain.errors import (
    AftError,
    DegenerateSamples,
    DomainError,
    EmptyCondition,
    InvalidAxis,
    InvalidFormat,
    KindMismatch,
    ModelMismatch,
    NoInverse,
    NonNumeric,
    NonNumericPolicy,
    NotFound,
    NotMatched,
    ParseError,
    PastEvent,
    TooManyNodes,
    ValidationError,
)


@pytest.mark.parametrize(
    "error_type",
    [
        InvalidFormat,
        ValidationError,
        KindMismatch,
        DomainError,
        NoInverse,
        DegenerateSamples,
        NonNumeric,
        EmptyCondition,
        NotMatched,
        NonNumericPolicy,
        TooManyNodes,
        PastEvent,
        ModelMismatch,
        InvalidAxis,
        NotFound,
    ],
)
def test_error_hierarchy(error_type: type[AftError]) -> None:
    assert issubclass(error_type, AftError)


def test_parse_error_is_an_invalid_format() -> None:
    err = ParseError("unknown key 'colour'", line=4, column=7)
    assert isinstance(err, InvalidFormat)
    assert str(err) == "line 4, column 7: unknown key 'colour'"
    assert (err.line, err.column, err.reason) == (4, 7, "unknown key 'colour'")


def test_validation_error_keeps_every_problem() -> None:
    err = ValidationError(["first", "second"])
    assert err.problems == ("first", "second")
    assert str(err) == "first; second"


def test_validation_error_accepts_a_single_message() -> None:
    err = ValidationError("only one")
    assert err.problems == ("only one",)
