"""Plainspoken exception hierarchy for simulation failures.

Purpose
    Offer one taxonomy that every ring of the package shares when reporting
    bad input, impossible arithmetic, or protocol misuse. The hierarchy lives
    in the domain layer so outer components depend on it without cycles.

Contents
    - ``AftError``: root for every library-specific exception.
    - ``InvalidFormat`` / ``ParseError``: syntactic failures (scenario text,
      sample CSV). ``ParseError`` carries a line and column.
    - ``ValidationError``: semantic failures; carries every violated
      invariant at once.
    - Metric and arithmetic failures: ``KindMismatch``, ``DomainError``,
      ``NoInverse``.
    - Statistics failures: ``DegenerateSamples``, ``NonNumeric``,
      ``EmptyCondition``.
    - Consensus failures: ``NotMatched``, ``NonNumericPolicy``,
      ``TooManyNodes``.
    - Simulation failures: ``PastEvent``, ``ModelMismatch``.
    - Harness failures: ``InvalidAxis``, ``NotFound``.

System Integration
    The CLI maps ``ValidationError``/``InvalidAxis`` to exit code 2 and
    ``InvalidFormat`` to exit code 3; everything else is funnelled through
    ``lib_cli_exit_tools``.
"""

from __future__ import annotations

from typing import Iterable

__all__ = [
    "AftError",
    "InvalidFormat",
    "ParseError",
    "ValidationError",
    "KindMismatch",
    "DomainError",
    "NoInverse",
    "DegenerateSamples",
    "NonNumeric",
    "EmptyCondition",
    "NotMatched",
    "NonNumericPolicy",
    "TooManyNodes",
    "PastEvent",
    "ModelMismatch",
    "InvalidAxis",
    "NotFound",
]


class AftError(Exception):
    """Root of the library's error tree.

    Why
        Gives callers a single ``except AftError`` hook when they do not care
        about the precise failure mode.
    """


class InvalidFormat(AftError):
    """Wrap syntactic failures of text inputs (scenario files, sample CSVs)."""


class ParseError(InvalidFormat):
    """Report a syntax error at a specific position.

    Attributes
    ----------
    line:
        1-based line number of the offending text.
    column:
        1-based column where the offending token starts.

    Examples
    --------
    >>> err = ParseError("unknown key 'colour'", line=4, column=1)
    >>> str(err)
    "line 4, column 1: unknown key 'colour'"
    >>> (err.line, err.column)
    (4, 1)
    """

    def __init__(self, message: str, *, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


class ValidationError(AftError):
    """Collect every semantic invariant an input violates.

    Why
        Scenario authors fix all problems in one pass instead of replaying the
        parser once per mistake.

    Examples
    --------
    >>> err = ValidationError(["q (5) must satisfy q ≤ n (3)", "no node has the proposer role"])
    >>> err.problems[0]
    'q (5) must satisfy q ≤ n (3)'
    >>> "q ≤ n" in str(err)
    True
    """

    def __init__(self, problems: Iterable[str] | str) -> None:
        items = (problems,) if isinstance(problems, str) else tuple(problems)
        super().__init__("; ".join(items))
        self.problems: tuple[str, ...] = items


class KindMismatch(AftError):
    """Two values of incompatible kinds (or vector lengths) were compared."""


class DomainError(AftError):
    """A transform was applied outside its domain (e.g. reciprocal of zero)."""


class NoInverse(AftError):
    """A coder was requested for a transform that has no inverse."""


class DegenerateSamples(AftError):
    """Paired samples cannot support a correlation estimate (too few or zero variance)."""


class NonNumeric(AftError):
    """Samples hold value kinds that statistics cannot be computed over."""


class EmptyCondition(AftError):
    """No sample satisfied the conditioning predicate of a probability bound."""


class NotMatched(AftError):
    """A value was requested from a match set that did not reach quorum."""


class NonNumericPolicy(AftError):
    """An arithmetic learn policy was applied to values it cannot order or average."""


class TooManyNodes(AftError):
    """Exact clique search was requested for more nodes than the supported bound."""


class PastEvent(AftError):
    """An event was scheduled before the simulation clock."""


class ModelMismatch(AftError):
    """A fault kind is not allowed under the configured fault model."""


class InvalidAxis(AftError):
    """A sweep axis is unknown or does not apply to the base scenario."""


class NotFound(AftError):
    """A named resource (such as a bundled scenario) does not exist."""
