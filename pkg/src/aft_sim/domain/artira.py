"""Value objects describing artificial replicas and redundancy evidence.

Purpose
    Name the certification of an artira (transform, inverse, certainty α,
    accuracy ε, model) and the statistical evidence that backs it, without
    any arithmetic beyond invariant checks.

Contents
    - ``TransformKind`` / ``TransformSpec``: the built-in transform library
      as data (arguments kept exact where it matters).
    - ``ReplicationModel``: PAR / SAR / WAR.
    - ``CorrelationClass`` / ``Feasibility`` / ``ComponentOp``: taxonomy
      enumerations used by the analysis side.
    - ``ArtiraTriple`` / ``triple_problems``: certification and its
      invariants.
    - ``PairedSamples``, ``CorrelationReport``, ``Rejection``,
      ``ActionMapping``, ``ActionMap``, ``RedundancyLevel``.

System Role
    Consumed by ``application.redundancy`` (qualification), by
    ``application.artira`` (adapters), and by the scenario parser.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DegenerateSamples, ValidationError
from .metric import Value, kind_of

__all__ = [
    "TransformKind",
    "TransformSpec",
    "ReplicationModel",
    "CorrelationClass",
    "Feasibility",
    "ComponentOp",
    "ArtiraTriple",
    "triple_problems",
    "PairedSamples",
    "CorrelationReport",
    "Rejection",
    "ActionMapping",
    "ActionMap",
    "RedundancyLevel",
]


class TransformKind(Enum):
    IDENTITY = "identity"
    AFFINE = "affine"
    NEGATE = "negate"
    RECIPROCAL = "reciprocal"
    BOUNDED_NOISE = "bounded_noise"
    STOCHASTIC_PREDICTOR = "stochastic_predictor"


_DETERMINISTIC = frozenset({TransformKind.IDENTITY, TransformKind.AFFINE, TransformKind.NEGATE, TransformKind.RECIPROCAL})


@dataclass(frozen=True, slots=True)
class TransformSpec:
    """A built-in transform and its arguments.

    Affine ``scale``/``offset`` are rationals so that textbook conversions such
    as Fahrenheit to Celsius invert exactly. Only the fields relevant to
    ``kind`` are meaningful; the rest keep their defaults so equality is
    structural.

    Examples
    --------
    >>> TransformSpec.affine(Fraction(5, 9), Fraction(-160, 9)).default_inverse()
    TransformSpec(kind=<TransformKind.AFFINE: 'affine'>, scale=Fraction(9, 5), offset=Fraction(32, 1), delta=0.0, error_scale=0.0, hit_prob=1.0, seed=0)
    >>> TransformSpec.bounded_noise(0.4, seed=3).is_stochastic
    True
    """

    kind: TransformKind
    scale: Fraction = Fraction(1)
    offset: Fraction = Fraction(0)
    delta: float = 0.0
    error_scale: float = 0.0
    hit_prob: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        problems = self.problems()
        if problems:
            raise ValidationError(problems)

    @classmethod
    def identity(cls) -> TransformSpec:
        return cls(TransformKind.IDENTITY)

    @classmethod
    def affine(cls, scale: Fraction | int | str, offset: Fraction | int | str = 0) -> TransformSpec:
        return cls(TransformKind.AFFINE, scale=Fraction(scale), offset=Fraction(offset))

    @classmethod
    def negate(cls) -> TransformSpec:
        return cls(TransformKind.NEGATE)

    @classmethod
    def reciprocal(cls) -> TransformSpec:
        return cls(TransformKind.RECIPROCAL)

    @classmethod
    def bounded_noise(cls, delta: float, *, seed: int = 0) -> TransformSpec:
        return cls(TransformKind.BOUNDED_NOISE, delta=float(delta), seed=seed)

    @classmethod
    def stochastic_predictor(cls, error_scale: float, hit_prob: float, *, seed: int = 0) -> TransformSpec:
        return cls(
            TransformKind.STOCHASTIC_PREDICTOR,
            error_scale=float(error_scale),
            hit_prob=float(hit_prob),
            seed=seed,
        )

    @property
    def is_stochastic(self) -> bool:
        return self.kind not in _DETERMINISTIC

    def problems(self) -> list[str]:
        """Return the violated argument constraints (empty when valid)."""

        found: list[str] = []
        if self.kind is TransformKind.AFFINE and self.scale == 0:
            found.append("affine scale must be non-zero")
        if self.kind is TransformKind.BOUNDED_NOISE and not self.delta >= 0:
            found.append(f"bounded_noise delta must be non-negative, got {self.delta}")
        if self.kind is TransformKind.STOCHASTIC_PREDICTOR:
            if not self.error_scale >= 0:
                found.append(f"stochastic_predictor error_scale must be non-negative, got {self.error_scale}")
            if not 0.0 <= self.hit_prob <= 1.0:
                found.append(f"stochastic_predictor hit_prob must lie in [0, 1], got {self.hit_prob}")
        if not 0 <= self.seed < 2**64:
            found.append(f"transform seed must be a 64-bit unsigned integer, got {self.seed}")
        return found

    def default_inverse(self) -> TransformSpec | None:
        """Return the built-in coder for this decoder, or ``None`` when none exists.

        Bounded noise is decoder-side only, so its coder is the identity.
        Stochastic predictors have no inverse.
        """

        if self.kind is TransformKind.AFFINE:
            return TransformSpec.affine(1 / self.scale, -self.offset / self.scale)
        if self.kind is TransformKind.BOUNDED_NOISE:
            return TransformSpec.identity()
        if self.kind is TransformKind.STOCHASTIC_PREDICTOR:
            return None
        return self

    def is_perfect_inverse_of(self, decoder: TransformSpec) -> bool:
        """True when ``self`` is the exact deterministic inverse of *decoder*."""

        return decoder.kind in _DETERMINISTIC and decoder.default_inverse() == self


class ReplicationModel(Enum):
    """Artificial redundancy models: perfect, strong, weak."""

    PAR = "PAR"
    SAR = "SAR"
    WAR = "WAR"


class CorrelationClass(Enum):
    """Correlation classes between a replica's output and an artira's."""

    EC = "EC"
    PC_POSITIVE = "PC+"
    PC_NEGATIVE = "PC-"
    BSC = "BSC"
    USC = "USC"


class Feasibility(Enum):
    """Ordered spectrum of how two components can relate, strongest first."""

    EXACT_COPY = "exact_copy"
    PERFECT_POSITIVE = "perfect_positive"
    PERFECT_NEGATIVE = "perfect_negative"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NONE = "none"


class ComponentOp(Enum):
    """Component abstraction: stored value, read access, write access."""

    VAL = "val"
    EXPOSE = "expose"
    MODIFY = "modify"


@dataclass(frozen=True, slots=True)
class ArtiraTriple:
    """Certification ``(F, F⁻¹, α, ε)`` of an artificial replica plus its model.

    Examples
    --------
    >>> ArtiraTriple(TransformSpec.identity(), TransformSpec.identity(), 1.0, 0.0, ReplicationModel.PAR).model.value
    'PAR'
    >>> ArtiraTriple(TransformSpec.identity(), None, 1.0, 0.1, ReplicationModel.PAR)
    Traceback (most recent call last):
    ...
    aft_sim.domain.errors.ValidationError: PAR requires alpha = 1 and epsilon = 0 (got alpha=1.0, epsilon=0.1)
    """

    transform: TransformSpec
    inverse: TransformSpec | None
    alpha: float
    epsilon: float
    model: ReplicationModel

    def __post_init__(self) -> None:
        problems = triple_problems(self.alpha, self.epsilon, self.model)
        if problems:
            raise ValidationError(problems)


def triple_problems(alpha: float, epsilon: float, model: ReplicationModel) -> list[str]:
    """Return every violated triple invariant for the given parameters."""

    found: list[str] = []
    if not 0.0 <= alpha <= 1.0:
        found.append(f"alpha must lie in [0, 1], got {alpha}")
    if not epsilon >= 0.0:
        found.append(f"epsilon must be non-negative, got {epsilon}")
    if model is ReplicationModel.PAR and not (alpha == 1.0 and epsilon == 0.0):
        found.append(f"PAR requires alpha = 1 and epsilon = 0 (got alpha={alpha}, epsilon={epsilon})")
    elif model is ReplicationModel.SAR and not (alpha == 1.0 and epsilon > 0.0):
        found.append(f"SAR requires alpha = 1 and epsilon > 0 (got alpha={alpha}, epsilon={epsilon})")
    elif model is ReplicationModel.WAR and not alpha < 1.0:
        found.append(f"WAR requires alpha < 1 (got alpha={alpha})")
    return found


@dataclass(frozen=True, slots=True)
class PairedSamples:
    """Matched observations ``(x, y)`` of two components.

    Examples
    --------
    >>> PairedSamples.of([(1, 1), (2, 2)]).count
    2
    >>> PairedSamples.of([(1, 1)])
    Traceback (most recent call last):
    ...
    aft_sim.domain.errors.DegenerateSamples: paired samples need at least 2 pairs, got 1
    """

    pairs: tuple[tuple[Value, Value], ...]

    def __post_init__(self) -> None:
        if len(self.pairs) < 2:
            raise DegenerateSamples(f"paired samples need at least 2 pairs, got {len(self.pairs)}")
        x_kinds = {_kind_family(x) for x, _ in self.pairs}
        y_kinds = {_kind_family(y) for _, y in self.pairs}
        if len(x_kinds) > 1 or len(y_kinds) > 1:
            raise ValidationError("all x samples must share one kind and all y samples must share one kind")

    @classmethod
    def of(cls, pairs: Iterable[tuple[Value, Value]]) -> PairedSamples:
        return cls(tuple((x, y) for x, y in pairs))

    @property
    def count(self) -> int:
        return len(self.pairs)

    @property
    def xs(self) -> tuple[Value, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def ys(self) -> tuple[Value, ...]:
        return tuple(y for _, y in self.pairs)

    def swapped(self) -> PairedSamples:
        return PairedSamples(tuple((y, x) for x, y in self.pairs))


def _kind_family(value: Value) -> str:
    kind = kind_of(value).value
    return "numeric" if kind in {"real", "integer"} else kind


@dataclass(frozen=True, slots=True)
class CorrelationReport:
    """Signed Pearson ``zeta``, threshold ``tau``, verdict and the conditional bound ``beta``."""

    zeta: float
    tau: float
    accepted: bool
    beta: float
    count: int


@dataclass(frozen=True, slots=True)
class Rejection:
    """Qualification failed; carries the best ``(α′, ε′)`` reached on the grid."""

    best_alpha: float
    best_epsilon: float
    target_alpha: float
    target_epsilon: float


@dataclass(frozen=True, slots=True)
class ActionMapping:
    """One B action and the A action that reproduces it, if any."""

    target: str | None
    report: CorrelationReport | None


@dataclass(frozen=True, slots=True)
class ActionMap:
    """Map from the actions of component B to the actions of component A."""

    entries: Mapping[str, ActionMapping] = field(default_factory=dict)

    def accepted_actions(self) -> list[str]:
        return sorted(
            name
            for name, mapping in self.entries.items()
            if mapping.target is not None and mapping.report is not None and mapping.report.accepted
        )


class RedundancyLevel(Enum):
    NONE = "none"
    PARTIAL = "partial"
    FULL = "full"
