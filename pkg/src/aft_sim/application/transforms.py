"""Built-in transform library.

Purpose
    Realise every :class:`~aft_sim.domain.artira.TransformKind` as an object
    satisfying :class:`~aft_sim.application.ports.Transform`:

    - identity: exact copy;
    - affine: ``scale·x + offset`` computed in rational arithmetic and
      rounded once;
    - negate and reciprocal: ``-x`` and ``1/x``;
    - bounded noise: ``x ± e`` with ``|e| ≤ δ``;
    - stochastic predictor: within ``error_scale`` with probability
      ``hit_prob``, strictly outside it otherwise.

System Role
    Adapters compose a decoder and a coder from :func:`build_transform`.
    Stochastic kinds key their draws by ``(spec.seed, stream..., draw)``.
    Two adapters with the same spec but different owners therefore stay
    independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..domain.artira import TransformKind, TransformSpec
from ..domain.errors import DomainError
from ..domain.metric import Value, ValueKind, kind_of
from .ports import Exact, Transform
from .streams import STREAM_ADAPTER, keyed_generator

__all__ = [
    "IdentityTransform",
    "AffineTransform",
    "NegateTransform",
    "ReciprocalTransform",
    "BoundedNoiseTransform",
    "StochasticPredictorTransform",
    "build_transform",
    "has_exact_form",
]


@dataclass(frozen=True, slots=True)
class IdentityTransform:
    spec: TransformSpec

    def apply(self, value: Value, draw: int) -> Value:
        return value


@dataclass(frozen=True, slots=True)
class AffineTransform:
    """``scale·x + offset`` with a single rounding step.

    :meth:`exact` skips the rounding. A coder that keeps its output exact
    lets the decoder round only once, so ``F(F⁻¹(x)) == x``.

    Examples
    --------
    >>> to_celsius = AffineTransform(TransformSpec.affine(Fraction(5, 9), Fraction(-160, 9)))
    >>> to_celsius.apply(212, 0), to_celsius.apply(32.0, 0), to_celsius.apply(-40, 0)
    (100.0, 0.0, -40.0)
    >>> to_celsius.exact(100)
    Fraction(340, 9)
    """

    spec: TransformSpec

    def apply(self, value: Value | Exact, draw: int) -> Value:
        return _rounded(self.exact(value))

    def exact(self, value: Value | Exact) -> Exact:
        scale, offset = self.spec.scale, self.spec.offset
        return _map_exact(value, lambda x: x * scale + offset)


@dataclass(frozen=True, slots=True)
class NegateTransform:
    spec: TransformSpec

    def apply(self, value: Value, draw: int) -> Value:
        return _map_scalars(value, lambda x: -x)


@dataclass(frozen=True, slots=True)
class ReciprocalTransform:
    """``1/x``; zero is outside the domain.

    Examples
    --------
    >>> ReciprocalTransform(TransformSpec.reciprocal()).apply(4, 0)
    0.25
    >>> ReciprocalTransform(TransformSpec.reciprocal()).apply(0.0, 0)
    Traceback (most recent call last):
    ...
    aft_sim.domain.errors.DomainError: reciprocal is undefined at 0
    """

    spec: TransformSpec

    def apply(self, value: Value | Exact, draw: int) -> Value:
        return _rounded(self.exact(value))

    def exact(self, value: Value | Exact) -> Exact:
        return _map_exact(value, _reciprocal)


@dataclass(frozen=True, slots=True)
class BoundedNoiseTransform:
    """Adds uniform noise in ``[-δ, δ]``; the bound holds after rounding."""

    spec: TransformSpec
    stream: tuple[int, ...] = ()

    def apply(self, value: Value, draw: int) -> Value:
        rng = keyed_generator(self.spec.seed, STREAM_ADAPTER, *self.stream, draw)
        if kind_of(value) is ValueKind.VECTOR:
            components = tuple(value)  # type: ignore[arg-type]
            bound = self.spec.delta / math.sqrt(len(components)) if components else 0.0
            return tuple(_nudge(float(x), bound * (2.0 * rng.random() - 1.0), bound) for x in components)
        base = _as_float(value)
        return _nudge(base, self.spec.delta * (2.0 * rng.random() - 1.0), self.spec.delta)


@dataclass(frozen=True, slots=True)
class StochasticPredictorTransform:
    """Predicts its input: a hit lands within ``error_scale``, a miss strictly beyond it."""

    spec: TransformSpec
    stream: tuple[int, ...] = ()

    def apply(self, value: Value, draw: int) -> Value:
        base = _as_float(value)
        rng = keyed_generator(self.spec.seed, STREAM_ADAPTER, *self.stream, draw)
        scale = self.spec.error_scale
        if rng.random() < self.spec.hit_prob:
            return _nudge(base, scale * (2.0 * rng.random() - 1.0), scale)
        magnitude = scale + float(rng.exponential(scale if scale > 0 else 1.0))
        sign = 1.0 if rng.random() < 0.5 else -1.0
        out = base + sign * magnitude
        while abs(out - base) <= scale:
            out = math.nextafter(out, sign * math.inf)
        return out


_EXACT_KINDS = frozenset({TransformKind.AFFINE, TransformKind.RECIPROCAL})


_BUILDERS: dict[TransformKind, Callable[[TransformSpec, tuple[int, ...]], Transform]] = {
    TransformKind.IDENTITY: lambda spec, _stream: IdentityTransform(spec),
    TransformKind.AFFINE: lambda spec, _stream: AffineTransform(spec),
    TransformKind.NEGATE: lambda spec, _stream: NegateTransform(spec),
    TransformKind.RECIPROCAL: lambda spec, _stream: ReciprocalTransform(spec),
    TransformKind.BOUNDED_NOISE: BoundedNoiseTransform,
    TransformKind.STOCHASTIC_PREDICTOR: StochasticPredictorTransform,
}


def build_transform(spec: TransformSpec, *, stream: tuple[int, ...] = ()) -> Transform:
    """Return the transform object for *spec*; *stream* namespaces stochastic draws."""

    return _BUILDERS[spec.kind](spec, stream)


def has_exact_form(spec: TransformSpec) -> bool:
    """True when the transform for *spec* offers :meth:`exact` and reads unrounded input.

    >>> has_exact_form(TransformSpec.affine(2, 1)), has_exact_form(TransformSpec.negate())
    (True, False)
    """

    return spec.kind in _EXACT_KINDS


def _map_scalars(value: Value, fn: Callable[[float | int], float | int]) -> Value:
    kind = kind_of(value)
    if kind is ValueKind.VECTOR:
        return tuple(float(fn(x)) for x in value)  # type: ignore[union-attr]
    if kind in (ValueKind.REAL, ValueKind.INTEGER):
        return fn(value)  # type: ignore[arg-type]
    raise DomainError(f"numeric transforms do not apply to {kind.value} values")


def _as_float(value: Value) -> float:
    kind = kind_of(value)
    if kind not in (ValueKind.REAL, ValueKind.INTEGER):
        raise DomainError(f"noise transforms need numeric scalars, got {kind.value}")
    return float(value)  # type: ignore[arg-type]


def _map_exact(value: Value | Exact, fn: Callable[[Fraction], Fraction]) -> Exact:
    if isinstance(value, Fraction):
        return fn(value)
    kind = kind_of(value)  # type: ignore[arg-type]
    try:
        if kind is ValueKind.VECTOR:
            return tuple(fn(Fraction(x)) for x in value)  # type: ignore[union-attr]
        if kind in (ValueKind.REAL, ValueKind.INTEGER):
            return fn(Fraction(value))  # type: ignore[arg-type]
    except (OverflowError, ValueError) as exc:
        raise DomainError(f"rational transforms need finite input, got {value!r}") from exc
    raise DomainError(f"numeric transforms do not apply to {kind.value} values")


def _rounded(value: Exact) -> Value:
    if isinstance(value, tuple):
        return tuple(float(x) for x in value)
    return float(value)


def _reciprocal(x: Fraction) -> Fraction:
    if x == 0:
        raise DomainError("reciprocal is undefined at 0")
    return 1 / x


def _nudge(base: float, offset: float, bound: float) -> float:
    out = base + offset
    while abs(out - base) > bound:
        out = math.nextafter(out, base)
    return out
