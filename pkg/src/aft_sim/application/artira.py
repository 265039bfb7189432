"""The adapter wrapped around an artificial replica.

Purpose
-------
An artira is read through a decoder (``F``) and written through a coder
(``F⁻¹``). The :class:`Adapter` owns both, the metric space its values live
in, and the effective certification after accounting for an imperfect
coder.

Contents
--------
* :class:`Adapter` – ``decode`` / ``encode`` / ``roundtrip_check`` and the
  component-operation view (``intercepts``).
* :func:`widen_for_inverse` – composes the coder's uncertainty into the
  triple.

System Role
-----------
Simulated artira nodes hold one adapter each. The adapter outlives crashes,
so the counter its stochastic draws advance is durable and recovery keeps
replays aligned. Rational coders hand their output over unrounded, so a
written value is rounded once, on its way out through the decoder.
"""

from __future__ import annotations

from typing import Iterable

from ..domain.artira import ArtiraTriple, ComponentOp
from ..domain.errors import NoInverse, ValidationError
from ..domain.metric import MetricSpace, Value, values_equal
from ..domain.scenario import ArtiraProfile
from .ports import Exact, ExactTransform, Transform
from .transforms import build_transform, has_exact_form

__all__ = ["Adapter", "widen_for_inverse"]


def widen_for_inverse(triple: ArtiraTriple, inverse_epsilon: float, inverse_alpha: float) -> tuple[float, float]:
    """Return ``(effective_epsilon, effective_alpha)`` once a coder's uncertainty is composed in.

    Why
        A written-then-read value passes through ``F⁻¹`` and then ``F``, so it
        carries both uncertainties. Bounds add under the triangle inequality
        and certainties multiply under independence.

    Examples
    --------
    >>> from aft_sim.domain.artira import ReplicationModel, TransformSpec
    >>> sar = ArtiraTriple(TransformSpec.bounded_noise(0.4), TransformSpec.identity(), 1.0, 0.4, ReplicationModel.SAR)
    >>> widen_for_inverse(sar, 0.0, 1.0)
    (0.4, 1.0)
    >>> widen_for_inverse(sar, 0.1, 1.0)
    (0.5, 1.0)
    """

    if inverse_epsilon < 0:
        raise ValidationError(f"inverse_epsilon must be non-negative, got {inverse_epsilon}")
    if not 0.0 <= inverse_alpha <= 1.0:
        raise ValidationError(f"inverse_alpha must lie in [0, 1], got {inverse_alpha}")
    return triple.epsilon + inverse_epsilon, triple.alpha * inverse_alpha


class Adapter:
    """Decoder/coder pair around one artira.

    Parameters
    ----------
    triple:
        The artira's certification.
    space:
        Metric space its values live in.
    inverse_epsilon / inverse_alpha:
        Uncertainty of an imperfect coder. Ignored when the coder is the
        exact built-in inverse of the decoder.
    stream:
        Extra key components for stochastic draws (simulation seed, node id).

    Examples
    --------
    >>> from fractions import Fraction
    >>> from aft_sim.domain.artira import ReplicationModel, TransformSpec
    >>> decoder = TransformSpec.affine(Fraction(5, 9), Fraction(-160, 9))
    >>> triple = ArtiraTriple(decoder, decoder.default_inverse(), 1.0, 0.0, ReplicationModel.PAR)
    >>> adapter = Adapter(triple)
    >>> adapter.decode(212), adapter.encode(100)
    (100.0, Fraction(212, 1))
    >>> adapter.roundtrip_check([0, 37.3, -198.9, 0.1])
    True
    """

    def __init__(
        self,
        triple: ArtiraTriple,
        space: MetricSpace = MetricSpace.ABSOLUTE_DIFFERENCE,
        *,
        inverse_epsilon: float = 0.0,
        inverse_alpha: float = 1.0,
        stream: tuple[int, ...] = (),
    ) -> None:
        self.triple = triple
        self.space = space
        self._decoder: Transform = build_transform(triple.transform, stream=stream)
        self._coder: Transform | None = (
            None if triple.inverse is None else build_transform(triple.inverse, stream=(*stream, 1))
        )
        if self.has_perfect_inverse:
            self.effective_epsilon, self.effective_alpha = triple.epsilon, triple.alpha
        else:
            self.effective_epsilon, self.effective_alpha = widen_for_inverse(triple, inverse_epsilon, inverse_alpha)
        self._draws = 0
        self._exact_coder: ExactTransform | None = None
        if triple.inverse is not None and has_exact_form(triple.inverse) and has_exact_form(triple.transform):
            self._exact_coder = self._coder  # type: ignore[assignment]

    @classmethod
    def from_profile(
        cls,
        profile: ArtiraProfile,
        space: MetricSpace,
        *,
        stream: tuple[int, ...] = (),
    ) -> Adapter:
        return cls(
            profile.triple,
            space,
            inverse_epsilon=profile.inverse_epsilon,
            inverse_alpha=profile.inverse_alpha,
            stream=stream,
        )

    @property
    def has_inverse(self) -> bool:
        return self._coder is not None

    @property
    def has_perfect_inverse(self) -> bool:
        inverse = self.triple.inverse
        return inverse is not None and inverse.is_perfect_inverse_of(self.triple.transform)

    @property
    def draws(self) -> int:
        """Stochastic draws consumed so far (durable across crash/recovery)."""

        return self._draws

    def decode(self, raw: Value | Exact) -> Value:
        """Apply ``F`` to an outgoing read."""

        return self._decoder.apply(raw, self._next_draw())  # type: ignore[arg-type]

    def encode(self, value: Value) -> Value | Exact:
        """Apply ``F⁻¹`` to an incoming write; raises ``NoInverse`` without a coder.

        When both sides are rational the result stays unrounded, so
        ``decode(encode(v)) == v`` holds for every finite *v*.
        """

        if self._coder is None:
            raise NoInverse(f"{self.triple.transform.kind.value} has no inverse; writes cannot be coded")
        draw = self._next_draw()
        if self._exact_coder is not None:
            return self._exact_coder.exact(value)
        return self._coder.apply(value, draw)

    def roundtrip_check(self, probes: Iterable[Value]) -> bool:
        """True iff ``decode(encode(v)) == v`` exactly for every probe."""

        return all(values_equal(self.decode(self.encode(probe)), probe) for probe in probes)

    def intercepts(self, op: ComponentOp) -> Transform | None:
        """Return the transform applied to *op* (``None`` for the stored value itself)."""

        if op is ComponentOp.EXPOSE:
            return self._decoder
        if op is ComponentOp.MODIFY:
            return self._coder
        return None

    def _next_draw(self) -> int:
        draw = self._draws
        self._draws += 1
        return draw
