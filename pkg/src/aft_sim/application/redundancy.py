"""Artificial redundancy analysis and artira qualification.

Purpose
-------
Decide from paired observations whether one component can stand in for
another, and certify an artira triple ``(F, F⁻¹, α, ε)`` by sweeping the
accuracy bound until the empirical certainty is high enough.

Contents
--------
* ``estimate_correlation`` – two-pass Pearson over numeric pairs.
* ``check_redundancy`` – threshold the coefficient; fills ``beta``.
* ``estimate_beta`` – empirical ``P(R | Q)`` over pairs.
* ``check_partial_redundancy`` – none / partial / full over an action map.
* ``build_action_map`` / ``reverse_action_map`` – per-action correlation
  and the opposite direction's view of it.
* ``qualify_artira`` – grid sweep of ``ε′`` returning a triple or a
  ``Rejection``.
* ``classify_relation`` / ``correlation_class`` / ``default_model`` –
  taxonomy helpers.

System Role
-----------
Pure computations used by ``core.qualify_samples`` and the ``qualify`` CLI
command. numpy carries the arithmetic.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from ..domain.artira import (
    ActionMap,
    ActionMapping,
    ArtiraTriple,
    CorrelationClass,
    CorrelationReport,
    Feasibility,
    PairedSamples,
    RedundancyLevel,
    Rejection,
    ReplicationModel,
    TransformKind,
    TransformSpec,
)
from ..domain.errors import AftError, DegenerateSamples, EmptyCondition, NonNumeric, ValidationError
from ..domain.metric import MetricSpace, Value, distance, is_numeric, values_equal
from .transforms import build_transform

__all__ = [
    "estimate_correlation",
    "check_redundancy",
    "estimate_beta",
    "check_partial_redundancy",
    "build_action_map",
    "reverse_action_map",
    "qualify_artira",
    "epsilon_grid",
    "classify_relation",
    "correlation_class",
    "default_model",
]

PairPredicate = Callable[[Value, Value], bool]

_GRID_DIGITS = 12


def estimate_correlation(samples: PairedSamples) -> float:
    """Return the Pearson coefficient of *samples* (mean pass, then covariance pass).

    Examples
    --------
    >>> estimate_correlation(PairedSamples.of([(1, 1), (2, 2), (3, 3)]))
    1.0
    >>> estimate_correlation(PairedSamples.of([(1, -1), (2, -2), (3, -3)]))
    -1.0
    """

    xs = _numeric_column(samples.xs, "x")
    ys = _numeric_column(samples.ys, "y")
    dx = xs - xs.mean()
    dy = ys - ys.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateSamples("correlation is undefined when a marginal has zero variance")
    zeta = float(np.dot(dx, dy)) / math.sqrt(sxx * syy)
    return float(np.clip(zeta, -1.0, 1.0))


def check_redundancy(samples: PairedSamples, tau: float) -> CorrelationReport:
    """Accept artificial redundancy iff ``|ζ| ≥ τ``.

    ``beta`` uses the default predicates, so it is ``P(x observed | y
    observed)``, which is 1 on complete paired data.
    """

    _require_unit_interval(tau, "tau")
    zeta = estimate_correlation(samples)
    beta = estimate_beta(samples, _always, _always)
    return CorrelationReport(zeta=zeta, tau=tau, accepted=abs(zeta) >= tau, beta=beta, count=samples.count)


def estimate_beta(samples: PairedSamples, predicate_r: PairPredicate, predicate_q: PairPredicate) -> float:
    """Return ``count(R ∧ Q) / count(Q)``; predicates receive each ``(x, y)`` pair.

    Examples
    --------
    >>> pairs = PairedSamples.of([(i, i) for i in range(10)])
    >>> estimate_beta(pairs, lambda x, y: x < 7, lambda x, y: True)
    0.7
    """

    conditioned = [(x, y) for x, y in samples.pairs if predicate_q(x, y)]
    if not conditioned:
        raise EmptyCondition("no sample satisfies the conditioning predicate")
    hits = sum(1 for x, y in conditioned if predicate_r(x, y))
    return hits / len(conditioned)


def check_partial_redundancy(action_map: ActionMap, tau: float) -> RedundancyLevel:
    """Full when every action is covered by an accepted mapping, partial when some are."""

    if not action_map.entries:
        raise ValidationError("action map must not be empty")
    _require_unit_interval(tau, "tau")
    covered = [_mapping_accepted(mapping, tau) for mapping in action_map.entries.values()]
    if all(covered):
        return RedundancyLevel.FULL
    if any(covered):
        return RedundancyLevel.PARTIAL
    return RedundancyLevel.NONE


def build_action_map(
    b_actions: Mapping[str, Sequence[Value]],
    a_actions: Mapping[str, Sequence[Value]],
    tau: float,
) -> ActionMap:
    """Map every action of B to the best-correlated accepted action of A.

    Outputs are matched by position, so each sequence holds observations under
    the same conditions. Ties on ``|ζ|`` go to the lexicographically smallest
    A action; degenerate pairings count as not accepted.
    """

    entries: dict[str, ActionMapping] = {}
    for b_name in sorted(b_actions):
        best: tuple[str, CorrelationReport] | None = None
        for a_name in sorted(a_actions):
            report = _try_report(a_actions[a_name], b_actions[b_name], tau)
            if report is None or not report.accepted:
                continue
            if best is None or abs(report.zeta) > abs(best[1].zeta):
                best = (a_name, report)
        entries[b_name] = ActionMapping(best[0], best[1]) if best else ActionMapping(None, None)
    return ActionMap(entries)


def reverse_action_map(action_map: ActionMap, a_actions: Iterable[str]) -> ActionMap:
    """View *action_map* from A's side: each A action maps to the first B action that chose it.

    Redundancy is not symmetric at the action level: a full map from B to A
    can reverse into a partial one.
    """

    entries: dict[str, ActionMapping] = {name: ActionMapping(None, None) for name in sorted(a_actions)}
    for b_name in sorted(action_map.entries):
        mapping = action_map.entries[b_name]
        if mapping.target is None or entries.get(mapping.target, ActionMapping(None, None)).target is not None:
            continue
        entries[mapping.target] = ActionMapping(b_name, mapping.report)
    return ActionMap(entries)


def epsilon_grid(target_epsilon: float, epsilon_step: float) -> list[float]:
    """Return ``0, step, 2·step, …`` up to *target_epsilon*, ending exactly at the target.

    Grid points are rounded to 12 decimals so ``3 × 0.1`` lands on ``0.3``.

    Examples
    --------
    >>> epsilon_grid(0.3, 0.1)
    [0.0, 0.1, 0.2, 0.3]
    >>> epsilon_grid(0.25, 0.1)
    [0.0, 0.1, 0.2, 0.25]
    """

    grid: list[float] = []
    k = 0
    while True:
        point = round(k * epsilon_step, _GRID_DIGITS)
        if point > target_epsilon:
            break
        grid.append(point)
        k += 1
    if not grid or grid[-1] < target_epsilon:
        grid.append(target_epsilon)
    return grid


def qualify_artira(
    samples: PairedSamples,
    transform: TransformSpec,
    target_alpha: float,
    target_epsilon: float,
    space: MetricSpace = MetricSpace.ABSOLUTE_DIFFERENCE,
    epsilon_step: float = 0.01,
) -> ArtiraTriple | Rejection:
    """Certify ``transform`` against *samples* or explain how close it came.

    Residuals are ``d(F(x), y)``. At each grid point ``ε′`` the certainty is
    ``α′ = fraction of residuals ≤ ε′``; the first point reaching
    *target_alpha* wins and the model follows from ``(α′, ε′)``.

    Examples
    --------
    >>> exact = PairedSamples.of([(1.0, 1.0), (2.0, 2.0), (5.0, 5.0)])
    >>> qualify_artira(exact, TransformSpec.identity(), 1.0, 0.0).model.value
    'PAR'
    """

    if not 0.0 < target_alpha <= 1.0:
        raise ValidationError(f"target alpha must lie in (0, 1], got {target_alpha}")
    if not target_epsilon >= 0.0:
        raise ValidationError(f"target epsilon must be non-negative, got {target_epsilon}")
    if not epsilon_step > 0.0:
        raise ValidationError(f"epsilon step must be positive, got {epsilon_step}")

    residuals = _residuals(samples, transform, space)
    alpha_prime, epsilon_prime = 0.0, 0.0
    for epsilon_prime in epsilon_grid(target_epsilon, epsilon_step):
        alpha_prime = float(np.count_nonzero(residuals <= epsilon_prime)) / residuals.size
        if alpha_prime >= target_alpha:
            triple = ArtiraTriple(
                transform=transform,
                inverse=transform.default_inverse(),
                alpha=alpha_prime,
                epsilon=epsilon_prime,
                model=_model_for(alpha_prime, epsilon_prime),
            )
            return triple
    return Rejection(
        best_alpha=alpha_prime,
        best_epsilon=epsilon_prime,
        target_alpha=target_alpha,
        target_epsilon=target_epsilon,
    )


def classify_relation(samples: PairedSamples, tau: float) -> Feasibility:
    """Place a component pair on the feasibility spectrum (exact copy first, unrelated last).

    Examples
    --------
    >>> classify_relation(PairedSamples.of([(1, 1), (2, 2)]), 0.5)
    <Feasibility.EXACT_COPY: 'exact_copy'>
    >>> classify_relation(PairedSamples.of([(1, -1), (2, -2), (3, -3)]), 0.5)
    <Feasibility.PERFECT_NEGATIVE: 'perfect_negative'>
    """

    _require_unit_interval(tau, "tau")
    if all(values_equal(x, y) for x, y in samples.pairs):
        return Feasibility.EXACT_COPY
    zeta = estimate_correlation(samples)
    if math.isclose(abs(zeta), 1.0, rel_tol=0.0, abs_tol=1e-12):
        return Feasibility.PERFECT_POSITIVE if zeta > 0 else Feasibility.PERFECT_NEGATIVE
    if abs(zeta) >= tau:
        return Feasibility.POSITIVE if zeta > 0 else Feasibility.NEGATIVE
    return Feasibility.NONE


def correlation_class(transform: TransformSpec) -> CorrelationClass:
    """Return the correlation class a built-in transform realises."""

    kind = transform.kind
    if kind is TransformKind.IDENTITY:
        return CorrelationClass.EC
    if kind is TransformKind.AFFINE:
        return CorrelationClass.PC_POSITIVE if transform.scale > 0 else CorrelationClass.PC_NEGATIVE
    if kind in (TransformKind.NEGATE, TransformKind.RECIPROCAL):
        return CorrelationClass.PC_NEGATIVE
    if kind is TransformKind.BOUNDED_NOISE:
        return CorrelationClass.BSC
    return CorrelationClass.USC


def default_model(correlation: CorrelationClass) -> ReplicationModel:
    """Exact and perfectly correlated classes are PAR; bounded is SAR; unbounded is WAR."""

    if correlation is CorrelationClass.BSC:
        return ReplicationModel.SAR
    if correlation is CorrelationClass.USC:
        return ReplicationModel.WAR
    return ReplicationModel.PAR


def _numeric_column(values: Sequence[Value], label: str) -> np.ndarray:
    if not all(is_numeric(value) for value in values):
        raise NonNumeric(f"{label} samples must be real or integer values")
    return np.asarray([float(value) for value in values], dtype=np.float64)  # type: ignore[arg-type]


def _residuals(samples: PairedSamples, transform: TransformSpec, space: MetricSpace) -> np.ndarray:
    decoder = build_transform(transform)
    residuals = [distance(space, decoder.apply(x, draw), y) for draw, (x, y) in enumerate(samples.pairs)]
    return np.asarray(residuals, dtype=np.float64)


def _model_for(alpha: float, epsilon: float) -> ReplicationModel:
    if alpha < 1.0:
        return ReplicationModel.WAR
    return ReplicationModel.PAR if epsilon == 0.0 else ReplicationModel.SAR


def _try_report(xs: Sequence[Value], ys: Sequence[Value], tau: float) -> CorrelationReport | None:
    if len(xs) != len(ys):
        raise ValidationError("paired action outputs must have equal lengths")
    try:
        return check_redundancy(PairedSamples.of(zip(xs, ys)), tau)
    except AftError:
        return None


def _mapping_accepted(mapping: ActionMapping, tau: float) -> bool:
    return mapping.target is not None and mapping.report is not None and abs(mapping.report.zeta) >= tau


def _require_unit_interval(value: float, label: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"{label} must lie in [0, 1], got {value}")


def _always(_x: Value, _y: Value) -> bool:
    return True
