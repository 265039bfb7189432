from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
import pytest

from aft_sim.application.redundancy import (
    build_action_map,
    check_partial_redundancy,
    check_redundancy,
    classify_relation,
    correlation_class,
    default_model,
    epsilon_grid,
    estimate_beta,
    estimate_correlation,
    qualify_artira,
    reverse_action_map,
)
from aft_sim.domain.artira import (
    ArtiraTriple,
    CorrelationClass,
    Feasibility,
    PairedSamples,
    RedundancyLevel,
    Rejection,
    ReplicationModel,
    TransformSpec,
)
from aft_sim.domain.errors import DegenerateSamples, EmptyCondition, NonNumeric, ValidationError
from aft_sim.domain.metric import MetricSpace, Symbol
from tests.support import grid_scan_qualification, two_pass_pearson


def _noisy_pairs(seed: int, count: int, slope: float, noise: float) -> PairedSamples:
    rng = np.random.default_rng(seed)
    xs = rng.normal(50.0, 10.0, size=count)
    ys = slope * xs + rng.normal(0.0, noise, size=count)
    return PairedSamples.of(zip(xs.tolist(), ys.tolist()))


@pytest.mark.parametrize(
    ("seed", "slope", "noise"),
    [(1, 2.0, 0.5), (2, -1.0, 3.0), (3, 0.5, 20.0), (4, 3.0, 0.0), (5, -0.2, 1.0)],
)
def test_correlation_matches_two_pass_reference(seed: int, slope: float, noise: float) -> None:
    samples = _noisy_pairs(seed, 500, slope, noise)
    expected = two_pass_pearson([float(x) for x in samples.xs], [float(y) for y in samples.ys])
    assert abs(estimate_correlation(samples) - expected) <= 1e-12


@pytest.mark.parametrize("seed", range(6))
def test_correlation_is_symmetric_in_its_pairs(seed: int) -> None:
    samples = _noisy_pairs(seed, 200, slope=(-1.5) ** seed, noise=float(seed))
    assert estimate_correlation(samples) == estimate_correlation(samples.swapped())


def test_correlation_sign_and_bounds() -> None:
    assert estimate_correlation(PairedSamples.of([(1, 2), (2, 4), (3, 6)])) == pytest.approx(1.0)
    assert estimate_correlation(PairedSamples.of([(1, 10), (2, 0), (3, -10)])) == pytest.approx(-1.0)


def test_zero_variance_is_degenerate() -> None:
    with pytest.raises(DegenerateSamples):
        estimate_correlation(PairedSamples.of([(1, 1), (1, 2), (1, 3)]))


def test_symbols_are_not_numeric() -> None:
    with pytest.raises(NonNumeric):
        estimate_correlation(PairedSamples.of([(Symbol("a"), 1), (Symbol("b"), 2)]))


def test_check_redundancy_thresholds_the_magnitude() -> None:
    negative = PairedSamples.of([(1, -1), (2, -2), (3, -3.1)])
    report = check_redundancy(negative, 0.9)
    assert report.accepted
    assert report.zeta < 0
    assert (report.beta, report.count, report.tau) == (1.0, 3, 0.9)
    assert not check_redundancy(_noisy_pairs(3, 200, 0.5, 20.0), 0.9).accepted


def test_tau_must_be_in_the_unit_interval() -> None:
    with pytest.raises(ValidationError):
        check_redundancy(PairedSamples.of([(1, 1), (2, 2)]), 1.5)


def test_beta_is_conditional_frequency() -> None:
    samples = PairedSamples.of([(i, i % 3) for i in range(12)])
    beta = estimate_beta(samples, lambda x, y: y == 0, lambda x, y: x < 6)
    assert beta == pytest.approx(2 / 6)


def test_beta_with_an_empty_condition() -> None:
    samples = PairedSamples.of([(1, 1), (2, 2)])
    with pytest.raises(EmptyCondition):
        estimate_beta(samples, lambda x, y: True, lambda x, y: x > 10)


B_ACTIONS = {"set": [1.0, 2.0, 3.0, 4.0], "bump": [2.0, 4.0, 6.0, 8.0]}
A_ACTIONS = {"write": [1.0, 2.0, 3.0, 4.0], "read": [4.0, 1.0, 3.0, 2.0]}


def test_action_map_picks_the_best_correlated_action() -> None:
    action_map = build_action_map(B_ACTIONS, A_ACTIONS, 0.9)
    assert {name: mapping.target for name, mapping in action_map.entries.items()} == {"bump": "write", "set": "write"}
    assert check_partial_redundancy(action_map, 0.9) is RedundancyLevel.FULL


def test_redundancy_is_not_symmetric_at_action_level() -> None:
    forward = build_action_map(B_ACTIONS, A_ACTIONS, 0.9)
    backward = reverse_action_map(forward, A_ACTIONS)
    assert backward.entries["write"].target == "bump"
    assert backward.entries["read"].target is None
    assert check_partial_redundancy(backward, 0.9) is RedundancyLevel.PARTIAL


def test_unmapped_actions_mean_no_redundancy() -> None:
    action_map = build_action_map({"noise": [1.0, 2.0, 2.0, 1.0]}, {"read": [4.0, 1.0, 3.0, 2.0]}, 0.9)
    assert action_map.entries["noise"].target is None
    assert check_partial_redundancy(action_map, 0.9) is RedundancyLevel.NONE


def test_degenerate_actions_are_skipped() -> None:
    action_map = build_action_map({"const": [1.0, 1.0, 1.0]}, {"write": [1.0, 2.0, 3.0]}, 0.5)
    assert action_map.entries["const"].target is None


def test_mismatched_action_lengths_are_rejected() -> None:
    with pytest.raises(ValidationError):
        build_action_map({"set": [1.0, 2.0]}, {"write": [1.0, 2.0, 3.0]}, 0.9)


def test_empty_action_map_is_rejected() -> None:
    with pytest.raises(ValidationError):
        check_partial_redundancy(build_action_map({}, A_ACTIONS, 0.9), 0.9)


@pytest.mark.parametrize(
    ("pairs", "expected"),
    [
        ([(1, 1), (2, 2), (3, 3)], Feasibility.EXACT_COPY),
        ([(1, 2), (2, 4), (3, 6)], Feasibility.PERFECT_POSITIVE),
        ([(1, -1), (2, -2), (3, -3)], Feasibility.PERFECT_NEGATIVE),
        ([(1, 1.1), (2, 1.9), (3, 3.2), (4, 3.9)], Feasibility.POSITIVE),
        ([(1, -1.1), (2, -1.9), (3, -3.2), (4, -3.9)], Feasibility.NEGATIVE),
        ([(1, 1), (2, -1), (3, 1), (4, -1)], Feasibility.NONE),
    ],
)
def test_feasibility_spectrum(pairs, expected: Feasibility) -> None:
    assert classify_relation(PairedSamples.of(pairs), 0.9) is expected


@pytest.mark.parametrize(
    ("transform", "expected_class", "expected_model"),
    [
        (TransformSpec.identity(), CorrelationClass.EC, ReplicationModel.PAR),
        (TransformSpec.affine(2, 1), CorrelationClass.PC_POSITIVE, ReplicationModel.PAR),
        (TransformSpec.affine(-1, 0), CorrelationClass.PC_NEGATIVE, ReplicationModel.PAR),
        (TransformSpec.negate(), CorrelationClass.PC_NEGATIVE, ReplicationModel.PAR),
        (TransformSpec.bounded_noise(0.4), CorrelationClass.BSC, ReplicationModel.SAR),
        (TransformSpec.stochastic_predictor(0.5, 0.9), CorrelationClass.USC, ReplicationModel.WAR),
    ],
)
def test_correlation_classes_and_default_models(transform, expected_class, expected_model) -> None:
    assert correlation_class(transform) is expected_class
    assert default_model(expected_class) is expected_model


def test_epsilon_grid_lands_on_decimal_points() -> None:
    assert epsilon_grid(0.3, 0.1) == [0.0, 0.1, 0.2, 0.3]
    assert epsilon_grid(0.0, 0.1) == [0.0]
    assert epsilon_grid(0.05, 0.1) == [0.0, 0.05]


# ---------------------------------------------------------------------------
# Qualification against the grid-scan reference
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QualificationCase:
    label: str
    samples: PairedSamples
    transform: TransformSpec
    predict: Callable[[object], object]
    alpha: float
    epsilon: float
    step: str
    space: MetricSpace = MetricSpace.ABSOLUTE_DIFFERENCE


def _uniform_noise(seed: int, xs: list[float], spread: float, slope: float = 1.0, offset: float = 0.0) -> PairedSamples:
    rng = np.random.default_rng(seed)
    noise = rng.uniform(-spread, spread, size=len(xs))
    return PairedSamples.of((x, slope * x + offset + float(e)) for x, e in zip(xs, noise))


_XS = [float(value) for value in range(1, 121)]
_CELSIUS = Fraction(5, 9), Fraction(-160, 9)


def _affine(scale: Fraction, offset: Fraction) -> Callable[[object], object]:
    return lambda x: float(Fraction(x) * scale + offset)  # type: ignore[arg-type]


QUALIFICATION_CASES = [
    QualificationCase("exact_copy", PairedSamples.of((x, x) for x in _XS), TransformSpec.identity(), lambda x: x, 1.0, 0.0, "0.01"),
    QualificationCase(
        "fahrenheit",
        PairedSamples.of((9 * k + 32, 5 * k) for k in range(-20, 40)),
        TransformSpec.affine(*_CELSIUS),
        _affine(*_CELSIUS),
        1.0,
        0.0,
        "0.01",
    ),
    QualificationCase("sensor_sar", _uniform_noise(7, _XS, 0.3), TransformSpec.identity(), lambda x: x, 1.0, 0.5, "0.01"),
    QualificationCase("sensor_war", _uniform_noise(7, _XS, 0.3), TransformSpec.identity(), lambda x: x, 0.6, 0.25, "0.05"),
    QualificationCase(
        "negated",
        _uniform_noise(8, _XS, 0.1, slope=-1.0),
        TransformSpec.negate(),
        lambda x: -x,  # type: ignore[operator]
        1.0,
        0.2,
        "0.01",
    ),
    QualificationCase(
        "reciprocal",
        PairedSamples.of((x, 1.0 / x) for x in _XS),
        TransformSpec.reciprocal(),
        lambda x: 1.0 / x,  # type: ignore[operator]
        1.0,
        0.0,
        "0.01",
    ),
    QualificationCase(
        "affine_noisy",
        _uniform_noise(9, _XS, 0.2, slope=2.0, offset=1.0),
        TransformSpec.affine(2, 1),
        _affine(Fraction(2), Fraction(1)),
        0.9,
        0.1,
        "0.01",
    ),
    QualificationCase("too_noisy", _uniform_noise(10, _XS, 1.0), TransformSpec.identity(), lambda x: x, 1.0, 0.2, "0.1"),
    QualificationCase(
        "integer_offsets",
        PairedSamples.of((k, k + k % 3) for k in range(60)),
        TransformSpec.identity(),
        lambda x: x,
        1.0,
        2.0,
        "0.5",
    ),
    QualificationCase(
        "categories",
        PairedSamples.of(
            (Symbol(f"c{k % 4}"), Symbol(f"c{k % 4}") if k % 5 else Symbol("other")) for k in range(50)
        ),
        TransformSpec.identity(),
        lambda x: x,
        0.7,
        0.0,
        "0.1",
        MetricSpace.DISCRETE01,
    ),
]


def _reference_residual(case: QualificationCase, x: object, y: object) -> float:
    predicted = case.predict(x)
    if case.space is MetricSpace.DISCRETE01:
        return 0.0 if predicted == y else 1.0
    return abs(float(predicted) - float(y))  # type: ignore[arg-type]


@pytest.mark.parametrize("case", QUALIFICATION_CASES, ids=lambda case: case.label)
def test_qualification_matches_grid_scan(case: QualificationCase) -> None:
    residuals = [_reference_residual(case, x, y) for x, y in case.samples.pairs]
    accepted, alpha, epsilon = grid_scan_qualification(residuals, case.alpha, case.epsilon, case.step)

    outcome = qualify_artira(case.samples, case.transform, case.alpha, case.epsilon, case.space, float(case.step))

    if accepted:
        assert isinstance(outcome, ArtiraTriple)
        assert (outcome.alpha, outcome.epsilon) == (alpha, epsilon)
        expected_model = ReplicationModel.WAR if alpha < 1.0 else ReplicationModel.PAR if epsilon == 0.0 else ReplicationModel.SAR
        assert outcome.model is expected_model
        assert outcome.transform == case.transform
        assert outcome.inverse == case.transform.default_inverse()
    else:
        assert isinstance(outcome, Rejection)
        assert (outcome.best_alpha, outcome.best_epsilon) == (alpha, epsilon)
        assert (outcome.target_alpha, outcome.target_epsilon) == (case.alpha, case.epsilon)


def test_qualification_fixtures_cover_every_outcome() -> None:
    outcomes = [
        qualify_artira(case.samples, case.transform, case.alpha, case.epsilon, case.space, float(case.step))
        for case in QUALIFICATION_CASES
    ]
    kinds = {outcome.model if isinstance(outcome, ArtiraTriple) else "rejected" for outcome in outcomes}
    assert kinds == {ReplicationModel.PAR, ReplicationModel.SAR, ReplicationModel.WAR, "rejected"}


@pytest.mark.parametrize(
    "case",
    [case for case in QUALIFICATION_CASES if case.space is MetricSpace.ABSOLUTE_DIFFERENCE],
    ids=lambda case: case.label,
)
def test_qualified_artiras_are_artificially_redundant(case: QualificationCase) -> None:
    outcome = qualify_artira(case.samples, case.transform, case.alpha, case.epsilon, case.space, float(case.step))
    if isinstance(outcome, Rejection):
        pytest.skip("fixture is not qualified")
    zeta = estimate_correlation(case.samples)
    assert check_redundancy(case.samples, abs(zeta)).accepted


def test_correlated_samples_with_the_wrong_transform_are_not_qualified() -> None:
    samples = PairedSamples.of((x, 2.0 * x + 1.0) for x in _XS)
    assert check_redundancy(samples, 0.99).accepted
    outcome = qualify_artira(samples, TransformSpec.identity(), 1.0, 0.5)
    assert isinstance(outcome, Rejection)
    assert outcome.best_alpha == 0.0
    assert isinstance(qualify_artira(samples, TransformSpec.affine(2, 1), 1.0, 0.5), ArtiraTriple)


def test_celsius_example_is_perfect() -> None:
    samples = PairedSamples.of([(212, 100), (32, 0), (-40, -40), (50, 10)])
    outcome = qualify_artira(samples, TransformSpec.affine(*_CELSIUS), 1.0, 0.01)
    assert isinstance(outcome, ArtiraTriple)
    assert outcome.model is ReplicationModel.PAR


@pytest.mark.parametrize(("alpha", "epsilon", "step"), [(0.0, 0.1, 0.01), (1.1, 0.1, 0.01), (1.0, -0.1, 0.01), (1.0, 0.1, 0.0)])
def test_qualification_rejects_bad_targets(alpha: float, epsilon: float, step: float) -> None:
    with pytest.raises(ValidationError):
        qualify_artira(PairedSamples.of([(1, 1), (2, 2)]), TransformSpec.identity(), alpha, epsilon, epsilon_step=step)
