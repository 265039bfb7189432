"""Reference computations written without the library's helpers.

Each oracle restates one rule in the plainest Python available (``math``,
``fractions``, ``itertools``, ``bisect``) so a regression in the library
cannot hide behind a shared helper.
"""

from __future__ import annotations

import bisect
import itertools
import math
from fractions import Fraction
from typing import Callable, Sequence

from aft_sim.domain.quorum import FaultModel, Policy, QuorumConfig
from aft_sim.domain.scenario import NetModel, NodeSpec, RunMode, Scenario, WorkloadOp


def two_pass_pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Pearson coefficient: means first, then centred sums, all through ``math.fsum``.

    >>> two_pass_pearson([1.0, 2.0, 3.0], [2.0, 4.0, 6.0])
    1.0
    """

    count = len(xs)
    mean_x = math.fsum(xs) / count
    mean_y = math.fsum(ys) / count
    dx = [x - mean_x for x in xs]
    dy = [y - mean_y for y in ys]
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    sxx = math.fsum(a * a for a in dx)
    syy = math.fsum(b * b for b in dy)
    return max(-1.0, min(1.0, sxy / math.sqrt(sxx * syy)))


def grid_scan_qualification(
    residuals: Sequence[float],
    target_alpha: float,
    target_epsilon: float,
    step: str,
) -> tuple[bool, float, float]:
    """Return ``(accepted, alpha, epsilon)`` by scanning sorted residuals over an exact grid.

    *step* is a decimal string so grid points are ``float(k · step)`` computed
    in rational arithmetic.

    >>> grid_scan_qualification([0.0, 0.05, 0.2], 1.0, 0.3, "0.1")
    (True, 1.0, 0.2)
    """

    ordered = sorted(residuals)
    exact_step = Fraction(step)
    grid: list[float] = []
    k = 0
    while float(k * exact_step) <= target_epsilon:
        grid.append(float(k * exact_step))
        k += 1
    if not grid or grid[-1] < target_epsilon:
        grid.append(target_epsilon)
    alpha = 0.0
    epsilon = 0.0
    for epsilon in grid:
        alpha = bisect.bisect_right(ordered, epsilon) / len(ordered)
        if alpha >= target_alpha:
            return True, alpha, epsilon
    return False, alpha, epsilon


def brute_force_clique(ids: Sequence[int], adjacent: Callable[[int, int], bool]) -> tuple[int, ...]:
    """Largest pairwise-adjacent subset; ties go to the lexicographically smallest id tuple.

    >>> brute_force_clique([0, 1, 2], lambda a, b: {a, b} != {0, 2})
    (0, 1)
    """

    ordered = sorted(ids)
    for size in range(len(ordered), 0, -1):
        for subset in itertools.combinations(ordered, size):
            if all(adjacent(a, b) for a, b in itertools.combinations(subset, 2)):
                return subset
    return ()


def make_scenario(
    nodes: Sequence[NodeSpec],
    workload: Sequence[WorkloadOp],
    *,
    f: int = 1,
    fault_model: FaultModel = FaultModel.CRASH_STOP,
    name: str = "fixture",
    seed: int = 0,
    mode: RunMode = RunMode.VECTOR,
    policy: Policy | None = None,
    epsilon: float = 0.0,
    alpha: float = 1.0,
    net: NetModel | None = None,
) -> Scenario:
    """Assemble a scenario with the standard sizing for *f* and *fault_model*."""

    return Scenario(
        name=name,
        seed=seed,
        cfg=QuorumConfig.sized(f, fault_model, n=len(nodes)),
        nodes=tuple(nodes),
        workload=tuple(workload),
        net=net if net is not None else NetModel(),
        mode=mode,
        policy=policy if policy is not None else Policy.random(seed),
        protocol_epsilon=epsilon,
        protocol_alpha=alpha,
    )
