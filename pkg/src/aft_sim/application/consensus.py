"""Matching predicates, value selection and learn rules.

Purpose
-------
Turn a set of replies into a decision. Two matching predicates are
provided.

- Classical quorum matching (``ft_match`` / ``ft_value``) needs replies
  that are identical.
- Approximate matching (``aft_match`` / ``aft_value``) accepts replies
  that are pairwise within a radius and certified with enough
  probability.

Pairwise closeness is not transitive. The matched set is therefore the
maximum clique of the match graph, found by exact search.

Contents
--------
* ``ft_match`` / ``ft_value``: exact-equality matching and seeded choice.
* ``aft_match`` / ``aft_value``: ε/α matching and policy-driven selection.
* ``pairwise_radius`` / ``exceeds_bound``: the explicit leader-state check.
* ``learn_write`` / ``learn_read``: what the requester learns in each mode.
* ``detect_fault``: detection-only use of the match graph.

System Role
-----------
Pure functions called once per request by the simulator
(:mod:`aft_sim.application.simnet.cluster`). Ties always go to the
lexicographically smallest node-id set, and random choices are seeded, so
replays are exact.
"""

from __future__ import annotations

import math
import statistics
from fractions import Fraction
from typing import Iterable, Sequence

import networkx as nx

from ..domain.errors import KindMismatch, NonNumericPolicy, NotMatched, TooManyNodes
from ..domain.metric import MetricSpace, Value, ValueKind, distance, kind_of, values_equal
from ..domain.quorum import FaultReport, MatchMode, MatchSet, Policy, PolicyKind, QuorumConfig, Response, WriteMode
from ..domain.scenario import MAX_CLIQUE_NODES
from .streams import pick_index

__all__ = [
    "ft_match",
    "ft_value",
    "aft_match",
    "aft_value",
    "pairwise_radius",
    "exceeds_bound",
    "learn_write",
    "learn_read",
    "detect_fault",
]


def ft_match(responses: Sequence[Response], cfg: QuorumConfig) -> MatchSet:
    """Largest group of identical replies; ties go to the group holding the lowest node id.

    Examples
    --------
    >>> cfg = QuorumConfig(n=3, f=1, q=2)
    >>> ft_match([Response(0, 5), Response(1, 5), Response(2, 3)], cfg).member_ids
    frozenset({0, 1})
    >>> ft_match([Response(0, 1), Response(1, 2), Response(2, 3)], cfg).matched
    False
    """

    groups: list[list[Response]] = []
    for response in sorted(responses, key=lambda r: r.node_id):
        for group in groups:
            if values_equal(group[0].value, response.value):
                group.append(response)
                break
        else:
            groups.append([response])
    if not groups:
        return MatchSet(frozenset(), False, MatchMode.EXACT, 1.0)
    best = min(groups, key=lambda group: (-len(group), group[0].node_id))
    return MatchSet(
        member_ids=frozenset(r.node_id for r in best),
        matched=len(best) >= cfg.q,
        mode=MatchMode.EXACT,
        aggregate_alpha=math.prod(r.declared_alpha for r in best),
    )


def ft_value(match: MatchSet, responses: Sequence[Response], seed: int, *, draw: int = 0) -> Value:
    """Value of a seeded-uniform member; all members agree, so any draw gives the same value."""

    return _pick_member(match, responses, seed, draw).value


def aft_match(
    responses: Sequence[Response],
    cfg: QuorumConfig,
    space: MetricSpace,
    epsilon: float,
    alpha: float,
) -> MatchSet:
    """Maximum clique of the ε/α match graph.

    Edge ``(i, j)`` exists iff ``d(r_i, r_j) ≤ max(ε, ε_i + ε_j)`` and
    ``α_i · α_j ≥ α``. Replies of incomparable kinds never match.

    Examples
    --------
    >>> cfg = QuorumConfig(n=3, f=1, q=2)
    >>> replies = [Response(0, 12.0), Response(1, 12.4), Response(2, 12.8)]
    >>> aft_match(replies, cfg, MetricSpace.ABSOLUTE_DIFFERENCE, 0.5, 1.0).member_ids
    frozenset({0, 1})
    """

    cliques = _maximum_cliques(responses, cfg, space, epsilon, alpha)
    if not cliques:
        return MatchSet(frozenset(), False, MatchMode.EXACT, 1.0)
    members = cliques[0]
    chosen = [r for r in responses if r.node_id in members]
    return MatchSet(
        member_ids=frozenset(members),
        matched=len(members) >= cfg.q,
        mode=_match_mode(chosen, epsilon, alpha),
        aggregate_alpha=math.prod(r.declared_alpha for r in chosen),
    )


def aft_value(match: MatchSet, responses: Sequence[Response], policy: Policy, *, draw: int = 0) -> Value:
    """Apply *policy* to the matched replies.

    Examples
    --------
    >>> replies = [Response(0, 10.0), Response(1, 10.3, True, 0.3, 1.0)]
    >>> match = MatchSet(frozenset({0, 1}), True, MatchMode.EPSILON_BOUNDED)
    >>> aft_value(match, replies, Policy(PolicyKind.MEAN))
    10.15
    >>> aft_value(match, replies, Policy(PolicyKind.PREFER_REPLICA))
    10.0
    """

    if policy.kind is PolicyKind.RANDOM:
        return _pick_member(match, responses, policy.seed, draw).value
    members = _members(match, responses)
    if policy.kind is PolicyKind.PREFER_REPLICA:
        replicas = [r for r in members if not r.is_artira]
        if replicas:
            return replicas[0].value
        return _median([r.value for r in members])
    values = [r.value for r in members]
    if policy.kind is PolicyKind.MIN:
        return min(_scalars(values, "min"))
    if policy.kind is PolicyKind.MAX:
        return max(_scalars(values, "max"))
    if policy.kind is PolicyKind.MEAN:
        return _mean(values)
    return _median(values)


def pairwise_radius(epsilon: float, first: Response, second: Response) -> float:
    """Matching radius between two replies: ``max(ε, ε_i + ε_j)``."""

    return max(epsilon, first.declared_epsilon + second.declared_epsilon)


def exceeds_bound(space: MetricSpace, state: Value, leader_state: Value, radius: float) -> bool:
    """True when *state* sits farther than *radius* from *leader_state* (or cannot be compared)."""

    try:
        return distance(space, state, leader_state) > radius
    except KindMismatch:
        return True


def learn_write(
    responses: Sequence[Response],
    cfg: QuorumConfig,
    *,
    mode: WriteMode,
    leader_id: int | None,
    vetoes: Iterable[int] = (),
    policy: Policy,
    space: MetricSpace,
    epsilon: float,
    alpha: float,
    draw: int = 0,
) -> tuple[MatchSet, Value | None]:
    """Decide a write round; ``None`` means no quorum.

    Leader-state mode learns the proposer's own post-state. It needs the
    proposer inside a quorum of non-vetoing acceptors. Vector mode applies
    *policy* over the matched post-states.
    """

    if mode is WriteMode.LEADER_STATE:
        vetoed = frozenset(vetoes)
        candidates = [r for r in responses if r.node_id not in vetoed]
        match = aft_match(candidates, cfg, space, epsilon, alpha)
        if not match.matched or leader_id not in match.member_ids:
            return _unmatched(match), None
        leader = next(r for r in candidates if r.node_id == leader_id)
        return match, leader.value
    match = aft_match(responses, cfg, space, epsilon, alpha)
    if not match.matched:
        return match, None
    return match, aft_value(match, responses, policy, draw=draw)


def learn_read(
    responses: Sequence[Response],
    cfg: QuorumConfig,
    *,
    policy: Policy,
    space: MetricSpace,
    epsilon: float,
    alpha: float,
    draw: int = 0,
) -> tuple[MatchSet, Value | None]:
    """Decide a read round from the decoded replies."""

    match = aft_match(responses, cfg, space, epsilon, alpha)
    if not match.matched:
        return match, None
    return match, aft_value(match, responses, policy, draw=draw)


def detect_fault(
    responses: Sequence[Response],
    cfg: QuorumConfig,
    space: MetricSpace,
    epsilon: float,
    alpha: float,
) -> FaultReport:
    """Flag repliers outside the maximum clique; never commits a value.

    ``ambiguous`` is set when several distinct maximum cliques exist, in which
    case the tie-broken clique decides the suspects.

    Examples
    --------
    >>> cfg = QuorumConfig(n=3, f=1, q=2)
    >>> replies = [Response(0, 10.0), Response(1, 10.1), Response(2, 55.0)]
    >>> detect_fault(replies, cfg, MetricSpace.ABSOLUTE_DIFFERENCE, 0.5, 1.0).suspects
    frozenset({2})
    """

    cliques = _maximum_cliques(responses, cfg, space, epsilon, alpha)
    members = cliques[0] if cliques else frozenset()
    chosen = [r for r in responses if r.node_id in members]
    return FaultReport(
        suspects=frozenset(r.node_id for r in responses) - members,
        confidence=math.prod(r.declared_alpha for r in chosen),
        ambiguous=len(cliques) > 1,
        members=members,
    )


def _maximum_cliques(
    responses: Sequence[Response],
    cfg: QuorumConfig,
    space: MetricSpace,
    epsilon: float,
    alpha: float,
) -> list[frozenset[int]]:
    """All maximum cliques, ordered so the lexicographically smallest id list comes first."""

    if max(cfg.n, len(responses)) > MAX_CLIQUE_NODES:
        raise TooManyNodes(f"exact clique search supports at most {MAX_CLIQUE_NODES} nodes")
    graph = _match_graph(responses, space, epsilon, alpha)
    if graph.number_of_nodes() == 0:
        return []
    ranked = sorted((sorted(clique) for clique in nx.find_cliques(graph)), key=lambda ids: (-len(ids), ids))
    best = len(ranked[0])
    return [frozenset(ids) for ids in ranked if len(ids) == best]


def _match_graph(responses: Sequence[Response], space: MetricSpace, epsilon: float, alpha: float) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(r.node_id for r in responses)
    for index, first in enumerate(responses):
        for second in responses[index + 1 :]:
            if _matches(first, second, space, epsilon, alpha):
                graph.add_edge(first.node_id, second.node_id)
    return graph


def _matches(first: Response, second: Response, space: MetricSpace, epsilon: float, alpha: float) -> bool:
    if first.declared_alpha * second.declared_alpha < alpha:
        return False
    try:
        return distance(space, first.value, second.value) <= pairwise_radius(epsilon, first, second)
    except KindMismatch:
        return False


def _match_mode(members: Sequence[Response], epsilon: float, alpha: float) -> MatchMode:
    if alpha < 1.0 or any(r.declared_alpha < 1.0 for r in members):
        return MatchMode.PROBABILISTIC
    if epsilon == 0.0 and all(r.declared_epsilon == 0.0 for r in members):
        return MatchMode.EXACT
    return MatchMode.EPSILON_BOUNDED


def _unmatched(match: MatchSet) -> MatchSet:
    return MatchSet(match.member_ids, False, match.mode, match.aggregate_alpha)


def _members(match: MatchSet, responses: Sequence[Response]) -> list[Response]:
    if not match.matched:
        raise NotMatched("no quorum: the match set is below q")
    return sorted((r for r in responses if r.node_id in match.member_ids), key=lambda r: r.node_id)


def _pick_member(match: MatchSet, responses: Sequence[Response], seed: int, draw: int) -> Response:
    members = _members(match, responses)
    return members[pick_index(seed, draw, len(members))]


def _scalars(values: Sequence[Value], policy: str) -> list[float | int]:
    if not all(kind_of(v) in (ValueKind.REAL, ValueKind.INTEGER) for v in values):
        raise NonNumericPolicy(f"{policy} needs real or integer values")
    return list(values)  # type: ignore[arg-type]


def _mean(values: Sequence[Value]) -> Value:
    if values and all(kind_of(v) is ValueKind.VECTOR for v in values):
        columns = zip(*values)  # type: ignore[misc]
        return tuple(math.fsum(column) / len(values) for column in columns)
    numbers = _scalars(values, "mean")
    if all(isinstance(v, int) for v in numbers):
        return round(Fraction(sum(numbers), len(numbers)))
    return math.fsum(numbers) / len(numbers)


def _median(values: Sequence[Value]) -> Value:
    if values and all(kind_of(v) is ValueKind.VECTOR for v in values):
        return tuple(float(statistics.median(column)) for column in zip(*values))  # type: ignore[misc]
    return statistics.median(_scalars(values, "median"))
