"""Scenario file adapter.

Purpose
-------
Read and write the flat scenario text format::

    name = par_exact
    f = 1
    workload = ramp(0, 0.5, 100)

    [node.0]
    kind = replica
    initial = 0.0

Syntax problems (unknown or duplicate keys, malformed tokens) raise
:class:`~aft_sim.domain.errors.ParseError` at the first offending position.
Semantic problems are collected over the whole document and raised together
as one :class:`~aft_sim.domain.errors.ValidationError`.

Contents
    - ``parse_scenario`` / ``emit_scenario``: document level.
    - ``parse_value`` / ``format_value``: one :data:`Value` token.
    - ``parse_transform`` / ``format_transform``: transform specs such as
      ``affine(5/9, -160/9)``.
    - ``DefaultScenarioCodec``: the ``ScenarioCodec`` port.

System Role
-----------
Called by :mod:`aft_sim.core` to load scenario files and by the ``qualify``
command to read ``--transform``. ``emit_scenario`` writes a canonical form
that parses back to an equal scenario.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, TypeVar

from ...application.redundancy import correlation_class, default_model
from ...domain.artira import ArtiraTriple, ReplicationModel, TransformKind, TransformSpec
from ...domain.errors import ParseError, ValidationError
from ...domain.metric import MetricSpace, Symbol, Value, ValueKind, kind_of
from ...domain.quorum import FaultModel, Policy, PolicyKind, QuorumConfig, RequestKind, default_sizing, quorum_problems
from ...domain.scenario import (
    ALL_ROLES,
    ArtiraProfile,
    ByzantineKind,
    ByzantineStrategy,
    FaultEvent,
    FaultKind,
    NetModel,
    NodeSpec,
    Role,
    RunMode,
    Scenario,
    WorkloadOp,
    scenario_problems,
)
from ...observability import log_debug, log_error

__all__ = [
    "TOP_LEVEL_KEYS",
    "NODE_KEYS",
    "parse_scenario",
    "emit_scenario",
    "parse_value",
    "format_value",
    "parse_transform",
    "format_transform",
    "DefaultScenarioCodec",
]

TOP_LEVEL_KEYS: tuple[str, ...] = (
    "name",
    "seed",
    "mode",
    "policy",
    "epsilon",
    "alpha",
    "fault_model",
    "n",
    "f",
    "q",
    "space",
    "net.base_delay",
    "net.jitter",
    "net.drop_prob",
    "net.timeout",
    "workload",
)
NODE_KEYS: tuple[str, ...] = (
    "kind",
    "initial",
    "roles",
    "transform",
    "inverse",
    "model",
    "alpha",
    "epsilon",
    "inverse_alpha",
    "inverse_epsilon",
    "faults",
)
_ARTIRA_ONLY = frozenset(NODE_KEYS[3:10])
_ROLE_ORDER = (Role.PROPOSER, Role.ACCEPTOR, Role.LEARNER)

_KEY = re.compile(r"[a-z_][a-z0-9_.]*")
_SECTION = re.compile(r"\[\s*node\.(\d+)\s*\]")
_INTEGER = re.compile(r"[+-]?\d+")
_REAL = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?")
_CALL = re.compile(r"([a-z_][a-z0-9_]*)\s*(?:\((.*)\))?", re.DOTALL)
_REPEAT_READ = re.compile(r"read\s*\*\s*(\d+)")
_FAULT = re.compile(r"([a-z_]+)\s*@\s*(\d+)\s*(?::\s*(.+))?", re.DOTALL)
_SYMBOL_FORBIDDEN = frozenset(" ,()#=[]\t")

E = TypeVar("E")


@dataclass(frozen=True, slots=True)
class _Entry:
    """Raw value text with the position where it starts (1-based)."""

    text: str
    line: int
    column: int

    def fail(self, message: str, offset: int = 0) -> ParseError:
        return ParseError(message, line=self.line, column=self.column + offset)


@dataclass(slots=True)
class _Document:
    top: dict[str, _Entry] = field(default_factory=dict)
    nodes: dict[int, dict[str, _Entry]] = field(default_factory=dict)


class DefaultScenarioCodec:
    """``ScenarioCodec`` over the text format; *fallback_seed* fills a missing ``seed``."""

    def __init__(self, *, fallback_seed: int = 0) -> None:
        self._fallback_seed = fallback_seed

    def parse(self, text: str) -> Scenario:
        return parse_scenario(text, fallback_seed=self._fallback_seed)

    def emit(self, scenario: Scenario) -> str:
        return emit_scenario(scenario)


def parse_scenario(text: str, *, fallback_seed: int = 0, source: str | None = None) -> Scenario:
    """Parse *text* into a validated scenario.

    Parameters
    ----------
    text:
        Scenario document.
    fallback_seed:
        Seed used when the document has no ``seed`` key.
    source:
        Path or label used in log events only.

    Examples
    --------
    >>> scenario = parse_scenario('''
    ... name = demo
    ... f = 1
    ... workload = write(3), read
    ... [node.0]
    ... initial = 0
    ... [node.1]
    ... initial = 0
    ... [node.2]
    ... initial = 0
    ... ''')
    >>> scenario.cfg.n, scenario.cfg.q, [op.kind.value for op in scenario.workload]
    (3, 2, ['write', 'read'])
    >>> parse_scenario("name = x\\ncolour = red\\n")
    Traceback (most recent call last):
    ...
    aft_sim.domain.errors.ParseError: line 2, column 1: unknown key 'colour'
    """

    try:
        document = _read_document(text)
        scenario = _build(document, fallback_seed)
    except ParseError as exc:
        log_error("scenario_parse_failed", source=source, line=exc.line, column=exc.column, error=exc.reason)
        raise
    except ValidationError as exc:
        log_error("scenario_invalid", source=source, problems=list(exc.problems))
        raise
    log_debug("scenario_parsed", source=source, scenario=scenario.name, n=scenario.cfg.n, requests=len(scenario.workload))
    return scenario


def emit_scenario(scenario: Scenario) -> str:
    """Return the canonical text of *scenario*; ``parse_scenario`` reads it back unchanged."""

    lines = [
        f"name = {scenario.name}",
        f"seed = {scenario.seed}",
        f"mode = {scenario.mode.value}",
        f"policy = {_format_policy(scenario.policy)}",
        f"epsilon = {format_value(float(scenario.protocol_epsilon))}",
        f"alpha = {format_value(float(scenario.protocol_alpha))}",
        f"fault_model = {scenario.cfg.fault_model.value}",
        f"n = {scenario.cfg.n}",
        f"f = {scenario.cfg.f}",
        f"q = {scenario.cfg.q}",
        f"space = {scenario.space.value}",
        f"net.base_delay = {scenario.net.base_delay}",
        f"net.jitter = {scenario.net.jitter}",
        f"net.drop_prob = {format_value(float(scenario.net.drop_prob))}",
    ]
    if scenario.net.timeout is not None:
        lines.append(f"net.timeout = {scenario.net.timeout}")
    lines.append(f"workload = {_format_workload(scenario.workload)}")
    for node in sorted(scenario.nodes, key=lambda spec: spec.node_id):
        lines.append("")
        lines.extend(_format_node(node))
    return "\n".join(lines) + "\n"


def parse_value(text: str, *, line: int = 1, column: int = 1) -> Value:
    """Parse one value token.

    Examples
    --------
    >>> parse_value("3"), parse_value("2.5"), parse_value("1e-3"), parse_value("true")
    (3, 2.5, 0.001, True)
    >>> parse_value("(1.0, 2)"), parse_value("green")
    ((1.0, 2.0), Symbol(name='green'))
    """

    entry = _Entry(text.strip(), line, column)
    return _value(entry)


def format_value(value: Value) -> str:
    """Render *value* so that :func:`parse_value` returns it unchanged.

    Examples
    --------
    >>> format_value(3), format_value(0.1), format_value(False), format_value((1.0, 2.5))
    ('3', '0.1', 'false', '(1.0, 2.5)')
    """

    kind = kind_of(value)
    if kind is ValueKind.BOOLEAN:
        return "true" if value else "false"
    if kind is ValueKind.VECTOR:
        return "(" + ", ".join(repr(float(x)) for x in value) + ")"  # type: ignore[union-attr]
    if kind is ValueKind.SYMBOL:
        return str(value)
    return repr(value)


def parse_transform(text: str, *, line: int = 1, column: int = 1) -> TransformSpec:
    """Parse a transform spec such as ``affine(5/9, -160/9)`` or ``bounded_noise(0.4, 7)``.

    Examples
    --------
    >>> parse_transform("affine(5/9, -160/9)").offset
    Fraction(-160, 9)
    >>> parse_transform("stochastic_predictor(0.5, 0.9)").hit_prob
    0.9
    >>> parse_transform("rotate(90)")
    Traceback (most recent call last):
    ...
    aft_sim.domain.errors.ParseError: line 1, column 1: unknown transform 'rotate'
    """

    return _transform(_Entry(text.strip(), line, column))


def format_transform(spec: TransformSpec) -> str:
    """Render *spec* in the syntax accepted by :func:`parse_transform`.

    >>> format_transform(TransformSpec.affine(Fraction(5, 9), Fraction(-160, 9)))
    'affine(5/9, -160/9)'
    """

    if spec.kind is TransformKind.AFFINE:
        return f"affine({spec.scale}, {spec.offset})"
    if spec.kind is TransformKind.BOUNDED_NOISE:
        return f"bounded_noise({spec.delta!r}, {spec.seed})"
    if spec.kind is TransformKind.STOCHASTIC_PREDICTOR:
        return f"stochastic_predictor({spec.error_scale!r}, {spec.hit_prob!r}, {spec.seed})"
    return spec.kind.value


# ---------------------------------------------------------------------------
# Document structure
# ---------------------------------------------------------------------------


def _read_document(text: str) -> _Document:
    document = _Document()
    section: dict[str, _Entry] = document.top
    node_id: int | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        stripped = body.strip()
        if not stripped:
            continue
        indent = len(body) - len(body.lstrip())
        if stripped.startswith("["):
            node_id = _section_id(stripped, line_no, indent + 1)
            if node_id in document.nodes:
                raise ParseError(f"duplicate section [node.{node_id}]", line=line_no, column=indent + 1)
            section = document.nodes[node_id] = {}
            continue
        key_part, sep, value_part = body.partition("=")
        if not sep:
            raise ParseError("expected 'key = value' or a [node.<id>] header", line=line_no, column=indent + 1)
        key = key_part.strip()
        if not _KEY.fullmatch(key):
            raise ParseError(f"malformed key {key!r}", line=line_no, column=indent + 1)
        allowed = TOP_LEVEL_KEYS if node_id is None else NODE_KEYS
        if key not in allowed:
            where = "" if node_id is None else f" in [node.{node_id}]"
            raise ParseError(f"unknown key {key!r}{where}", line=line_no, column=indent + 1)
        if key in section:
            raise ParseError(f"duplicate key {key!r}", line=line_no, column=indent + 1)
        value = value_part.strip()
        value_column = len(key_part) + 2 + (len(value_part) - len(value_part.lstrip()))
        if not value:
            raise ParseError(f"missing value for {key!r}", line=line_no, column=value_column)
        section[key] = _Entry(value, line_no, value_column)
    return document


def _section_id(header: str, line: int, column: int) -> int:
    match = _SECTION.fullmatch(header)
    if match is None:
        raise ParseError(f"malformed section header {header!r} (expected [node.<id>])", line=line, column=column)
    return int(match.group(1))


def _build(document: _Document, fallback_seed: int) -> Scenario:
    problems: list[str] = []
    top = document.top
    name = top["name"].text if "name" in top else ""
    if "name" not in top:
        problems.append("missing required key 'name'")
    fault_model = _optional(top, "fault_model", lambda e: _choice(e, FaultModel, "fault model"), FaultModel.CRASH_STOP)
    f = _optional(top, "f", _integer, None)
    if f is None:
        problems.append("missing required key 'f'")
        f = 0
    default_n, default_q = default_sizing(max(f, 0), fault_model)
    n = _optional(top, "n", _integer, default_n)
    q = _optional(top, "q", _integer, default_q)
    cfg_problems = quorum_problems(n, f, q)
    problems.extend(cfg_problems)
    space = _optional(top, "space", lambda e: _choice(e, MetricSpace, "metric space"), MetricSpace.ABSOLUTE_DIFFERENCE)
    net = NetModel(
        base_delay=_optional(top, "net.base_delay", _integer, 1),
        jitter=_optional(top, "net.jitter", _integer, 0),
        drop_prob=_optional(top, "net.drop_prob", _real, 0.0),
        timeout=_optional(top, "net.timeout", _integer, None),
    )
    nodes = tuple(
        node
        for node_id in sorted(document.nodes)
        if (node := _node(node_id, document.nodes[node_id], problems)) is not None
    )
    if cfg_problems:
        raise ValidationError(problems)
    scenario = Scenario(
        name=name,
        seed=_optional(top, "seed", _integer, fallback_seed),
        cfg=QuorumConfig(n=n, f=f, q=q, fault_model=fault_model),
        nodes=nodes,
        workload=_optional(top, "workload", _workload, ()),
        net=net,
        mode=_optional(top, "mode", lambda e: _choice(e, RunMode, "mode"), RunMode.VECTOR),
        policy=_optional(top, "policy", _policy, Policy(PolicyKind.MEDIAN)),
        protocol_epsilon=_optional(top, "epsilon", _real, 0.0),
        protocol_alpha=_optional(top, "alpha", _real, 1.0),
        space=space,
    )
    if len(nodes) == len(document.nodes):
        problems.extend(scenario_problems(scenario))
    if problems:
        raise ValidationError(problems)
    return scenario


def _node(node_id: int, entries: dict[str, _Entry], problems: list[str]) -> NodeSpec | None:
    kind = _optional(entries, "kind", lambda e: _keyword(e, ("replica", "artira"), "node kind"), "replica")
    if "initial" not in entries:
        problems.append(f"node {node_id}: missing required key 'initial'")
        return None
    initial = _value(entries["initial"])
    roles = _optional(entries, "roles", _roles, ALL_ROLES)
    faults = _optional(entries, "faults", _faults, ())
    if kind == "replica":
        stray = sorted(_ARTIRA_ONLY & entries.keys())
        if stray:
            problems.append(f"node {node_id}: {', '.join(stray)} only apply to artira nodes")
            return None
        return NodeSpec(node_id, initial, roles, None, faults)
    if "transform" not in entries:
        problems.append(f"node {node_id}: artira nodes need a transform")
        return None
    try:
        artira = _artira(entries)
    except ValidationError as exc:
        problems.extend(f"node {node_id}: {problem}" for problem in exc.problems)
        return None
    return NodeSpec(node_id, initial, roles, artira, faults)


def _artira(entries: dict[str, _Entry]) -> ArtiraProfile:
    transform = _transform(entries["transform"])
    inverse = _optional(entries, "inverse", lambda e: _inverse(e, transform), transform.default_inverse())
    model = _optional(
        entries,
        "model",
        lambda e: _choice(e, ReplicationModel, "replication model", upper=True),
        default_model(correlation_class(transform)),
    )
    triple = ArtiraTriple(
        transform=transform,
        inverse=inverse,
        alpha=_optional(entries, "alpha", _real, 1.0),
        epsilon=_optional(entries, "epsilon", _real, 0.0),
        model=model,
    )
    return ArtiraProfile(
        triple=triple,
        inverse_epsilon=_optional(entries, "inverse_epsilon", _real, 0.0),
        inverse_alpha=_optional(entries, "inverse_alpha", _real, 1.0),
    )


# ---------------------------------------------------------------------------
# Token parsers
# ---------------------------------------------------------------------------


def _optional(entries: dict[str, _Entry], key: str, parse: Callable[[_Entry], E], default: E) -> E:
    entry = entries.get(key)
    return default if entry is None else parse(entry)


def _integer(entry: _Entry) -> int:
    if not _INTEGER.fullmatch(entry.text):
        raise entry.fail(f"expected an integer, got {entry.text!r}")
    return int(entry.text)


def _real(entry: _Entry) -> float:
    if not _REAL.fullmatch(entry.text):
        raise entry.fail(f"expected a number, got {entry.text!r}")
    return float(entry.text)


def _rational(entry: _Entry) -> Fraction:
    try:
        return Fraction(entry.text)
    except (ValueError, ZeroDivisionError):
        raise entry.fail(f"expected a rational such as 5/9 or 0.5, got {entry.text!r}") from None


def _keyword(entry: _Entry, allowed: tuple[str, ...], label: str) -> str:
    word = entry.text.lower()
    if word not in allowed:
        raise entry.fail(f"unknown {label} {entry.text!r} (expected one of: {', '.join(allowed)})")
    return word


def _choice(entry: _Entry, enum_cls: type[E], label: str, *, upper: bool = False) -> E:
    members = [member.value for member in enum_cls]  # type: ignore[attr-defined]
    word = entry.text.upper() if upper else entry.text.lower()
    if word not in members:
        raise entry.fail(f"unknown {label} {entry.text!r} (expected one of: {', '.join(members)})")
    return enum_cls(word)  # type: ignore[call-arg]


def _value(entry: _Entry) -> Value:
    text = entry.text
    lowered = text.lower()
    if lowered in ("true", "false"):
        return lowered == "true"
    if text.startswith("(") or text.endswith(")"):
        if not (text.startswith("(") and text.endswith(")")):
            raise entry.fail(f"unbalanced vector {text!r}")
        parts = list(_split_top(_Entry(text[1:-1], entry.line, entry.column + 1)))
        if not parts:
            raise entry.fail("vectors need at least one component")
        return tuple(_real(part) for part in parts)
    if _INTEGER.fullmatch(text):
        return int(text)
    if _REAL.fullmatch(text):
        return float(text)
    if not text or any(ch in _SYMBOL_FORBIDDEN for ch in text):
        raise entry.fail(f"malformed value {text!r}")
    return Symbol(text)


def _split_top(entry: _Entry) -> Iterator[_Entry]:
    """Yield the comma-separated items of *entry* that sit outside parentheses."""

    depth = 0
    start = 0
    text = entry.text
    for index, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise entry.fail("unbalanced ')'", index)
        elif char == "," and depth == 0:
            yield _trimmed(entry, start, index)
            start = index + 1
    if depth != 0:
        raise entry.fail("unbalanced '('", len(text) - 1)
    if text[start:].strip() or start > 0:
        yield _trimmed(entry, start, len(text))


def _trimmed(entry: _Entry, start: int, stop: int) -> _Entry:
    raw = entry.text[start:stop]
    lead = len(raw) - len(raw.lstrip())
    item = _Entry(raw.strip(), entry.line, entry.column + start + lead)
    if not item.text:
        raise entry.fail("empty list item", start)
    return item


def _call(entry: _Entry) -> tuple[str, list[_Entry]]:
    match = _CALL.fullmatch(entry.text)
    if match is None:
        raise entry.fail(f"malformed expression {entry.text!r}")
    name, inner = match.group(1), match.group(2)
    if inner is None:
        return name, []
    offset = match.start(2)
    return name, list(_split_top(_Entry(inner, entry.line, entry.column + offset)))


def _arity(entry: _Entry, name: str, args: list[_Entry], low: int, high: int) -> None:
    if not low <= len(args) <= high:
        expected = str(low) if low == high else f"{low} to {high}"
        raise entry.fail(f"{name} takes {expected} argument(s), got {len(args)}")


def _transform(entry: _Entry) -> TransformSpec:
    name, args = _call(entry)
    if name in ("identity", "negate", "reciprocal"):
        _arity(entry, name, args, 0, 0)
        return TransformSpec(TransformKind(name))
    if name == "affine":
        _arity(entry, name, args, 1, 2)
        offset = _rational(args[1]) if len(args) == 2 else Fraction(0)
        return TransformSpec.affine(_rational(args[0]), offset)
    if name == "bounded_noise":
        _arity(entry, name, args, 1, 2)
        seed = _integer(args[1]) if len(args) == 2 else 0
        return TransformSpec.bounded_noise(_real(args[0]), seed=seed)
    if name == "stochastic_predictor":
        _arity(entry, name, args, 2, 3)
        seed = _integer(args[2]) if len(args) == 3 else 0
        return TransformSpec.stochastic_predictor(_real(args[0]), _real(args[1]), seed=seed)
    raise entry.fail(f"unknown transform {name!r}")


def _inverse(entry: _Entry, transform: TransformSpec) -> TransformSpec | None:
    word = entry.text.lower()
    if word == "auto":
        return transform.default_inverse()
    if word == "none":
        return None
    return _transform(entry)


def _policy(entry: _Entry) -> Policy:
    name, args = _call(entry)
    if name == PolicyKind.RANDOM.value:
        _arity(entry, name, args, 0, 1)
        return Policy.random(_integer(args[0]) if args else 0)
    try:
        kind = PolicyKind(name)
    except ValueError:
        expected = ", ".join(kind.value for kind in PolicyKind)
        raise entry.fail(f"unknown policy {name!r} (expected one of: {expected})") from None
    _arity(entry, name, args, 0, 0)
    return Policy(kind)


def _roles(entry: _Entry) -> frozenset[Role]:
    roles = frozenset(_choice(item, Role, "role") for item in _split_top(entry))
    if not roles:
        raise entry.fail("roles need at least one entry")
    return roles


def _faults(entry: _Entry) -> tuple[FaultEvent, ...]:
    events: list[FaultEvent] = []
    for item in _split_top(entry):
        match = _FAULT.fullmatch(item.text)
        if match is None:
            raise item.fail(f"malformed fault {item.text!r} (expected kind@tick)")
        kind = _choice(_Entry(match.group(1), item.line, item.column), FaultKind, "fault kind")
        strategy_text = match.group(3)
        strategy = None
        if kind is FaultKind.BYZANTINE_ON:
            if strategy_text is None:
                raise item.fail("byzantine_on needs a strategy, e.g. byzantine_on@0:arbitrary(1000)")
            strategy = _strategy(_Entry(strategy_text.strip(), item.line, item.column + match.start(3)))
        elif strategy_text is not None:
            raise item.fail(f"{kind.value} takes no strategy")
        events.append(FaultEvent(int(match.group(2)), kind, strategy))
    return tuple(events)


def _strategy(entry: _Entry) -> ByzantineStrategy:
    name, args = _call(entry)
    if name == ByzantineKind.ARBITRARY.value:
        _arity(entry, name, args, 0, 1)
        return ByzantineStrategy.arbitrary(_real(args[0])) if args else ByzantineStrategy.arbitrary()
    if name == ByzantineKind.MAX_SKEW.value:
        _arity(entry, name, args, 1, 1)
        return ByzantineStrategy.max_skew(_real(args[0]))
    if name == ByzantineKind.MUTE.value:
        _arity(entry, name, args, 0, 0)
        return ByzantineStrategy.mute()
    raise entry.fail(f"unknown byzantine strategy {name!r}")


def _workload(entry: _Entry) -> tuple[WorkloadOp, ...]:
    ops: list[WorkloadOp] = []
    for item in _split_top(entry):
        repeat = _REPEAT_READ.fullmatch(item.text)
        if repeat is not None:
            ops.extend(WorkloadOp.read() for _ in range(int(repeat.group(1))))
            continue
        name, args = _call(item)
        if name == "read":
            _arity(item, name, args, 0, 0)
            ops.append(WorkloadOp.read())
        elif name == "write":
            _arity(item, name, args, 1, 1)
            ops.append(WorkloadOp.write(_value(args[0])))
        elif name in ("ramp", "ramp_read"):
            _arity(item, name, args, 3, 3)
            for value in _ramp(args[0], args[1], args[2]):
                ops.append(WorkloadOp.write(value))
                if name == "ramp_read":
                    ops.append(WorkloadOp.read())
        else:
            raise item.fail(f"unknown workload operation {name!r}")
    return tuple(ops)


def _ramp(start: _Entry, step: _Entry, count: _Entry) -> Iterator[Value]:
    """Yield ``start + k·step`` for ``k < count``, exact until the final conversion."""

    total = _integer(count)
    if total < 0:
        raise count.fail("ramp count must be non-negative")
    integral = _INTEGER.fullmatch(start.text) is not None and _INTEGER.fullmatch(step.text) is not None
    origin, increment = _rational(start), _rational(step)
    for k in range(total):
        point = origin + k * increment
        yield int(point) if integral else float(point)


# ---------------------------------------------------------------------------
# Emission helpers
# ---------------------------------------------------------------------------


def _format_policy(policy: Policy) -> str:
    if policy.kind is PolicyKind.RANDOM:
        return f"random({policy.seed})"
    return policy.kind.value


def _format_workload(workload: tuple[WorkloadOp, ...]) -> str:
    items: list[str] = []
    pending_reads = 0
    for op in workload:
        if op.kind is RequestKind.READ:
            pending_reads += 1
            continue
        items.extend(_format_reads(pending_reads))
        pending_reads = 0
        assert op.value is not None
        items.append(f"write({format_value(op.value)})")
    items.extend(_format_reads(pending_reads))
    return ", ".join(items) if items else "read*0"


def _format_reads(count: int) -> list[str]:
    if count == 0:
        return []
    return ["read"] if count == 1 else [f"read*{count}"]


def _format_node(node: NodeSpec) -> list[str]:
    lines = [
        f"[node.{node.node_id}]",
        f"kind = {'artira' if node.artira is not None else 'replica'}",
        f"initial = {format_value(node.initial)}",
        f"roles = {', '.join(role.value for role in _ROLE_ORDER if role in node.roles)}",
    ]
    if node.artira is not None:
        triple = node.artira.triple
        lines.extend(
            [
                f"transform = {format_transform(triple.transform)}",
                f"inverse = {_format_inverse(triple.transform, triple.inverse)}",
                f"model = {triple.model.value}",
                f"alpha = {format_value(float(triple.alpha))}",
                f"epsilon = {format_value(float(triple.epsilon))}",
                f"inverse_alpha = {format_value(float(node.artira.inverse_alpha))}",
                f"inverse_epsilon = {format_value(float(node.artira.inverse_epsilon))}",
            ]
        )
    if node.faults:
        lines.append(f"faults = {', '.join(_format_fault(event) for event in node.faults)}")
    return lines


def _format_inverse(transform: TransformSpec, inverse: TransformSpec | None) -> str:
    if inverse is None:
        return "none"
    if inverse == transform.default_inverse():
        return "auto"
    return format_transform(inverse)


def _format_fault(event: FaultEvent) -> str:
    text = f"{event.kind.value}@{event.at_time}"
    if event.strategy is None:
        return text
    strategy = event.strategy
    if strategy.kind is ByzantineKind.MUTE:
        return f"{text}:mute"
    return f"{text}:{strategy.kind.value}({strategy.magnitude!r})"
