"""Layered run settings with provenance.

Purpose
-------
Combine the sources that may set a run's seed and worker count into one
validated :class:`RunSettings`, remembering which layer supplied each key.

Contents
    - ``DEFAULT_SETTINGS``: the lowest layer.
    - ``RunSettings``: resolved values plus per-key provenance.
    - ``merge_layers``: precedence-ordered merge over flat mappings.
    - ``resolve_settings``: merge, then validate.

System Role
-----------
:mod:`aft_sim.core` feeds the layers ``default → env → flag`` (lowest to
highest). The scenario file sits between ``env`` and ``flag`` for the seed.
``RunSettings.seed_for`` applies that rule once the file has been read.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from ..domain.errors import ValidationError

__all__ = ["DEFAULT_SETTINGS", "RunSettings", "merge_layers", "resolve_settings"]

DEFAULT_SETTINGS: Mapping[str, object] = {"seed": 0, "workers": 1}

_KNOWN_KEYS = frozenset(DEFAULT_SETTINGS)


@dataclass(frozen=True, slots=True)
class RunSettings:
    """Resolved settings; ``sources`` maps each key to the layer that set it."""

    seed: int = 0
    workers: int = 1
    sources: Mapping[str, str] = field(default_factory=dict)

    def seed_for(self, file_seed: int | None) -> int:
        """Return the effective seed given the scenario file's own ``seed``.

        Examples
        --------
        >>> RunSettings(seed=9, sources={"seed": "flag"}).seed_for(4)
        9
        >>> RunSettings(seed=7, sources={"seed": "env"}).seed_for(4)
        4
        >>> RunSettings(seed=7, sources={"seed": "env"}).seed_for(None)
        7
        """

        if self.sources.get("seed") == "flag" or file_seed is None:
            return self.seed
        return file_seed


def merge_layers(
    layers: Iterable[tuple[str, Mapping[str, object]]],
) -> tuple[dict[str, object], dict[str, str]]:
    """Merge flat *layers* ordered lowest to highest precedence.

    ``None`` values leave the lower layer's value in place. Keys outside the
    known settings are ignored so foreign ``AFT_SIM_*`` variables stay
    harmless.

    Examples
    --------
    >>> merged, sources = merge_layers([
    ...     ("default", {"seed": 0, "workers": 1}),
    ...     ("env", {"seed": 5, "editor": "vim"}),
    ...     ("flag", {"seed": None, "workers": 4}),
    ... ])
    >>> merged, sources
    ({'seed': 5, 'workers': 4}, {'seed': 'env', 'workers': 'flag'})
    """

    merged: dict[str, object] = {}
    sources: dict[str, str] = {}
    for layer_name, payload in layers:
        for key, value in payload.items():
            if key not in _KNOWN_KEYS or value is None:
                continue
            merged[key] = value
            sources[key] = layer_name
    return merged, sources


def resolve_settings(layers: Iterable[tuple[str, Mapping[str, object]]]) -> RunSettings:
    """Merge *layers* on top of the defaults and validate the result.

    Raises ``ValidationError`` listing every bad value with the layer it came
    from.

    Examples
    --------
    >>> resolve_settings([("env", {"workers": 3})])
    RunSettings(seed=0, workers=3, sources={'seed': 'default', 'workers': 'env'})
    >>> resolve_settings([("env", {"seed": -1, "workers": "many"})])
    Traceback (most recent call last):
    ...
    aft_sim.domain.errors.ValidationError: seed from env must be a 64-bit unsigned integer, got -1; workers from env must be a positive integer, got 'many'
    """

    merged, sources = merge_layers([("default", DEFAULT_SETTINGS), *layers])
    problems: list[str] = []
    seed = merged["seed"]
    if not _is_int(seed) or not 0 <= seed < 2**64:  # type: ignore[operator]
        problems.append(f"seed from {sources['seed']} must be a 64-bit unsigned integer, got {seed!r}")
    workers = merged["workers"]
    if not _is_int(workers) or workers < 1:  # type: ignore[operator]
        problems.append(f"workers from {sources['workers']} must be a positive integer, got {workers!r}")
    if problems:
        raise ValidationError(problems)
    return RunSettings(seed=int(seed), workers=int(workers), sources=sources)  # type: ignore[arg-type]


def _is_int(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)
