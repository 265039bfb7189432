"""Environment variable adapter.

Purpose
-------
Read ``AFT_SIM_*`` variables into a flat mapping of coerced primitives that
the settings merge layers on top of the defaults.

Contents
    - ``ENV_PREFIX``: the namespace every variable shares.
    - ``DefaultEnvLoader``: filtering, key normalisation and coercion.
    - ``_coerce`` plus tiny predicates translating strings into primitives.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Mapping

from ...observability import log_debug

__all__ = ["ENV_PREFIX", "DefaultEnvLoader"]

ENV_PREFIX = "AFT_SIM"


class DefaultEnvLoader:
    """Load environment variables that belong to the ``AFT_SIM`` namespace."""

    def __init__(self, *, environ: Mapping[str, str] | None = None) -> None:
        """Read from *environ*, or :data:`os.environ` when omitted."""

        self._environ = os.environ if environ is None else environ

    def load(self, prefix: str = ENV_PREFIX) -> dict[str, object]:
        """Return variables under *prefix* with lowercase keys and coerced values.

        Side Effects
        ------------
        Emits an ``env_variables_loaded`` debug event listing the keys found.

        Examples
        --------
        >>> loader = DefaultEnvLoader(environ={'AFT_SIM_SEED': '42', 'AFT_SIM_WORKERS': '4', 'HOME': '/root'})
        >>> loader.load('AFT_SIM')
        {'seed': 42, 'workers': 4}
        """

        normalized_prefix = _normalize_prefix(prefix)
        collected = {key.lower(): _coerce(value) for key, value in _iter_namespace_entries(self._environ.items(), normalized_prefix)}
        log_debug("env_variables_loaded", layer="env", keys=sorted(collected))
        return dict(sorted(collected.items()))


def _normalize_prefix(prefix: str) -> str:
    """Ensure the prefix ends with an underscore when non-empty.

    >>> _normalize_prefix('AFT_SIM'), _normalize_prefix('AFT_SIM_'), _normalize_prefix('')
    ('AFT_SIM_', 'AFT_SIM_', '')
    """

    if prefix and not prefix.endswith("_"):
        return f"{prefix}_"
    return prefix


def _iter_namespace_entries(items: Iterable[tuple[str, str]], prefix: str) -> Iterator[tuple[str, str]]:
    """Yield ``(stripped_key, value)`` pairs that match *prefix*.

    >>> list(_iter_namespace_entries([('AFT_SIM_SEED', '1'), ('OTHER', '0'), ('AFT_SIM_', 'x')], 'AFT_SIM_'))
    [('SEED', '1')]
    """

    for key, value in items:
        if prefix and not key.startswith(prefix):
            continue
        stripped = key[len(prefix) :] if prefix else key
        if stripped:
            yield stripped, value


def _coerce(value: str) -> object:
    """Coerce textual values to Python primitives where possible.

    >>> _coerce('true'), _coerce('10'), _coerce('3.5'), _coerce('hello'), _coerce('null')
    (True, 10, 3.5, 'hello', None)
    """

    lowered = value.strip().lower()
    if lowered in {"true", "false"}:
        return lowered == "true"
    if lowered in {"null", "none", ""}:
        return None
    if _looks_like_int(lowered):
        return int(lowered)
    try:
        return float(lowered)
    except ValueError:
        return value


def _looks_like_int(value: str) -> bool:
    """Return ``True`` when *value* spells an integer.

    >>> _looks_like_int('42'), _looks_like_int('-7'), _looks_like_int('3.14')
    (True, True, False)
    """

    digits = value[1:] if value.startswith(("-", "+")) else value
    return digits.isdigit()
