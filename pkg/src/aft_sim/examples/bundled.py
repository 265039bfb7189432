"""Bundled example scenarios.

Purpose
    Ship one runnable scenario per redundancy class so users can try the
    simulator without writing a file first.

Contents
    - ``bundled_scenario_names``: names of the shipped ``.scn`` files.
    - ``bundled_scenario_text``: the text of one of them.

System Integration
    Files live in ``aft_sim/examples/scenarios`` and are read through
    :mod:`importlib.resources`, so they work from wheels and zip imports.
"""

from __future__ import annotations

from importlib import resources

from ..domain.errors import NotFound

__all__ = ["SCENARIO_SUFFIX", "bundled_scenario_names", "bundled_scenario_text"]

SCENARIO_SUFFIX = ".scn"


def bundled_scenario_names() -> list[str]:
    """Return the bundled scenario names in sorted order.

    Examples
    --------
    >>> names = bundled_scenario_names()
    >>> "par_exact" in names and "war_recommender" in names
    True
    """

    folder = resources.files(__package__).joinpath("scenarios")
    return sorted(
        entry.name[: -len(SCENARIO_SUFFIX)]
        for entry in folder.iterdir()
        if entry.name.endswith(SCENARIO_SUFFIX)
    )


def bundled_scenario_text(name: str) -> str:
    """Return the text of bundled scenario *name* (with or without ``.scn``).

    Raises ``NotFound`` for unknown names.

    Examples
    --------
    >>> bundled_scenario_text("par_exact").splitlines()[1]
    'name = par_exact'
    """

    stem = name[: -len(SCENARIO_SUFFIX)] if name.endswith(SCENARIO_SUFFIX) else name
    if stem not in bundled_scenario_names():
        available = ", ".join(bundled_scenario_names())
        raise NotFound(f"no bundled scenario named {name!r} (available: {available})")
    return resources.files(__package__).joinpath("scenarios").joinpath(f"{stem}{SCENARIO_SUFFIX}").read_text(encoding="utf-8")
