"""Bundled example scenarios and the helpers that expose them.

Contents
    - :func:`bundled_scenario_names` / :func:`bundled_scenario_text`: read the
      shipped ``.scn`` files.
    - :func:`write_examples`: copy them into a directory.

Scenarios
    ``par_exact`` (exact copies), ``par_celsius`` (positive perfect
    correlation), ``par_negate`` (negative perfect correlation),
    ``sar_medical`` (bounded noise), ``war_recommender`` (unbounded error,
    detection only) and ``byz_maxskew`` (a Byzantine node lying within ε).
"""

from __future__ import annotations

from .bundled import bundled_scenario_names, bundled_scenario_text
from .generate import ExampleSpec, write_examples

__all__ = (
    "bundled_scenario_names",
    "bundled_scenario_text",
    "ExampleSpec",
    "write_examples",
)
