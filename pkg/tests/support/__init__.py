"""Test support utilities for `aft_sim` suites.

This package hosts independent reference computations ("oracles") that the
suites compare the library against, plus small scenario builders that keep
test modules focused on behaviour instead of boilerplate.
"""

from __future__ import annotations

__all__ = [
    "brute_force_clique",
    "grid_scan_qualification",
    "make_scenario",
    "two_pass_pearson",
]

from .oracles import brute_force_clique, grid_scan_qualification, make_scenario, two_pass_pearson
