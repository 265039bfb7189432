"""Domain entities for ``aft_sim`` (value objects + errors).

Purpose
-------
Federate immutable value objects (values and metrics, artira certifications,
quorum data, scenarios) and the shared error hierarchy so outer layers can
depend on them without pulling in algorithms or adapters.
"""
