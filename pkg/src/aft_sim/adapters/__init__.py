"""Adapter implementations for ``aft_sim``.

Purpose
-------
Group concrete boundary code (scenario text format, CSV files, process
environment) that fulfils the application layer's ports.

System Role
-----------
Modules inside this package implement contracts defined in
:mod:`aft_sim.application.ports` and are wired together by the composition
root.
"""
