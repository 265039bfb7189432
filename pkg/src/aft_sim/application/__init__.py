"""Application layer: algorithms and the deterministic simulator.

Purpose
-------
Pure coordination code over the domain value objects: redundancy analysis,
adapters, consensus predicates, the discrete-event simulator, and sweeps.

Contents
--------
* :mod:`aft_sim.application.ports`
* :mod:`aft_sim.application.streams`
* :mod:`aft_sim.application.transforms` / :mod:`aft_sim.application.artira`
* :mod:`aft_sim.application.redundancy`
* :mod:`aft_sim.application.consensus` / :mod:`aft_sim.application.protocol`
* :mod:`aft_sim.application.simnet`
* :mod:`aft_sim.application.sweep` / :mod:`aft_sim.application.settings`
"""
