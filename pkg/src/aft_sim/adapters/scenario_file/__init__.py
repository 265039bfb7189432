"""Scenario text format: strict parser and canonical emitter."""

__all__ = ["default"]
