"""Environment variable adapters for ``aft_sim``."""

__all__ = ["default"]
