"""CSV adapters: paired-sample input and decision/sweep tables."""

__all__ = ["default"]
