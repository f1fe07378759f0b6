"""Exact computations of gradings on the Albert algebra and on f4."""

__version__ = "0.1.0"

__all__ = ["exactmath", "algcore", "octonion", "jordan", "f4lie", "weyl", "gradings", "cli"]
