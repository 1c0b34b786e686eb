"""Exact computer algebra for limit closures of parameter sequences."""

__version__ = "0.1.0"
