"""Exact verification of the quantum cohomology of IG(2, 2n)."""

__version__ = "0.1.0"
