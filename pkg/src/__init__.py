"""Maximal orders of B_p and their supersingular j-invariants."""

__version__ = "0.1.0"
