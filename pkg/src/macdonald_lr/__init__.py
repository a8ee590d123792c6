"""Exact Macdonald Littlewood-Richardson coefficients in q and t."""

__version__ = "0.1.0"
