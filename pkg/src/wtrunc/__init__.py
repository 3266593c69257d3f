"""Truncation curves of even-spin W-algebra quotients, their intersections, and characters."""

__version__ = "0.1.0"
