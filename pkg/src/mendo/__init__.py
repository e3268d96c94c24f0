"""Exact arithmetic for multiplicative endomorphisms of fields."""

__version__ = "0.1.0"
