"""Exact tools for checking Tihany cliques in claw-free graphs."""

__version__ = "0.1.0"
