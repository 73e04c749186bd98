"""Monomial ideal kit: exact monomial-ideal arithmetic and property checks."""

__version__ = "0.1.0"
