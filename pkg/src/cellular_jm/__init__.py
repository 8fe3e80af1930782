"""Exact verification of centers of cellular algebras with Jucys-Murphy elements."""

__version__ = "0.1.0"
