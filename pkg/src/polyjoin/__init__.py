"""Exact graph polynomials of cographs via duality operators."""

__version__ = "0.1.0"
