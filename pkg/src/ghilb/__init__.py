"""Exact computations on generalized punctual Hilbert schemes of classical Lie algebras."""

__version__ = "0.1.0"
