"""Exact computations with left-Alia algebras, their representations and bialgebras."""

__version__ = "0.1.0"
