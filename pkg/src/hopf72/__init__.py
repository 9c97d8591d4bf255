"""Exact construction and certification of the 72-dimensional Hopf algebras A_[a]."""

__version__ = "0.1.0"
