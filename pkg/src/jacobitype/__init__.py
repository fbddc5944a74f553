"""Exact construction, verification and classification of quasi-orthogonal
polynomial families of Jacobi and rational type."""

__version__ = "0.1.0"
