"""Exact biorthogonal polynomials over division rings (rationals and rational quaternions)."""

__version__ = "0.1.0"
