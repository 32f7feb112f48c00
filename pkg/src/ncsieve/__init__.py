"""Exact verification of cyclic sieving for non-crossing graph families."""

__version__ = "0.1.0"
