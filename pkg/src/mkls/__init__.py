"""Kazhdan-Lusztig-Stanley invariants of matroids: inverse Z-polynomials."""

__version__ = "0.1.0"
