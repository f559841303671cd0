"""Exact enumeration of the 52 combinatorial types of 4-dimensional
parallelotopes: 17 zonotopes of unimodular systems, the 24-cell, and 34
Minkowski sums of the 24-cell with zonotopes of D4 roots.

All arithmetic is exact (integers and fractions); every classification
claim is re-derived and machine-checked rather than transcribed.
"""

__version__ = "1.0"
