"""Exact calculator for the second- and third-order isotopy invariants
of arcs and circles in S^1 x B^n: Laurent-quotient target groups, the
hexagon quotient, the G/E/D class algebra with its F_k factorization,
twisted classes, and rank certificates for their independence.
"""

__version__ = "0.1.0"
