"""Exact computation and cross-validation of GKP-type triangular arrays.

A GKP triangle satisfies

    T(n, k) = (a2*n + a1*k + a0) T(n-1, k) + (b2*n + b1*k + b0) T(n-1, k-1)

with T(0, 0) = 1 and T(n, k) = 0 outside 0 <= k <= n.  Every explicit
formula in this package is checked against the recurrence and against a
brute-force sum over weighted lattice paths.
"""

from gkp_triangles.core import (
    AffineWeight,
    DomainError,
    GkpSpec,
    Triangle,
    eval_weight,
    format_rational,
    parse_rational,
    row_sum,
    triangle_by_recurrence,
)

__all__ = [
    "AffineWeight",
    "DomainError",
    "GkpSpec",
    "Triangle",
    "eval_weight",
    "format_rational",
    "parse_rational",
    "row_sum",
    "triangle_by_recurrence",
]

__version__ = "0.1.0"
