"""Alternating-sum formulas for the cases b ≡ 1 and b = b0 + b1 k."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from gkp_triangles.core import AffineWeight, DomainError, GkpSpec, as_rational
from gkp_triangles.paths import check_nk


def rising_factorial(x, step, m: int) -> Fraction:
    """x (x + step) ... (x + (m-1) step); 1 when m = 0."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    x, step = as_rational(x), as_rational(step)
    out = Fraction(1)
    for i in range(m):
        out *= x + i * step
    return out


def alt_sum_b1(n: int, k: int, a: AffineWeight) -> Fraction:
    """F(n, k) for b ≡ 1 as

        1 / (a1^k k!) * sum_j (-1)^{k-j} C(k, j) prod_{r=1..n} (a0 + a1 j + r a2).

    Only a1 != 0 is required; the a2 = 0 case is covered by the verify suite.
    """
    check_nk(n, k)
    if a.c1 == 0:
        raise DomainError("alt_sum_b1 needs a1 != 0")
    total = Fraction(0)
    sign = (-1) ** k  # (-1)^{k-j}, starting at j = 0
    for j in range(k + 1):
        base = a.c0 + a.c1 * j
        prod = Fraction(1)
        for r in range(1, n + 1):
            prod *= base + r * a.c2
        total += sign * comb(k, j) * prod
        sign = -sign
    return total / (a.c1 ** k * factorial(k))


def alt_sum_bk(n: int, k: int, spec: GkpSpec) -> Fraction:
    """T(n, k) for b = b0 + b1 k: (b0 + b1 | b1)^{(k)} times the b ≡ 1 entry."""
    check_nk(n, k)
    if spec.b.c2 != 0:
        raise DomainError("alt_sum_bk needs b2 = 0")
    if spec.a.c1 == 0:
        raise DomainError("alt_sum_bk needs a1 != 0")
    b0, b1 = spec.b.c0, spec.b.c1
    return rising_factorial(b0 + b1, b1, k) * alt_sum_b1(n, k, spec.a)
