"""Dense exact polynomials and the rising/falling factorial transition matrix.

For b ≡ 1 the triangle F of the East weight a = a0 + a1 k + a2 n converts
the rising basis (x | a2)^{(n)} = x (x + a2) ... (x + (n-1) a2) into the
shifted falling basis prod_{i<k} (x - a0 - a2 - i a1):

    (x | a2)^{(n)} = sum_k F(n, k) prod_{i<k} (x - a0 - a2 - i a1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from gkp_triangles.core import GkpSpec, ONE, AffineWeight, as_rational, format_rational, triangle_by_recurrence


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class GenFactorialPoly:
    """Polynomial with ``coeffs[i]`` the coefficient of x^i; zero is ``()``."""

    coeffs: tuple[Fraction, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def constant(cls, c) -> "GenFactorialPoly":
        return cls((as_rational(c),))

    @classmethod
    def linear(cls, root) -> "GenFactorialPoly":
        """x - root."""
        return cls((-as_rational(root), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "GenFactorialPoly") -> "GenFactorialPoly":
        m = max(len(self.coeffs), len(other.coeffs))
        return GenFactorialPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(m)))

    def __sub__(self, other: "GenFactorialPoly") -> "GenFactorialPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "GenFactorialPoly") -> "GenFactorialPoly":
        if not self.coeffs or not other.coeffs:
            return GenFactorialPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, p in enumerate(self.coeffs):
            if p:
                for j, q in enumerate(other.coeffs):
                    out[i + j] += p * q
        return GenFactorialPoly(tuple(out))

    def scale(self, c) -> "GenFactorialPoly":
        c = as_rational(c)
        return GenFactorialPoly(tuple(c * v for v in self.coeffs))

    def __call__(self, x) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c in (1, -1):
                s = mono if c == 1 else f"-{mono}"
            else:
                s = format_rational(c) + (f"*{mono}" if mono else "")
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")


def _product_of_linears(roots) -> GenFactorialPoly:
    p = GenFactorialPoly.constant(1)
    for r in roots:
        p = p * GenFactorialPoly.linear(r)
    return p


def rising_basis_poly(step, n: int) -> GenFactorialPoly:
    """prod_{i=0}^{n-1} (x + i step)."""
    step = as_rational(step)
    return _product_of_linears(-i * step for i in range(n))


def shifted_falling_basis_poly(shift, step, k: int) -> GenFactorialPoly:
    """prod_{i=0}^{k-1} (x - shift - i step)."""
    shift, step = as_rational(shift), as_rational(step)
    return _product_of_linears(shift + i * step for i in range(k))


@dataclass
class TransitionCheck:
    n: int
    passed: bool
    # (degree, lhs coefficient, rhs coefficient) of the first mismatch
    first_diff: tuple[int, Fraction, Fraction] | None = None


def verify_transition(a: AffineWeight, n_max: int) -> list[TransitionCheck]:
    """Check the rising/falling identity for every n <= n_max by full expansion."""
    F = triangle_by_recurrence(GkpSpec(a, ONE), n_max)
    shift, step = a.c0 + a.c2, a.c1
    falling = [shifted_falling_basis_poly(shift, step, k) for k in range(n_max + 1)]
    out = []
    for n in range(n_max + 1):
        lhs = rising_basis_poly(a.c2, n)
        rhs = GenFactorialPoly()
        for k in range(n + 1):
            rhs = rhs + falling[k].scale(F[n, k])
        diff = None
        for d in range(max(len(lhs.coeffs), len(rhs.coeffs))):
            if lhs.coeff(d) != rhs.coeff(d):
                diff = (d, lhs.coeff(d), rhs.coeff(d))
                break
        out.append(TransitionCheck(n, diff is None, diff))
    return out


def change_basis(coeffs_in_rising: Sequence, a: AffineWeight) -> list[Fraction]:
    """Re-express sum_n v_n (x | a2)^{(n)} in the shifted falling basis."""
    v = [as_rational(c) for c in coeffs_in_rising]
    if not v:
        return []
    F = triangle_by_recurrence(GkpSpec(a, ONE), len(v) - 1)
    return [sum((v[n] * F[n, k] for n in range(k, len(v))), Fraction(0)) for k in range(len(v))]
