from fractions import Fraction
from itertools import product

import pytest

from gkp_triangles.core import AffineWeight, GkpSpec, triangle_by_recurrence
from gkp_triangles.poly import (
    GenFactorialPoly,
    change_basis,
    rising_basis_poly,
    shifted_falling_basis_poly,
    verify_transition,
)

P = GenFactorialPoly


def test_poly_arithmetic():
    x = P((0, 1))
    assert (x * x - x).coeffs == (0, -1, 1)
    assert (x - x).coeffs == ()
    assert P((1, 2, 0, 0)).degree == 1
    assert (P((1, 1)) * P((1, 1)))(3) == 16
    assert str(P((2, -3, 1))) == "x^2 - 3*x + 2"
    assert str(P()) == "0"


def test_rising_basis():
    assert rising_basis_poly(0, 3).coeffs == (0, 0, 0, 1)
    assert rising_basis_poly(1, 2).coeffs == (0, 1, 1)
    assert rising_basis_poly(1, 3).coeffs == (0, 2, 3, 1)
    assert rising_basis_poly(5, 0).coeffs == (1,)


def test_shifted_falling_basis():
    assert shifted_falling_basis_poly(0, 1, 2).coeffs == (0, -1, 1)
    assert shifted_falling_basis_poly(1, 0, 1).coeffs == (-1, 1)
    assert shifted_falling_basis_poly(7, 3, 0).coeffs == (1,)


def _pointwise_identity(a, n, points):
    """Evaluate both sides by plain products at each point; no polynomial class."""
    F = triangle_by_recurrence(GkpSpec(a), n)
    for x in points:
        lhs = Fraction(1)
        for i in range(n):
            lhs *= x + i * a.c2
        rhs = Fraction(0)
        for k in range(n + 1):
            term = F[n, k]
            for i in range(k):
                term *= x - a.c0 - a.c2 - i * a.c1
            rhs += term
        if lhs != rhs:
            return False
    return True


def test_stirling_instance():
    a = AffineWeight(0, 1, 0)
    assert all(c.passed for c in verify_transition(a, 3))
    x = P((0, 1))
    expansion = x + (x * (x - P((1,)))).scale(3) + shifted_falling_basis_poly(0, 1, 3)
    assert expansion == rising_basis_poly(0, 3)


def test_hand_identity_degree_one():
    assert all(c.passed for c in verify_transition(AffineWeight(0, 0, 1), 1))


@pytest.mark.parametrize("coeffs", list(product(range(-2, 3), repeat=3)))
def test_transition_grid_with_pointwise_oracle(coeffs):
    a = AffineWeight.of(coeffs)
    checks = verify_transition(a, 8)
    assert [c.n for c in checks] == list(range(9))
    assert all(c.passed for c in checks)
    pts = [Fraction(p, 3) for p in range(-12, 13)]
    assert all(_pointwise_identity(a, n, pts) for n in range(9))


def test_transition_reports_first_difference():
    # wrong shift: swap roles to provoke a mismatch and make sure it is reported
    import gkp_triangles.poly as poly_mod
    orig = poly_mod.shifted_falling_basis_poly
    try:
        poly_mod.shifted_falling_basis_poly = lambda shift, step, k: orig(shift + 1, step, k)
        checks = verify_transition(AffineWeight(0, 1, 0), 3)
    finally:
        poly_mod.shifted_falling_basis_poly = orig
    assert checks[0].passed
    bad = [c for c in checks if not c.passed]
    assert bad and bad[0].first_diff is not None


@pytest.mark.parametrize("n_max", [0, 4, 8])
def test_bases_are_graded_unitriangular(n_max):
    for k in range(n_max + 1):
        r = rising_basis_poly(Fraction(-3, 2), k)
        f = shifted_falling_basis_poly(2, Fraction(1, 3), k)
        assert r.degree == f.degree == k
        assert r.coeff(k) == f.coeff(k) == 1


def test_change_basis():
    a = AffineWeight(0, 1, 0)
    assert change_basis([0, 0, 0, 1], a) == [0, 1, 3, 1]
    assert change_basis([0, 0, 0], a) == [0, 0, 0]
    assert change_basis([], a) == []
    a = AffineWeight(1, -2, 1)
    F = triangle_by_recurrence(GkpSpec(a), 5)
    for n in range(6):
        e = [0] * 6
        e[n] = 1
        assert change_basis(e, a) == [F[n, k] for k in range(6)]
    u, v = [1, 2, 0, -1, 3], [Fraction(1, 2), 0, 5, 1, -2]
    assert change_basis([p + q for p, q in zip(u, v)], a) == [
        p + q for p, q in zip(change_basis(u, a), change_basis(v, a))]


def test_change_basis_matches_polynomials():
    a = AffineWeight(2, -1, 1)
    v = [3, -1, Fraction(2, 5), 4]
    lhs = sum((rising_basis_poly(a.c2, n).scale(c) for n, c in enumerate(v)), P())
    w = change_basis(v, a)
    rhs = sum((shifted_falling_basis_poly(a.c0 + a.c2, a.c1, k).scale(c) for k, c in enumerate(w)), P())
    assert lhs == rhs
