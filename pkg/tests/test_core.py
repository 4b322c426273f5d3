from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

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
from gkp_triangles.paths import total_weight_paths

from oracles import eulerian_by_permutations, stirling2_by_partitions

EULERIAN = GkpSpec.of((1, 1, 0), (0, -1, 1))


@pytest.mark.parametrize("c, n, k, expected", [
    ((1, 1, 0), 3, 2, 3),
    ((0, -1, 1), 5, 2, 3),
    ((Fraction(1, 2), 0, Fraction(1, 2)), 3, 0, 2),
])
def test_eval_weight(c, n, k, expected):
    assert eval_weight(AffineWeight.of(c), n, k) == expected


def test_affine_weight_rejects_float():
    with pytest.raises(TypeError):
        AffineWeight(0.5, 0, 0)


@pytest.mark.parametrize("text, value", [("3", 3), ("-7/2", Fraction(-7, 2)), ("4/2", 2)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", " 1", "1/0", "1.5", "a/b", "1/ 2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(st.fractions())
def test_rational_wire_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_pascal_row():
    t = triangle_by_recurrence(GkpSpec.of((1, 0, 0), (1, 0, 0)), 4)
    assert t.rows[4] == (1, 4, 6, 4, 1)


def test_stirling2_entry_matches_partition_oracle():
    t = triangle_by_recurrence(GkpSpec.of((0, 1, 0)), 6)
    for n in range(7):
        counts = stirling2_by_partitions(n)
        assert [t[n, k] for k in range(n + 1)] == [counts.get(k, 0) for k in range(n + 1)]
    assert t[4, 2] == 7


def test_nmax_zero():
    assert triangle_by_recurrence(EULERIAN, 0).rows == ((1,),)


def test_negative_nmax():
    with pytest.raises(DomainError):
        triangle_by_recurrence(EULERIAN, -1)


def test_row_sums():
    assert row_sum(triangle_by_recurrence(GkpSpec.of((1, 0, 0)), 5), 5) == 32
    t = triangle_by_recurrence(EULERIAN, 4)
    assert row_sum(t, 4) == sum(eulerian_by_permutations(4).values()) == 24
    assert row_sum(t, 0) == 1
    with pytest.raises(IndexError):
        row_sum(t, 5)


def test_triangle_out_of_range_is_zero():
    t = triangle_by_recurrence(EULERIAN, 3)
    assert t[3, -1] == 0 and t[3, 4] == 0


def test_triangle_shape_validation():
    with pytest.raises(ValueError):
        Triangle(((1,), (1,)))


small = st.integers(-3, 3)
specs = st.builds(lambda a, b: GkpSpec.of(a, b), st.tuples(small, small, small), st.tuples(small, small, small))


@given(specs)
def test_recurrence_equals_path_oracle(spec):
    t = triangle_by_recurrence(spec, 6)
    for n, k, v in t.entries():
        assert v == total_weight_paths(n, k, spec)


@given(specs)
def test_edge_products(spec):
    t = triangle_by_recurrence(spec, 6)
    left = right = Fraction(1)
    for n in range(1, 7):
        left *= spec.a(n, 0)
        right *= spec.b(n, n)
        assert t[n, 0] == left
        assert t[n, n] == right


def test_all_ones_is_binomial():
    t = triangle_by_recurrence(GkpSpec.of((1, 0, 0), (1, 0, 0)), 10)
    assert all(v == comb(n, k) for n, k, v in t.entries())
