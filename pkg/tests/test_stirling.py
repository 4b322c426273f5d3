from itertools import permutations

import pytest

from gkp_triangles.core import DomainError, row_sum
from gkp_triangles.stirling import (
    StirlingPerm,
    b_explicit,
    b_triangle,
    b_triangle_via_G,
    descent_count,
    descent_histogram,
    enumerate_stirling_perms,
    is_stirling,
    marked_explicit,
    marked_residual,
    marked_triangle,
    stirling_count,
)
from oracles import eulerian_by_permutations, stirling_words_by_filter


def row(B, n):
    return tuple(B[n, k] for k in range(n))


def test_b_triangle_rows():
    assert row(b_triangle(1, 4), 4) == (1, 11, 11, 1)
    assert row(b_triangle(2, 3), 3) == (1, 8, 6)
    assert row_sum(b_triangle(2, 4).triangle, 4) == 105


def test_b_triangle_boundary():
    B = b_triangle(3, 6)
    assert all(B[n, 0] == 1 for n in range(7))
    assert all(B[n, n] == 0 for n in range(1, 7))


def test_eulerian_matches_permutation_oracle():
    B = b_triangle(1, 7)
    for n in range(1, 8):
        counts = eulerian_by_permutations(n)
        assert row(B, n) == tuple(counts.get(k, 0) for k in range(n))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_b_via_G(r):
    assert b_triangle(r, 10).triangle == b_triangle_via_G(r, 10).triangle
    assert b_triangle_via_G(r, 1)[1, 0] == 1


def test_b_via_G_value():
    assert b_triangle_via_G(2, 3)[3, 1] == 8


def test_b_explicit_examples():
    assert b_explicit(1, 4, 1) == 11
    assert b_explicit(2, 3, 1) == 8
    with pytest.raises(DomainError):
        b_explicit(2, 3, 3)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_b_explicit_full_triangle(r):
    B = b_triangle(r, 6)
    for n in range(1, 7):
        for k in range(n):
            assert b_explicit(r, n, k) == B[n, k]


def test_stirling_perms_small():
    assert {str(p) for p in enumerate_stirling_perms(2, 2)} == {"1122", "1221", "2211"}
    assert sorted(p.word for p in enumerate_stirling_perms(1, 3)) == sorted(permutations((1, 2, 3)))
    assert sum(1 for _ in enumerate_stirling_perms(2, 3)) == 15


@pytest.mark.parametrize("m, n", [(1, 4), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)])
def test_gap_insertion_matches_filter_oracle(m, n):
    words = [p.word for p in enumerate_stirling_perms(m, n)]
    assert len(words) == len(set(words)) == stirling_count(m, n)
    assert set(words) == stirling_words_by_filter(m, n)
    assert all(is_stirling(w, m) for w in words)


def test_other_convention_is_complement():
    words = {p.word for p in enumerate_stirling_perms(2, 3, convention="smaller")}
    assert (2, 1, 1, 2, 3, 3) in words
    assert all(is_stirling(w, 2, "smaller") for w in words)
    assert not is_stirling((1, 2, 2, 1), 2, "smaller")
    assert not is_stirling((2, 1, 1, 2), 2, "larger")


def test_is_stirling_rejects_wrong_multiset():
    assert not is_stirling((1, 1, 2), 2)
    assert not is_stirling((1, 1, 3, 3), 2)


def test_descent_count():
    assert descent_count(StirlingPerm((1, 2, 2, 1), 2)) == 1
    assert descent_count(StirlingPerm((1, 1, 2, 2), 2)) == 0
    assert descent_count(StirlingPerm((1, 1, 2, 2), 2), include_final=True) == 1
    assert descent_count(StirlingPerm((1, 2, 3), 1)) == 0
    assert descent_count(StirlingPerm((1, 2, 3), 1), include_final=True) == 1


def test_descent_histograms():
    assert descent_histogram(1, 4) == {0: 1, 1: 11, 2: 11, 3: 1}
    assert descent_histogram(2, 3) == {0: 1, 1: 8, 2: 6}
    assert descent_histogram(2, 1) == {0: 1}
    assert descent_histogram(2, 1, include_final=True) == {1: 1}


@pytest.mark.parametrize("m, top", [(1, 6), (2, 4), (3, 3)])
def test_histogram_equals_b_triangle(m, top):
    B = b_triangle(m, top)
    for n in range(1, top + 1):
        internal = descent_histogram(m, n)
        final = descent_histogram(m, n, include_final=True)
        other = descent_histogram(m, n, convention="smaller")
        assert row(B, n) == tuple(internal.get(k, 0) for k in range(n))
        assert final == {k + 1: v for k, v in internal.items()}
        assert other == internal


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_row_sums_count_stirling_perms(r):
    B = b_triangle(r, 8)
    for n in range(9):
        assert row_sum(B.triangle, n) == stirling_count(r, n)


def test_marked_values():
    M = marked_triangle(2, 8)
    assert M[3, 1] == 32
    B = b_triangle(2, 8)
    assert all(M[n, n - 1] == 2 * B[n, n - 1] for n in range(1, 9))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_marked_recurrence_residual(r):
    M = marked_triangle(r, 8)
    for n in range(2, 9):
        for k in range(1, n):
            assert marked_residual(M, r, n, k) == 0


@pytest.mark.parametrize("r", [1, 2, 3])
def test_marked_explicit(r):
    M = marked_triangle(r, 6)
    for n in range(1, 7):
        for k in range(n + 1):
            assert marked_explicit(r, n, k) == M[n, k]
    assert marked_explicit(2, 3, 1) == 32


def test_marked_explicit_r1_is_unmarked():
    B = b_triangle(1, 6)
    assert all(marked_explicit(1, n, k) == B[n, k] for n in range(1, 7) for k in range(n + 1))


def test_domain_errors():
    with pytest.raises(DomainError):
        b_triangle(0, 3)
    with pytest.raises(DomainError):
        list(enumerate_stirling_perms(0, 2))
    with pytest.raises(DomainError):
        marked_explicit(2, 0, 0)
