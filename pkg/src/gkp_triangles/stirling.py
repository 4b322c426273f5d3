"""r-Eulerian and marked r-Eulerian triangles, with permutation oracles.

B^{(r)}(n, k) counts r-Stirling permutations of {1^r, ..., n^r} with k
internal descents.  It obeys

    B(n, k) = (r n - k + 1 - r) B(n-1, k-1) + (k + 1) B(n-1, k),   B(n, 0) = 1,

and its shift G(n, k) = B(n+1, k) is the GKP triangle with a = k + 1 and
b = r n - k + 1.  The marked triangle is M(n, k) = r^{n-k} B(n, k).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal

from gkp_triangles.compositions import enumerate_weak_compositions
from gkp_triangles.core import DomainError, GkpSpec, Triangle, triangle_by_recurrence

# "larger": letters strictly between two copies of i exceed i (Gessel-Stanley).
# "smaller": letters between two copies of i are at most i (mirror rule).
# The two sets are exchanged by i -> n + 1 - i and share the descent histogram.
Convention = Literal["larger", "smaller"]


@dataclass(frozen=True)
class StirlingPerm:
    word: tuple[int, ...]
    m: int

    @property
    def n(self) -> int:
        return len(self.word) // self.m if self.m else 0

    def __str__(self) -> str:
        sep = "" if self.n < 10 else " "
        return sep.join(map(str, self.word))


@dataclass(frozen=True)
class EulerianTriangleB:
    r: int
    triangle: Triangle

    def __getitem__(self, nk: tuple[int, int]) -> Fraction:
        return self.triangle[nk]


def _check_r(r: int) -> None:
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")


def b_triangle(r: int, n_max: int) -> EulerianTriangleB:
    """B^{(r)} rows 0..n_max straight from its own recurrence (B(0, 0) = 1)."""
    _check_r(r)
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [Fraction(1)]
        for k in range(1, n):
            row.append((r * n - k + 1 - r) * prev[k - 1] + (k + 1) * prev[k])
        row.append(Fraction(0))  # B(n, n) = 0 for n >= 1
        rows.append(tuple(row))
    return EulerianTriangleB(r, Triangle(tuple(rows)))


def g_spec(r: int) -> GkpSpec:
    """GKP spec of G(n, k) = B^{(r)}(n+1, k): a = k + 1, b = r n - k + 1."""
    return GkpSpec.of((1, 1, 0), (1, -1, r))


def b_triangle_via_G(r: int, n_max: int) -> EulerianTriangleB:
    _check_r(r)
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    G = triangle_by_recurrence(g_spec(r), max(n_max - 1, 0))
    rows = [(Fraction(1),)]
    for n in range(1, n_max + 1):
        rows.append(tuple(G[n - 1, k] for k in range(n + 1)))
    return EulerianTriangleB(r, Triangle(tuple(rows)))


def b_explicit(r: int, n: int, k: int) -> Fraction:
    """Sum over t_1 + ... + t_{k+1} = n - k - 1 of

        1^{t_1} 2^{t_2} ... (k+1)^{t_{k+1}} * prod_{i=1..k} (r (t_1 + ... + t_i) + i (r-1) + 1).

    The i = 1 factor is r t_1 + r; for k = 0 the product is empty.
    """
    _check_r(r)
    if n < 1 or not 0 <= k < n:
        raise DomainError(f"b_explicit needs n >= 1 and 0 <= k < n, got n={n}, k={k}")
    total = Fraction(0)
    # t_1..t_{k+1} is a weak composition of n-k-1 into k+1 parts
    for c in enumerate_weak_compositions(n - 1, k):
        t = c.parts
        term = 1
        for i, ti in enumerate(t, start=1):
            term *= i ** ti
        run = 0
        for i in range(1, k + 1):
            run += t[i - 1]
            term *= r * run + i * (r - 1) + 1
        total += term
    return Fraction(total)


def marked_triangle(r: int, n_max: int) -> Triangle:
    """M(n, k) = r^{n-k} B^{(r)}(n, k)."""
    B = b_triangle(r, n_max).triangle
    return B.map(lambda n, k, v: v * Fraction(r) ** (n - k))


def marked_residual(M: Triangle, r: int, n: int, k: int) -> Fraction:
    """[(n-1) r - k + 1] M(n-1, k-1) + r (k+1) M(n-1, k) - M(n, k)."""
    return ((n - 1) * r - k + 1) * M[n - 1, k - 1] + r * (k + 1) * M[n - 1, k] - M[n, k]


def marked_explicit(r: int, n: int, k: int) -> Fraction:
    """Sum over weak compositions c of n - k of

        r^{n-k} prod_{i=1..k} (1 + i)^{c_i} ((r - 1)(i - 1) + r (c_0 + ... + c_{i-1})).
    """
    _check_r(r)
    if n < 1 or not 0 <= k <= n:
        raise DomainError(f"marked_explicit needs n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    total = 0
    for c in enumerate_weak_compositions(n, k):
        parts = c.parts
        term = 1
        run = 0
        for i in range(1, k + 1):
            run += parts[i - 1]
            term *= (1 + i) ** parts[i] * ((r - 1) * (i - 1) + r * run)
        total += term
    return Fraction(r) ** (n - k) * total


def is_stirling(word: tuple[int, ...], m: int, convention: Convention = "larger") -> bool:
    """Filtering validator over the multiset {1^m, ..., n^m}; quadratic, for tiny words."""
    if m < 1 or len(word) % m:
        return False
    n = len(word) // m
    if sorted(word) != [i for i in range(1, n + 1) for _ in range(m)]:
        return False
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, x in enumerate(word):
        first.setdefault(x, pos)
        last[x] = pos
    for x in first:
        for y in word[first[x] + 1:last[x]]:
            if convention == "larger" and y < x:
                return False
            if convention == "smaller" and y > x:
                return False
    return True


def enumerate_stirling_perms(m: int, n: int, convention: Convention = "larger") -> Iterator[StirlingPerm]:
    """Q_{mn} by gap insertion: the block of m copies of the newest letter goes
    into any of the m j + 1 gaps of a word on j letters."""
    if m < 1 or n < 0:
        raise DomainError(f"need m >= 1 and n >= 0, got m={m}, n={n}")

    def rec(word: tuple[int, ...], j: int) -> Iterator[tuple[int, ...]]:
        if j == n:
            yield word
            return
        block = (j + 1,) * m
        for gap in range(len(word) + 1):
            yield from rec(word[:gap] + block + word[gap:], j + 1)

    for w in rec((), 0):
        if convention == "smaller":
            w = tuple(n + 1 - x for x in w)
        yield StirlingPerm(w, m)


def descent_count(p: StirlingPerm, include_final: bool = False) -> int:
    w = p.word
    d = sum(1 for j in range(len(w) - 1) if w[j] > w[j + 1])
    return d + 1 if include_final else d


def descent_histogram(m: int, n: int, include_final: bool = False,
                      convention: Convention = "larger") -> dict[int, int]:
    hist = Counter(descent_count(p, include_final)
                   for p in enumerate_stirling_perms(m, n, convention))
    return dict(sorted(hist.items()))


def stirling_count(m: int, n: int) -> int:
    """|Q_{mn}| = prod_{i<n} (m i + 1)."""
    out = 1
    for i in range(n):
        out *= m * i + 1
    return out
