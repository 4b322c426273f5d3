"""Weighted E/NE lattice paths from (0, 0) to (n, k).

An East step (i-1, j) -> (i, j) carries weight a(i, j); a North-East step
(i-1, j-1) -> (i, j) carries weight b(i, j).  Weights are indexed by the
step's DESTINATION node.  Shifting this by one silently breaks every
identity downstream, so keep it that way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Literal

from gkp_triangles.core import AffineWeight, DomainError, GkpSpec, eval_weight

Step = Literal["E", "NE"]
E: Step = "E"
NE: Step = "NE"


def check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")


@dataclass(frozen=True)
class LatticePath:
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        steps = tuple(self.steps)
        for s in steps:
            if s not in (E, NE):
                raise ValueError(f"unknown step {s!r}")
        object.__setattr__(self, "steps", steps)

    @classmethod
    def parse(cls, text: str) -> "LatticePath":
        """Parse a space- or dot-separated step string such as ``"E NE NE E"``."""
        return cls(tuple(text.replace("·", " ").replace(".", " ").split()))

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def k(self) -> int:
        return sum(1 for s in self.steps if s == NE)

    def nodes(self) -> list[tuple[int, int]]:
        pts = [(0, 0)]
        j = 0
        for i, s in enumerate(self.steps, start=1):
            if s == NE:
                j += 1
            pts.append((i, j))
        return pts

    def __str__(self) -> str:
        return " ".join(self.steps)


@dataclass(frozen=True)
class IncreasingSeq:
    """Strictly increasing values in [1..n], i.e. an element of C↑(len, n)."""

    values: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        values = tuple(self.values)
        prev = 0
        for v in values:
            if not prev < v <= self.n:
                raise ValueError(f"{values} is not strictly increasing in [1..{self.n}]")
            prev = v
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def enumerate_paths(n: int, k: int) -> Iterator[LatticePath]:
    """All paths in R_{n,k}, lexicographic in step strings with E < NE."""
    check_nk(n, k)

    def rec(prefix: list[Step], east_left: int, ne_left: int) -> Iterator[LatticePath]:
        if east_left == 0 and ne_left == 0:
            yield LatticePath(tuple(prefix))
            return
        if east_left:
            prefix.append(E)
            yield from rec(prefix, east_left - 1, ne_left)
            prefix.pop()
        if ne_left:
            prefix.append(NE)
            yield from rec(prefix, east_left, ne_left - 1)
            prefix.pop()

    yield from rec([], n - k, k)


def path_weight(p: LatticePath, spec: GkpSpec) -> Fraction:
    w = Fraction(1)
    j = 0
    for i, s in enumerate(p.steps, start=1):
        if s == NE:
            j += 1
            w *= eval_weight(spec.b, i, j)
        else:
            w *= eval_weight(spec.a, i, j)
    return w


def total_weight_paths(n: int, k: int, spec: GkpSpec) -> Fraction:
    """Brute-force total weight of R_{n,k}; the oracle for everything else."""
    return sum((path_weight(p, spec) for p in enumerate_paths(n, k)), Fraction(0))


def sigma_of_path(p: LatticePath) -> IncreasingSeq:
    """Abscissas (1-based step indices) of the NE steps of ``p``."""
    return IncreasingSeq(tuple(i for i, s in enumerate(p.steps, start=1) if s == NE), p.n)


def path_of_sigma(s: IncreasingSeq) -> LatticePath:
    marks = set(s.values)
    return LatticePath(tuple(NE if i in marks else E for i in range(1, s.n + 1)))


def sigma_tilde(s: IncreasingSeq) -> IncreasingSeq:
    """Complement of ``s`` in [1..n], in increasing order."""
    marks = set(s.values)
    return IncreasingSeq(tuple(i for i in range(1, s.n + 1) if i not in marks), s.n)


def increasing_seqs(length: int, n: int) -> Iterator[IncreasingSeq]:
    """C↑(length, n) in lexicographic order."""
    check_nk(n, length)
    for c in combinations(range(1, n + 1), length):
        yield IncreasingSeq(c, n)


def explicit_sum_paths(n: int, k: int, spec: GkpSpec) -> Fraction:
    """Sum over σ in C↑(k, n) of prod a(σ̃_i, σ̃_i - i) * prod b(σ(i), i)."""
    check_nk(n, k)
    a, b = spec.a, spec.b
    total = Fraction(0)
    for sigma in increasing_seqs(k, n):
        term = Fraction(1)
        for i, st in enumerate(sigma_tilde(sigma), start=1):
            term *= eval_weight(a, st, st - i)
        for i, s in enumerate(sigma, start=1):
            term *= eval_weight(b, s, i)
        total += term
    return total


def explicit_sum_b1(n: int, k: int, a: AffineWeight) -> Fraction:
    """The b ≡ 1 specialisation: sum over p_1 < ... < p_{n-k} of
    prod ((a2 + a1) p_i - a1 i + a0)."""
    check_nk(n, k)
    slope = a.c2 + a.c1
    total = Fraction(0)
    for ps in combinations(range(1, n + 1), n - k):
        term = Fraction(1)
        for i, p in enumerate(ps, start=1):
            term *= slope * p - a.c1 * i + a.c0
        total += term
    return total
