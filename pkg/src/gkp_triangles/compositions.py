"""Weak compositions and their correspondence with increasing sequences.

Three equinumerous sets, each of size C(n, k):

* A = C↑(k, n), the NE abscissas σ of a path,
* B = C↑(n-k, n), the E abscissas σ̃,
* C = weak compositions (c_0, ..., c_k) of n - k.

``comp_to_sigma`` maps C -> A and ``sigma_tilde_to_comp`` maps B -> C.  Under
the second map the weight β on B becomes the weight δ on C, which turns the
path sum into a sum over compositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from gkp_triangles.core import DomainError, GkpSpec, as_rational
from gkp_triangles.paths import IncreasingSeq, check_nk


@dataclass(frozen=True)
class WeakComposition:
    """Parts (c_0, ..., c_k) summing to n - k."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a weak composition has at least the part c_0")
        if any(c < 0 for c in parts):
            raise ValueError(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return len(self.parts) - 1

    @property
    def n(self) -> int:
        return self.k + sum(self.parts)


def enumerate_weak_compositions(n: int, k: int) -> Iterator[WeakComposition]:
    """Weak compositions of n - k into k + 1 parts.

    Order is reverse-lexicographic in the parts, which is the order in which
    ``enumerate_paths`` visits the corresponding paths (E < NE).
    """
    check_nk(n, k)

    def rec(prefix: list[int], left: int, slots: int) -> Iterator[WeakComposition]:
        if slots == 1:
            yield WeakComposition(tuple(prefix) + (left,))
            return
        for c in range(left, -1, -1):
            prefix.append(c)
            yield from rec(prefix, left - c, slots - 1)
            prefix.pop()

    yield from rec([], n - k, k + 1)


def comp_to_sigma(c: WeakComposition) -> IncreasingSeq:
    """σ_i = i + c_0 + ... + c_{i-1}."""
    values = []
    run = 0
    for i in range(1, c.k + 1):
        run += c.parts[i - 1]
        values.append(i + run)
    return IncreasingSeq(tuple(values), c.n)


def sigma_to_comp(s: IncreasingSeq) -> WeakComposition:
    """Inverse of ``comp_to_sigma``."""
    k = len(s)
    parts = []
    prev = 0
    for v in s.values:
        parts.append(v - prev - 1)
        prev = v
    parts.append(s.n - prev)
    return WeakComposition(tuple(parts))


def sigma_tilde_to_comp(st: IncreasingSeq, k: int | None = None) -> WeakComposition:
    """c_i = #{j : σ̃_j - j = i} for i = 0..k.

    ``k`` defaults to n - len(st), i.e. ``st`` read as the E abscissas of a
    path ending at (n, k).
    """
    if k is None:
        k = st.n - len(st)
    if len(st) != st.n - k:
        raise DomainError(f"{st.values} has length {len(st)}, expected n - k = {st.n - k}")
    parts = [0] * (k + 1)
    for j, v in enumerate(st.values, start=1):
        parts[v - j] += 1
    return WeakComposition(tuple(parts))


def comp_to_sigma_tilde(c: WeakComposition) -> IncreasingSeq:
    """Inverse of ``sigma_tilde_to_comp``: c_i consecutive entries equal to l + i."""
    values = []
    l = 0
    for i, ci in enumerate(c.parts):
        for _ in range(ci):
            l += 1
            values.append(l + i)
    return IncreasingSeq(tuple(values), c.n)


def weight_beta(st: IncreasingSeq, a0, a1) -> Fraction:
    a0, a1 = as_rational(a0), as_rational(a1)
    w = Fraction(1)
    for j, v in enumerate(st.values, start=1):
        w *= a0 + (v - j) * a1
    return w


def weight_delta(c: WeakComposition, a0, a1) -> Fraction:
    a0, a1 = as_rational(a0), as_rational(a1)
    w = Fraction(1)
    for i, ci in enumerate(c.parts):
        w *= (a0 + i * a1) ** ci
    return w


def closed_form_a2zero(n: int, k: int, spec: GkpSpec) -> Fraction:
    """Sum over weak compositions c of n - k of

        a0^{c_0} * prod_{i=1..k} (a0 + a1 i)^{c_i} (b0 + (b1 + b2) i + b2 (c_0 + ... + c_{i-1})).

    Valid only when the East weight does not depend on n.
    """
    check_nk(n, k)
    a, b = spec.a, spec.b
    if a.c2 != 0:
        raise DomainError(f"closed_form_a2zero needs a2 = 0, got a2 = {a.c2}")
    a0, a1 = a.c0, a.c1
    b0, b12, b2 = b.c0, b.c1 + b.c2, b.c2
    total = Fraction(0)
    for c in enumerate_weak_compositions(n, k):
        parts = c.parts
        term = a0 ** parts[0]
        run = 0
        for i in range(1, k + 1):
            run += parts[i - 1]
            term *= (a0 + a1 * i) ** parts[i] * (b0 + b12 * i + b2 * run)
        total += term
    return total


def closed_form_general(n: int, k: int, spec: GkpSpec) -> Fraction:
    """Sum over 1 <= p_1 < ... < p_{n-k} <= n of

        prod_i ((a2 + a1) p_i - a1 i + a0)
        * prod_{i=1..k} (b0 + (b1 + b2) i + b2 #{l : p_l - l < i}).
    """
    check_nk(n, k)
    a, b = spec.a, spec.b
    slope, a1, a0 = a.c2 + a.c1, a.c1, a.c0
    b0, b12, b2 = b.c0, b.c1 + b.c2, b.c2
    total = Fraction(0)
    for ps in combinations(range(1, n + 1), n - k):
        term = Fraction(1)
        counts = [0] * (k + 1)
        for i, p in enumerate(ps, start=1):
            term *= slope * p - a1 * i + a0
            counts[p - i] += 1
        run = 0
        for i in range(1, k + 1):
            run += counts[i - 1]
            term *= b0 + b12 * i + b2 * run
        total += term
    return total
