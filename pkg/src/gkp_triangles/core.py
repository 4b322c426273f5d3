"""Coefficient specs, the triangle container and the defining recurrence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re
from typing import Iterable, Sequence, Union

RationalLike = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")


class DomainError(ValueError):
    """Raised when an operation is called outside its mathematical domain."""


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use int, str or Fraction")
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse the wire format ``p`` or ``p/q`` (no whitespace)."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    q = int(m.group(2) or 1)
    if q == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(m.group(1)), q)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class AffineWeight:
    """The function (n, k) -> c0 + c1*k + c2*n."""

    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("c0", "c1", "c2"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def of(cls, coeffs: Sequence[RationalLike]) -> "AffineWeight":
        if len(coeffs) != 3:
            raise ValueError(f"expected 3 coefficients, got {len(coeffs)}")
        return cls(*coeffs)

    @classmethod
    def parse(cls, text: str) -> "AffineWeight":
        """Parse ``"c0,c1,c2"``, each component in ``p`` or ``p/q`` form."""
        return cls.of([parse_rational(part) for part in text.split(",")])

    def __call__(self, n: int, k: int) -> Fraction:
        return eval_weight(self, n, k)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2)

    def is_constant_one(self) -> bool:
        return self.as_tuple() == (1, 0, 0)


ONE = AffineWeight(1, 0, 0)


@dataclass(frozen=True)
class GkpSpec:
    """East-step weight ``a`` and North-East-step weight ``b``."""

    a: AffineWeight
    b: AffineWeight = ONE

    @classmethod
    def of(cls, a: Sequence[RationalLike], b: Sequence[RationalLike] = (1, 0, 0)) -> "GkpSpec":
        return cls(AffineWeight.of(a), AffineWeight.of(b))

    def to_json(self) -> dict:
        return {
            "a": [format_rational(c) for c in self.a.as_tuple()],
            "b": [format_rational(c) for c in self.b.as_tuple()],
        }

    def __str__(self) -> str:
        fa = ",".join(format_rational(c) for c in self.a.as_tuple())
        fb = ",".join(format_rational(c) for c in self.b.as_tuple())
        return f"a=({fa}) b=({fb})"


def eval_weight(w: AffineWeight, n: int, k: int) -> Fraction:
    return w.c0 + w.c1 * k + w.c2 * n


@dataclass(frozen=True)
class Triangle:
    """Rows ``0..n_max`` of a lower-triangular array; row n holds n+1 entries."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        if not rows:
            raise ValueError("a triangle has at least row 0")
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")
        object.__setattr__(self, "rows", rows)

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]) -> Fraction:
        """``T[n, k]``; zero for k outside 0..n, IndexError for n outside 0..n_max."""
        n, k = nk
        if not 0 <= n <= self.n_max:
            raise IndexError(f"row {n} outside 0..{self.n_max}")
        if 0 <= k <= n:
            return self.rows[n][k]
        return Fraction(0)

    def entries(self) -> Iterable[tuple[int, int, Fraction]]:
        for n, row in enumerate(self.rows):
            for k, v in enumerate(row):
                yield n, k, v

    def map(self, fn) -> "Triangle":
        """Apply ``fn(n, k, value)`` cellwise."""
        return Triangle(tuple(tuple(fn(n, k, v) for k, v in enumerate(row))
                              for n, row in enumerate(self.rows)))


def triangle_by_recurrence(spec: GkpSpec, n_max: int) -> Triangle:
    """Rows 0..n_max of the GKP triangle of ``spec``.

    Out-of-range references T(n-1, -1) and T(n-1, n) contribute zero, so the
    recurrence is total; this is the ground truth every formula is checked
    against.
    """
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    a, b = spec.a, spec.b
    rows = [(Fraction(1),)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            v = Fraction(0)
            if k < n:
                v += eval_weight(a, n, k) * prev[k]
            if k > 0:
                v += eval_weight(b, n, k) * prev[k - 1]
            row.append(v)
        rows.append(tuple(row))
    return Triangle(tuple(rows))


def row_sum(t: Triangle, n: int) -> Fraction:
    if not 0 <= n <= t.n_max:
        raise IndexError(f"row {n} outside 0..{t.n_max}")
    return sum(t.rows[n], Fraction(0))
