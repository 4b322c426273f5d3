"""Cross-method verification suites.

Each suite compares two independent routes to the same exact value and
records one ``Check`` per comparison.  Bijection suites compare counts
(number of elements passing a roundtrip against C(n, k)) so that every
check is still an equality of two rationals.

Functions under test are looked up through their modules at call time so
that they can be swapped out (mutation testing).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from gkp_triangles import closed_forms, compositions, core, paths, poly, stirling
from gkp_triangles.core import AffineWeight, GkpSpec, format_rational

COEFF_RANGE = range(-3, 4)
NONZERO = [c for c in COEFF_RANGE if c != 0]


@dataclass
class Check:
    check_id: str
    params: str
    n: int
    k: int
    value_a: Fraction
    value_b: Fraction

    @property
    def passed(self) -> bool:
        return self.value_a == self.value_b

    def to_json(self) -> dict:
        return {
            "check": self.check_id,
            "params": self.params,
            "n": self.n,
            "k": self.k,
            "a": format_rational(self.value_a),
            "b": format_rational(self.value_b),
            "pass": self.passed,
        }

    def __str__(self) -> str:
        flag = "ok" if self.passed else "FAIL"
        return (f"[{flag}] {self.check_id} {self.params} n={self.n} k={self.k}: "
                f"{format_rational(self.value_a)} vs {format_rational(self.value_b)}")


@dataclass
class VerifyReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    # informational observations; never affect the exit code
    notes: list[str] = field(default_factory=list)

    def add(self, check_id: str, params, n: int, k: int, a, b) -> None:
        self.checks.append(Check(check_id, str(params), n, k, Fraction(a), Fraction(b)))

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def n_failed(self) -> int:
        return len(self.checks) - self.n_passed

    @property
    def ok(self) -> bool:
        return self.n_failed == 0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: "VerifyReport") -> None:
        self.checks.extend(other.checks)
        self.notes.extend(f"{other.suite}: {note}" for note in other.notes)

    def summary(self) -> dict:
        return {"total": len(self.checks), "passed": self.n_passed, "failed": self.n_failed}

    def to_json(self, include_checks: bool = True) -> dict:
        out = {"suite": self.suite, "summary": self.summary(), "notes": list(self.notes)}
        out["failures"] = [c.to_json() for c in self.failures()]
        if include_checks:
            out["checks"] = [c.to_json() for c in self.checks]
        return out


def _rng(seed: int, suite: str) -> random.Random:
    # per-suite stream so a suite gives the same specs alone or inside "all"
    return random.Random(f"{seed}:{suite}")


def random_spec(rng: random.Random, *, a1_nonzero=False, a2_nonzero=False, a2_zero=False,
                b_one=False, b2_zero=False) -> GkpSpec:
    def draw(nonzero: bool) -> int:
        return rng.choice(NONZERO if nonzero else list(COEFF_RANGE))

    a0 = draw(False)
    a1 = draw(a1_nonzero)
    a2 = 0 if a2_zero else draw(a2_nonzero)
    if b_one:
        b = (1, 0, 0)
    else:
        b = (draw(False), draw(False), 0 if b2_zero else draw(False))
    return GkpSpec.of((a0, a1, a2), b)


def _cells(nmax: int):
    for n in range(nmax + 1):
        for k in range(n + 1):
            yield n, k


def suite_cross(nmax: int = 7, trials: int = 200, seed: int = 0) -> VerifyReport:
    """Recurrence = brute-force path weight = σ-sum = composition-count closed form."""
    rep = VerifyReport("cross")
    rng = _rng(seed, "cross")
    for _ in range(trials):
        spec = random_spec(rng)
        T = core.triangle_by_recurrence(spec, nmax)
        for n, k in _cells(nmax):
            ref = T[n, k]
            rep.add("recurrence=total_weight_paths", spec, n, k, ref, paths.total_weight_paths(n, k, spec))
            rep.add("recurrence=explicit_sum_paths", spec, n, k, ref, paths.explicit_sum_paths(n, k, spec))
            rep.add("recurrence=closed_form_general", spec, n, k, ref,
                    compositions.closed_form_general(n, k, spec))
    return rep


def suite_b1(nmax: int = 7, trials: int = 100, seed: int = 0) -> VerifyReport:
    """b ≡ 1: p-sequence sum, and the alternating sum where a1, a2 != 0."""
    rep = VerifyReport("b1")
    rng = _rng(seed, "b1")
    n_alt = 0
    for _ in range(trials):
        spec = random_spec(rng, b_one=True)
        a = spec.a
        T = core.triangle_by_recurrence(spec, nmax)
        alt = a.c1 != 0 and a.c2 != 0
        n_alt += alt
        for n, k in _cells(nmax):
            ref = T[n, k]
            rep.add("recurrence=explicit_sum_b1", spec, n, k, ref, paths.explicit_sum_b1(n, k, a))
            rep.add("explicit_sum_b1=explicit_sum_paths", spec, n, k,
                    paths.explicit_sum_b1(n, k, a), paths.explicit_sum_paths(n, k, spec))
            if alt:
                v = closed_forms.alt_sum_b1(n, k, a)
                rep.add("recurrence=alt_sum_b1", spec, n, k, ref, v)
                rep.add("alt_sum_b1.denominator=1", spec, n, k, v.denominator, 1)
    rep.notes.append(f"alternating-sum sub-grid (a1 != 0, a2 != 0): {n_alt} of {trials} specs")
    return rep


def suite_altsum(nmax: int = 7, trials: int = 100, seed: int = 0) -> VerifyReport:
    """b = b0 + b1 k with a1, a2 != 0; plus the a2 = 0 boundary as an observation."""
    rep = VerifyReport("altsum")
    rng = _rng(seed, "altsum")
    for _ in range(trials):
        spec = random_spec(rng, a1_nonzero=True, a2_nonzero=True, b2_zero=True)
        T = core.triangle_by_recurrence(spec, nmax)
        for n, k in _cells(nmax):
            rep.add("recurrence=alt_sum_bk", spec, n, k, T[n, k], closed_forms.alt_sum_bk(n, k, spec))

    # outside the stated hypothesis: a2 = 0, a1 != 0
    total = agree = 0
    for a0, a1 in itertools.product(COEFF_RANGE, NONZERO):
        spec = GkpSpec.of((a0, a1, 0))
        T = core.triangle_by_recurrence(spec, nmax)
        for n, k in _cells(nmax):
            total += 1
            agree += T[n, k] == closed_forms.alt_sum_b1(n, k, spec.a)
    status = "holds" if agree == total else "fails"
    rep.notes.append(f"alt_sum_b1 with a2 = 0 (a0 in -3..3, a1 in -3..3 nonzero, n <= {nmax}): "
                     f"{status} on {agree}/{total} cells")
    return rep


def suite_a2zero(nmax: int = 7, trials: int = 100, seed: int = 0) -> VerifyReport:
    rep = VerifyReport("a2zero")
    rng = _rng(seed, "a2zero")
    for _ in range(trials):
        spec = random_spec(rng, a2_zero=True)
        T = core.triangle_by_recurrence(spec, nmax)
        for n, k in _cells(nmax):
            v = compositions.closed_form_a2zero(n, k, spec)
            rep.add("recurrence=closed_form_a2zero", spec, n, k, T[n, k], v)
            rep.add("closed_form_a2zero=closed_form_general", spec, n, k, v,
                    compositions.closed_form_general(n, k, spec))
    return rep


def suite_bijection(nmax: int = 10, trials: int = 50, seed: int = 0) -> VerifyReport:
    """Path <-> σ, σ̃ <-> composition, and β(σ̃) = δ(c) weight preservation.

    Values are counts: elements passing the roundtrip versus C(n, k).
    """
    rep = VerifyReport("bijection")
    rng = _rng(seed, "bijection")
    pairs = [(Fraction(rng.randint(-9, 9), rng.randint(1, 4)), Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
             for _ in range(trials)]
    for n, k in _cells(nmax):
        expected = comb(n, k)
        all_paths = list(paths.enumerate_paths(n, k))
        comps = list(compositions.enumerate_weak_compositions(n, k))
        rep.add("count(paths)=C(n,k)", "", n, k, len(all_paths), expected)
        rep.add("count(compositions)=C(n,k)", "", n, k, len(comps), expected)
        rep.add("distinct(sigma)=C(n,k)", "", n, k,
                len({paths.sigma_of_path(p).values for p in all_paths}), expected)

        path_rt = tilde_rt = comp_rt = sigma_ok = 0
        tildes = []
        for p in all_paths:
            s = paths.sigma_of_path(p)
            path_rt += paths.path_of_sigma(s) == p
            st = paths.sigma_tilde(s)
            tildes.append(st)
            c = compositions.sigma_tilde_to_comp(st, k)
            tilde_rt += compositions.comp_to_sigma_tilde(c) == st
            sigma_ok += compositions.comp_to_sigma(c) == s
            comp_rt += compositions.sigma_tilde_to_comp(compositions.comp_to_sigma_tilde(c), k) == c
        rep.add("path->sigma->path", "", n, k, path_rt, expected)
        rep.add("sigma_tilde->comp->sigma_tilde", "", n, k, tilde_rt, expected)
        rep.add("comp->sigma_tilde->comp", "", n, k, comp_rt, expected)
        rep.add("comp_to_sigma(comp(sigma_tilde))=sigma", "", n, k, sigma_ok, expected)
        rep.add("distinct(comp(sigma_tilde))=C(n,k)", "", n, k,
                len({compositions.sigma_tilde_to_comp(st, k) for st in tildes}), expected)

        for a0, a1 in pairs:
            same = sum(
                compositions.weight_beta(st, a0, a1)
                == compositions.weight_delta(compositions.sigma_tilde_to_comp(st, k), a0, a1)
                for st in tildes
            )
            rep.add("beta=delta", f"a0={format_rational(a0)} a1={format_rational(a1)}", n, k, same, expected)
    return rep


def suite_transition(nmax: int = 8, trials: int = 0, seed: int = 0) -> VerifyReport:
    """Rising/falling identity over the full grid a in {-2..2}^3.

    Values: number of agreeing coefficients versus number compared.
    """
    rep = VerifyReport("transition")
    for coeffs in itertools.product(range(-2, 3), repeat=3):
        a = AffineWeight.of(coeffs)
        label = "a=(" + ",".join(map(str, coeffs)) + ")"
        for chk in poly.verify_transition(a, nmax):
            # both sides are degree n with leading coefficient 1
            compared = chk.n + 1
            agreeing = compared if chk.passed else chk.first_diff[0]
            rep.add("rising=sum F*falling", label, chk.n, -1, agreeing, compared)
            if not chk.passed:
                d, lhs, rhs = chk.first_diff
                rep.notes.append(f"{label} n={chk.n}: first differing coefficient x^{d}: "
                                 f"{format_rational(lhs)} vs {format_rational(rhs)}")
    return rep


# frozen from brute-force enumeration of S_4, Q_{2,3}, Q_{2,4}
ANCHORS = [
    ("B(1) row 4", 1, 4, (1, 11, 11, 1)),
    ("B(2) row 3", 2, 3, (1, 8, 6)),
]


def suite_eulerian(nmax: int = 10, trials: int = 0, seed: int = 0) -> VerifyReport:
    rep = VerifyReport("eulerian")
    rmax = 4
    Bs = {r: stirling.b_triangle(r, max(nmax, 6)) for r in range(1, rmax + 1)}

    for label, r, n, row in ANCHORS:
        for k, v in enumerate(row):
            rep.add(f"anchor {label}", f"r={r}", n, k, Bs[r][n, k], v)
    rep.add("anchor B(2) row-4 sum", "r=2", 4, -1, sum(Bs[2].triangle.rows[4]), 105)

    for m, top in ((1, 6), (2, 4), (3, 3)):
        B = Bs[m]
        for n in range(1, top + 1):
            internal = stirling.descent_histogram(m, n, include_final=False)
            final = stirling.descent_histogram(m, n, include_final=True)
            other = stirling.descent_histogram(m, n, include_final=False, convention="smaller")
            for k in range(n):
                rep.add("b_triangle=descent_oracle", f"m={m}", n, k, B[n, k], internal.get(k, 0))
                rep.add("internal[k]=final[k+1]", f"m={m}", n, k, internal.get(k, 0), final.get(k + 1, 0))
                rep.add("larger=smaller convention", f"m={m}", n, k, internal.get(k, 0), other.get(k, 0))
            count = sum(1 for _ in stirling.enumerate_stirling_perms(m, n))
            rep.add("count(Q_mn)=prod(mi+1)", f"m={m}", n, -1, count, stirling.stirling_count(m, n))
            if m * n <= 8:
                brute = sum(1 for w in set(itertools.permutations([i for i in range(1, n + 1) for _ in range(m)]))
                            if stirling.is_stirling(w, m))
                rep.add("count(filtered words)=count(Q_mn)", f"m={m}", n, -1, brute, count)

    for r in range(1, rmax + 1):
        B = stirling.b_triangle(r, nmax)
        BG = stirling.b_triangle_via_G(r, nmax)
        for n, k in _cells(nmax):
            rep.add("b_triangle=b_triangle_via_G", f"r={r}", n, k, B[n, k], BG[n, k])
        for n in range(nmax + 1):
            rep.add("row_sum=prod(ri+1)", f"r={r}", n, -1, core.row_sum(B.triangle, n), stirling.stirling_count(r, n))

    k0 = []
    for r in range(1, 4):
        B = Bs[r]
        for n in range(1, 7):
            for k in range(1, n):
                rep.add("b_explicit=b_triangle", f"r={r}", n, k, stirling.b_explicit(r, n, k), B[n, k])
            k0.append(stirling.b_explicit(r, n, 0) == B[n, 0])
    rep.notes.append(f"b_explicit k=0 column (r <= 3, n <= 6): "
                     f"{'matches' if all(k0) else 'differs from'} B(n,0)=1 on {sum(k0)}/{len(k0)} cells")
    return rep


def suite_marked(nmax: int = 8, trials: int = 0, seed: int = 0) -> VerifyReport:
    rep = VerifyReport("marked")
    for r in range(1, 5):
        M = stirling.marked_triangle(r, nmax)
        for n in range(2, nmax + 1):
            for k in range(1, n):
                rep.add("marked recurrence residual=0", f"r={r}", n, k, stirling.marked_residual(M, r, n, k), 0)
        # outside the interior; reported, not gated
        edge = [stirling.marked_residual(M, r, n, k) for n in range(1, nmax + 1) for k in (0, n)]
        rep.notes.append(f"r={r}: recurrence residual on boundary cells k in {{0, n}}: "
                         f"{sum(1 for e in edge if e == 0)}/{len(edge)} zero")
    for r in range(1, 4):
        M = stirling.marked_triangle(r, 6)
        for n in range(1, 7):
            for k in range(n + 1):
                rep.add("marked_explicit=r^(n-k)B", f"r={r}", n, k, stirling.marked_explicit(r, n, k), M[n, k])
    return rep


SUITES: dict[str, Callable[..., VerifyReport]] = {
    "cross": suite_cross,
    "b1": suite_b1,
    "altsum": suite_altsum,
    "a2zero": suite_a2zero,
    "bijection": suite_bijection,
    "transition": suite_transition,
    "eulerian": suite_eulerian,
    "marked": suite_marked,
}


def run_suite(name: str, *, nmax: int | None = None, trials: int | None = None, seed: int = 0) -> VerifyReport:
    """Run one suite, or every suite for ``name == "all"``; None keeps suite defaults."""
    kwargs: dict = {"seed": seed}
    if nmax is not None:
        kwargs["nmax"] = nmax
    if trials is not None:
        kwargs["trials"] = trials
    if name == "all":
        rep = VerifyReport("all")
        for sub_name in SUITES:
            rep.extend(_guarded(sub_name, kwargs))
        return rep
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return _guarded(name, kwargs)


def _guarded(name: str, kwargs: dict) -> VerifyReport:
    """A suite that raises counts as one failed check instead of aborting the run."""
    try:
        return SUITES[name](**kwargs)
    except Exception as exc:  # noqa: BLE001
        rep = VerifyReport(name)
        rep.add(f"suite raised {type(exc).__name__}: {exc}", "", -1, -1, 1, 0)
        return rep
