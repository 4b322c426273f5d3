"""Command-line interface: ``gkp table|verify|paths|oracle|basis``.

Exit codes: 0 success, 1 identity violation, 2 usage error.
Negative leading coefficients need the ``=`` form, e.g. ``--a=-1,0,2``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb
from typing import Sequence

from gkp_triangles import paths as lp
from gkp_triangles import poly, stirling
from gkp_triangles.core import (
    AffineWeight,
    GkpSpec,
    Triangle,
    format_rational,
    parse_rational,
    triangle_by_recurrence,
)
from gkp_triangles.verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _weight(text: str) -> AffineWeight:
    try:
        return AffineWeight.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# --- serialization -----------------------------------------------------------

def triangle_to_json(spec: GkpSpec, t: Triangle) -> str:
    doc = {
        "spec": spec.to_json(),
        "nmax": t.n_max,
        "entries": [{"n": n, "k": k, "v": format_rational(v)} for n, k, v in t.entries()],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def triangle_from_json(text: str) -> tuple[GkpSpec, Triangle]:
    doc = json.loads(text)
    spec = GkpSpec(
        AffineWeight.of([parse_rational(s) for s in doc["spec"]["a"]]),
        AffineWeight.of([parse_rational(s) for s in doc["spec"]["b"]]),
    )
    rows: list[list[Fraction]] = [[] for _ in range(doc["nmax"] + 1)]
    for e in doc["entries"]:
        if e["k"] != len(rows[e["n"]]):
            raise ValueError(f"entry ({e['n']},{e['k']}) out of order")
        rows[e["n"]].append(parse_rational(e["v"]))
    return spec, Triangle(tuple(tuple(r) for r in rows))


def render_rows(rows: Sequence[Sequence[Fraction]]) -> str:
    return "".join(",".join(format_rational(v) for v in row) + "\n" for row in rows)


def render_markdown(rows: Sequence[Sequence[Fraction]], label: str = "n") -> str:
    width = max(len(r) for r in rows)
    lines = ["| " + label + " | " + " | ".join(f"k={k}" for k in range(width)) + " |",
             "|" + "---|" * (width + 1)]
    for n, row in enumerate(rows):
        cells = [format_rational(v) for v in row] + [""] * (width - len(row))
        lines.append(f"| {n} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render_triangle(spec: GkpSpec, t: Triangle, fmt: str, wide: bool = False) -> str:
    if fmt == "json":
        return triangle_to_json(spec, t)
    if fmt == "md":
        return render_markdown(t.rows)
    if wide:
        return render_rows(t.rows)
    return "n,k,value\n" + "".join(f"{n},{k},{format_rational(v)}\n" for n, k, v in t.entries())


# --- commands ----------------------------------------------------------------

def cmd_table(args) -> tuple[int, str]:
    if args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    spec = GkpSpec(args.a, args.b)
    t = triangle_by_recurrence(spec, args.nmax)
    return EXIT_OK, render_triangle(spec, t, args.format or "csv", args.wide)


def cmd_verify(args) -> tuple[int, str]:
    if args.nmax is not None and args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    rep = run_suite(args.suite, nmax=args.nmax, trials=args.trials, seed=args.seed)
    code = EXIT_OK if rep.ok else EXIT_FAIL
    if args.format == "json":
        return code, json.dumps(rep.to_json(include_checks=args.checks), sort_keys=True, indent=2) + "\n"
    s = rep.summary()
    lines = [f"suite={rep.suite} seed={args.seed} checks={s['total']} passed={s['passed']} failed={s['failed']}"]
    lines += [f"note: {note}" for note in rep.notes]
    fails = rep.failures()
    if fails:
        lines.append(f"first failure: {fails[0]}")
        lines += [str(c) for c in fails[1:20]]
    lines.append("PASS" if rep.ok else "FAIL")
    return code, "\n".join(lines) + "\n"


def cmd_paths(args) -> tuple[int, str]:
    n, k = args.n, args.k
    if not 0 <= k <= n <= 20:
        raise UsageError("need 0 <= k <= n <= 20")
    if comb(n, k) > args.limit:
        raise UsageError(f"C({n},{k}) = {comb(n, k)} exceeds --limit {args.limit}")
    spec = GkpSpec(args.a, args.b) if args.a is not None else None
    records = []
    total = Fraction(0)
    for p in lp.enumerate_paths(n, k):
        s = lp.sigma_of_path(p)
        rec = {"path": str(p), "sigma": list(s.values), "sigma_tilde": list(lp.sigma_tilde(s).values)}
        if spec is not None:
            w = lp.path_weight(p, spec)
            total += w
            rec["weight"] = format_rational(w)
        records.append(rec)
    if args.format == "json":
        doc = {"n": n, "k": k, "count": len(records), "paths": records}
        if spec is not None:
            doc["spec"] = spec.to_json()
            doc["total"] = format_rational(total)
        return EXIT_OK, json.dumps(doc, sort_keys=True, indent=2) + "\n"
    lines = []
    for rec in records:
        line = (f"{rec['path'] or '(empty)'} | σ={','.join(map(str, rec['sigma']))}"
                f" | σ̃={','.join(map(str, rec['sigma_tilde']))}")
        if spec is not None:
            line += f" | w={rec['weight']}"
        lines.append(line)
    footer = f"count={len(records)}"
    if spec is not None:
        footer += f" total={format_rational(total)}"
    lines.append(footer)
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_oracle(args) -> tuple[int, str]:
    m, n = args.m, args.n
    if m < 1 or n < 1:
        raise UsageError("need --m >= 1 and --n >= 1")
    if m * n > 16:
        raise UsageError(f"m*n = {m * n} exceeds the guard of 16")
    internal = stirling.descent_histogram(m, n, include_final=False)
    final = stirling.descent_histogram(m, n, include_final=True)
    count = sum(internal.values())
    row = stirling.b_triangle(m, n).triangle.rows[n][:n]
    internal_row = [internal.get(k, 0) for k in range(n)]
    final_row = [final.get(k, 0) for k in range(n + 1)]
    match = [Fraction(v) for v in internal_row] == list(row)
    code = EXIT_OK if match else EXIT_FAIL
    if args.format == "json":
        doc = {"m": m, "n": n, "count": count, "internal_descents": internal_row,
               "final_descents": final_row, "b_triangle_row": [format_rational(v) for v in row],
               "match": match}
        return code, json.dumps(doc, sort_keys=True, indent=2) + "\n"
    lines = [
        f"count={count}; internal-descents: {','.join(map(str, internal_row))}",
        f"with-final-descent: {','.join(map(str, final_row))}",
        f"b_triangle(r={m}) row {n}: {','.join(format_rational(v) for v in row)}",
        f"match={'yes' if match else 'no'}",
    ]
    return code, "\n".join(lines) + "\n"


def cmd_basis(args) -> tuple[int, str]:
    if not 0 <= args.nmax <= 50:
        raise UsageError("need 0 <= --nmax <= 50")
    spec = GkpSpec(args.a)
    t = triangle_by_recurrence(spec, args.nmax)
    rows = [[t[n, k] for k in range(args.nmax + 1)] for n in range(args.nmax + 1)]
    fmt = args.format or "csv"
    if not args.check:
        if fmt == "json":
            return EXIT_OK, triangle_to_json(spec, t)
        return EXIT_OK, render_markdown(rows) if fmt == "md" else render_rows(rows)
    checks = poly.verify_transition(args.a, args.nmax)
    ok = all(c.passed for c in checks)
    code = EXIT_OK if ok else EXIT_FAIL
    if fmt == "json":
        doc = {"spec": spec.to_json(), "nmax": args.nmax, "pass": ok,
               "checks": [{"n": c.n, "pass": c.passed,
                           "first_diff": None if c.first_diff is None else
                           [c.first_diff[0], format_rational(c.first_diff[1]), format_rational(c.first_diff[2])]}
                          for c in checks]}
        return code, json.dumps(doc, sort_keys=True, indent=2) + "\n"
    lines = [render_rows(rows).rstrip("\n")]
    for c in checks:
        if c.passed:
            lines.append(f"n={c.n}: pass")
        else:
            d, lhs, rhs = c.first_diff
            lines.append(f"n={c.n}: FAIL at x^{d}: {format_rational(lhs)} vs {format_rational(rhs)}")
    lines.append("pass" if ok else "FAIL")
    return code, "\n".join(lines) + "\n"


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json", "md"], default=None)
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--limit", type=int, default=100_000, help="max number of paths to list")

    parser = argparse.ArgumentParser(prog="gkp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="triangle by the recurrence")
    p.add_argument("--a", type=_weight, required=True, metavar="A0,A1,A2")
    p.add_argument("--b", type=_weight, default=AffineWeight(1, 0, 0), metavar="B0,B1,B2")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--wide", action="store_true", help="csv: one row of the triangle per line")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run cross-method suites")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--checks", action="store_true", help="json: include every check, not only failures")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paths", parents=[common], help="list R_{n,k} with σ, σ̃ and weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=_weight, default=None, metavar="A0,A1,A2")
    p.add_argument("--b", type=_weight, default=AffineWeight(1, 0, 0), metavar="B0,B1,B2")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("oracle", parents=[common], help="Stirling-permutation descent oracle")
    p.add_argument("kind", choices=["stirling"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("basis", parents=[common], help="rising -> shifted falling transition matrix")
    p.add_argument("--a", type=_weight, required=True, metavar="A0,A1,A2")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--check", action="store_true", help="verify the polynomial identity")
    p.set_defaults(func=cmd_basis)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"gkp {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
