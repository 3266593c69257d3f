"""Command-line driver: verification grids, intersections, characters, fitting.

Exit codes: 0 success, 1 some check failed, 2 malformed input,
3 a resource guard stopped the computation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .characters import (
    CharacterBudgetError,
    GeneratorProfile,
    OracleTooLarge,
    brute_force_dim,
    first_discrepancy,
    free_character,
    orbifold_character,
    term_budget,
)
from .curves import ConfigError, CurveRegistry, load_curves
from .exactalg import InterpolationError, MPoly, format_rational, interpolate_ratfunc, parse_rational
from .intersect import (
    TABLES,
    DegenerateOverlap,
    completeness_report,
    filter_points,
    intersect_curves,
    reconcile_lambda,
    verify_theorem,
)
from .intersect.verify import reports_to_csv, sort_reports

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
CHECK_GROUPS = ("items", "completeness")


class InputError(Exception):
    """Malformed command-line input; maps to exit code 2."""


def parse_range(text: str) -> list[int]:
    """'2..5', '3' or '1,2,4' -> sorted distinct integers."""
    out: set[int] = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo_i, hi_i = int(lo), int(hi)
                if lo_i > hi_i:
                    raise InputError(f"empty range {part!r}")
                out.update(range(lo_i, hi_i + 1))
            else:
                out.add(int(part))
    except ValueError:
        raise InputError(f"bad range {text!r}; use a..b, a single integer or a comma list") from None
    if not out:
        raise InputError(f"empty range {text!r}")
    return sorted(out)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out_dir: Path | None, name: str) -> None:
    if out_dir is None:
        sys.stdout.write(text)
    else:
        (out_dir / name).write_text(text, encoding="utf-8")


def _prepare_out(path: str | None) -> Path | None:
    if path is None:
        return None
    out = Path(path)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise InputError(f"cannot create output directory {path}: {exc}") from None
    if not os.access(out, os.W_OK):
        raise InputError(f"output directory {path} is not writable")
    return out


def _load_registry(path: str | None) -> CurveRegistry:
    if path is None:
        return CurveRegistry()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read curve config {path}: {exc}") from None
    try:
        return load_curves(text)
    except ConfigError as exc:
        raise InputError(f"{path}: {exc}") from None


# -- verify -------------------------------------------------------------------


def _verify_cell(task):
    kind, theorem, m, n, curves_path = task
    if kind == "completeness":
        return [completeness_report(m, n)]
    registry = _load_registry(curves_path)
    return verify_theorem(TABLES[theorem], m, n, registry)


def _text_report(reports) -> str:
    lines = []
    for r in reports:
        head = f"{r.theorem} item {r.item} (m={r.m}, n={r.n})"
        for c in r.checks:
            vals = " ".join(v for v in (c.lhs, c.rhs) if v is not None)
            lines.append(f"{head}: {c.name} {c.status.upper()} {vals}".rstrip())
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
    unknown = [t for t in theorems if t not in TABLES]
    if unknown or not theorems:
        raise InputError(f"unknown theorem ids {unknown}; choose from {sorted(TABLES)}")
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    if not checks or any(c not in CHECK_GROUPS for c in checks):
        raise InputError(f"--checks takes a comma list from {list(CHECK_GROUPS)}")
    ms, ns = parse_range(args.m), parse_range(args.n)
    if args.workers < 1:
        raise InputError("--workers must be >= 1")
    _load_registry(args.curves)  # fail early on a bad config
    out_dir = _prepare_out(args.out)

    tasks = []
    for theorem in theorems:
        table = TABLES[theorem]
        for m in ms:
            for n in ns:
                if not table.in_range(m, n):
                    continue
                if "items" in checks:
                    tasks.append(("items", theorem, m, n, args.curves))
                if theorem == "T43" and "completeness" in checks:
                    tasks.append(("completeness", theorem, m, n, None))

    if args.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            chunks = list(pool.map(_verify_cell, tasks))
    else:
        chunks = [_verify_cell(t) for t in tasks]
    reports = sort_reports(r for chunk in chunks for r in chunk)

    reconciliation = []
    if "T41" in theorems and "items" in checks:
        for m in ms:
            for n in ns:
                if m >= 2 and n >= 1:
                    reconciliation.extend(reconcile_lambda(m, n).to_dicts())

    statuses = [c.status for r in reports for c in r.checks]
    summary = {s: statuses.count(s) for s in ("pass", "fail", "skipped")}
    manifest = {
        "command": "verify",
        "theorems": theorems,
        "checks": checks,
        "m": ms,
        "n": ns,
        "curves": args.curves,
        "seed": args.seed,
    }
    if args.format == "json":
        doc = {
            "manifest": manifest,
            "summary": summary,
            "reports": [r.to_dict() for r in reports],
            "reconciliation": reconciliation,
        }
        _emit(_dump(doc), out_dir, "verify.json")
    elif args.format == "csv":
        _emit(reports_to_csv(reports), out_dir, "verify.csv")
    else:
        _emit(_text_report(reports), out_dir, "verify.txt")
    if out_dir is not None and args.format != "json" and reconciliation:
        _emit(_dump(reconciliation), out_dir, "reconciliation.json")
    print(
        f"verify: {summary['pass']} pass, {summary['fail']} fail, {summary['skipped']} skipped",
        file=sys.stderr,
    )
    return EXIT_FAIL if summary["fail"] else EXIT_OK


# -- intersect ------------------------------------------------------------------


def intersection_doc(a, b) -> dict:
    result = intersect_curves(a, b)
    records = filter_points(result.points, a, b)
    cert = result.certificate
    return {
        "a": a.name,
        "b": b.name,
        "points": [
            {
                "k": format_rational(r.k),
                "l": format_rational(r.l),
                "c": None if r.c is None else format_rational(r.c),
                "lambda": None if r.lam is None else format_rational(r.lam),
                "status": r.status,
                "certified": r.certified,
            }
            for r in records
        ],
        "certificate": {
            "residual": str(cert.residual),
            "pole_free_residual": str(cert.pole_free_residual),
            "branches": [
                {
                    "modulus": str(MPoly.from_dense(list(br.modulus), "s")),
                    "gcd_degree": br.gcd_degree,
                    "c": None if c is None else format_rational(c),
                }
                for br, c in zip(cert.branches, cert.branch_c)
            ],
            "unresolved": [
                {"s": format_rational(s), "factor": str(f)} for s, f in cert.unresolved
            ],
            "constant_gcd": cert.constant_gcd,
            "complete": cert.complete,
        },
    }


def cmd_intersect(args) -> int:
    registry = _load_registry(args.curves)
    try:
        a, b = registry[args.a], registry[args.b]
    except KeyError as exc:
        raise InputError(f"unknown curve {exc.args[0]!r}") from None
    if args.a == args.b:
        raise InputError(f"DegenerateOverlap: {args.a} intersected with itself")
    try:
        doc = intersection_doc(a, b)
    except DegenerateOverlap as exc:
        raise InputError(f"DegenerateOverlap: {exc}") from None
    if args.format == "json":
        sys.stdout.write(_dump(doc))
    else:
        for p in doc["points"]:
            print(f"k={p['k']} l={p['l']} c={p['c']} lambda={p['lambda']} {p['status']}"
                  f"{' certified' if p['certified'] else ''}")
        cert = doc["certificate"]
        print(f"residual {cert['residual']}; constant gcd: {cert['constant_gcd']}; complete: {cert['complete']}")
    return EXIT_OK


# -- char -----------------------------------------------------------------------


def cmd_char(args) -> int:
    if args.n < 1 or args.weight < 0:
        raise InputError("need --n >= 1 and --weight >= 0")
    N = args.weight
    free = free_character(GeneratorProfile.even(), N)
    try:
        budget = term_budget()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    partial = False
    try:
        orb = orbifold_character(args.n, N, budget)
    except CharacterBudgetError as exc:
        print(f"char: {exc}", file=sys.stderr)
        orb, partial = None, True

    oracle: list[int | None] = [None] * (N + 1)
    if args.oracle:
        for d in range(N + 1):
            try:
                oracle[d] = brute_force_dim(args.n, d)
            except OracleTooLarge:
                break

    discrepancy = None if orb is None else first_discrepancy(orb, free)
    agrees = None
    if orb is not None and args.oracle:
        agrees = all(o is None or o == orb[d] for d, o in enumerate(oracle))
    rows = [
        {
            "weight": d,
            "orbifold": None if orb is None else orb[d],
            "free_even": free[d],
            "oracle": oracle[d],
        }
        for d in range(N + 1)
    ]
    if args.format == "json":
        doc = {
            "n": args.n,
            "weight": N,
            "term_budget": budget,
            "partial": partial,
            "rows": rows,
            "first_discrepancy": discrepancy,
            "oracle_agrees": agrees,
        }
        sys.stdout.write(_dump(doc))
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["weight", "orbifold", "free_even", "oracle"])
        for r in rows:
            w.writerow(["" if r[k] is None else r[k] for k in ("weight", "orbifold", "free_even", "oracle")])
        sys.stdout.write(buf.getvalue())
        print(f"first discrepancy: {'NONE' if discrepancy is None else discrepancy}", file=sys.stderr)
    if partial:
        return EXIT_RESOURCE
    return EXIT_FAIL if agrees is False else EXIT_OK


# -- fit ------------------------------------------------------------------------


def _read_points(path: str) -> list[tuple[Fraction, Fraction]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read points file {path}: {exc}") from None
    try:
        if text.lstrip().startswith("["):
            raw = json.loads(text)
        else:
            raw = [row for row in csv.reader(io.StringIO(text)) if row]
            if raw and not raw[0][0].strip().lstrip("-").replace("/", "").isdigit():
                raw = raw[1:]  # header
        pts = []
        for item in raw:
            if len(item) != 2:
                raise ValueError(f"expected [x, y] pairs, got {item!r}")
            pts.append(tuple(
                Fraction(v) if isinstance(v, int) and not isinstance(v, bool) else parse_rational(str(v).strip())
                for v in item
            ))
        return pts
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_fit(args) -> int:
    if args.num_deg < 0 or args.den_deg < 0:
        raise InputError("degree bounds must be >= 0")
    pts = _read_points(args.points)
    try:
        f = interpolate_ratfunc(pts, args.num_deg, args.den_deg, args.param)
    except InterpolationError as exc:
        print(f"fit: {exc}", file=sys.stderr)
        return EXIT_FAIL
    doc = {
        "var": f.var,
        "num": [format_rational(c) for c in f.num_dense],
        "den": [format_rational(c) for c in f.den_dense],
        "points": len(pts),
    }
    sys.stdout.write(_dump(doc))
    return EXIT_OK


# -- entry point ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wtrunc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check the coincidence lists over an (m, n) grid")
    v.add_argument("--theorems", default="T41,T42,T43")
    v.add_argument("--m", default="2..5")
    v.add_argument("--n", default="1..4")
    v.add_argument("--curves", help="JSON curve config supplying partner curves")
    v.add_argument("--out", help="directory for report files (default: stdout)")
    v.add_argument("--format", choices=("json", "csv", "text"), default="json")
    v.add_argument("--checks", default="items,completeness",
                   help="comma list from: items, completeness (T43 only)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--seed", type=int, default=0, help="recorded in the manifest")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("intersect", help="intersect two curves")
    i.add_argument("--a", required=True)
    i.add_argument("--b", required=True)
    i.add_argument("--curves")
    i.add_argument("--format", choices=("json", "text"), default="json")
    i.set_defaults(func=cmd_intersect)

    c = sub.add_parser("char", help="orbifold vs free even character")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--weight", type=int, required=True)
    c.add_argument("--oracle", action="store_true", help="add the brute-force column")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.set_defaults(func=cmd_char)

    f = sub.add_parser("fit", help="interpolate a rational function through points")
    f.add_argument("--points", required=True, help="JSON [[x, y], ...] or two-column CSV")
    f.add_argument("--num-deg", type=int, required=True)
    f.add_argument("--den-deg", type=int, required=True)
    f.add_argument("--param", default="t")
    f.set_defaults(func=cmd_fit)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"wtrunc {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
