"""Command-line frontend: ring tables, BV tables, pages, series, checks.

Exit codes: 0 on success and passing verifications, 1 on a failed
verification, 2 on input errors.  All numeric output is exact; rationals
print as p/q.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bv, resonance, spectral
from . import series as series_mod
from .ring import (
    AlgebraConfig,
    BVCase,
    Component,
    InputError,
    basis,
    component,
    element,
    loop_degree,
    render_element,
    render_monomial,
    top_degree,
)

CASE_CHOICES = [case.value for case in BVCase]


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _common_flags(parser: argparse.ArgumentParser, formats=("table", "json", "csv")) -> None:
    parser.add_argument("--format", choices=formats, default="table")
    parser.add_argument("--quiet", action="store_true", help="suppress informational output")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled property checks")


def _algebra(args) -> AlgebraConfig:
    return AlgebraConfig(args.n, BVCase(args.case))


def _emit_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _components(arg: str) -> list[Component]:
    if arg == "both":
        return [Component.E, Component.G]
    return [Component(arg)]


def _monomial_rows(cfg: AlgebraConfig, comps, lo: int, hi: int, with_delta: bool):
    rows = []
    for q in range(lo, hi + 1):
        for comp in comps:
            for m in basis(cfg, comp, q):
                row = {
                    "monomial": render_monomial(m),
                    "component": component(m, cfg).value,
                    "loop_degree": loop_degree(m, cfg),
                }
                if with_delta:
                    row["delta"] = render_element(bv.delta(element(m), cfg))
                else:
                    row["top_degree"] = top_degree(m, cfg)
                rows.append(row)
    return rows


def _print_rows(rows, columns, fmt: str) -> None:
    if fmt == "json":
        print(_emit_json({"rows": rows}))
        return
    if fmt == "csv":
        print(",".join(columns))
        for row in rows:
            print(",".join(str(row[c]) for c in columns))
        return
    widths = [max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in columns]
    print("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
    for row in rows:
        print("  ".join(str(row[c]).ljust(w) for c, w in zip(columns, widths)))


def cmd_ring(args) -> int:
    cfg = _algebra(args)
    lo = args.min_degree if args.min_degree is not None else -cfg.dim
    hi = args.max_degree if args.max_degree is not None else 2 * cfg.n
    if lo > hi:
        raise InputError(f"empty degree window [{lo}, {hi}]")
    rows = _monomial_rows(cfg, _components(args.component), lo, hi, with_delta=False)
    _print_rows(rows, ["monomial", "component", "loop_degree", "top_degree"], args.format)
    return 0


def cmd_bv(args) -> int:
    cfg = _algebra(args)
    lo = args.min_degree if args.min_degree is not None else -cfg.dim
    hi = args.max_degree if args.max_degree is not None else 2 * cfg.n
    if lo > hi:
        raise InputError(f"empty degree window [{lo}, {hi}]")
    rows = _monomial_rows(cfg, _components(args.component), lo, hi, with_delta=True)
    _print_rows(rows, ["monomial", "component", "loop_degree", "delta"], args.format)
    return 0


def cmd_pages(args) -> int:
    cfg = _algebra(args)
    payload = {}
    for comp in _components(args.component):
        ss = spectral.SSConfig(cfg, comp, args.max_degree)
        page = spectral.e2_page(ss) if args.page == 2 else spectral.e3_page(ss)
        payload[comp.value] = spectral.page_to_json(page, ss)
    if args.format == "json":
        out = payload if args.component == "both" else payload[args.component]
        print(_emit_json(out))
        return 0
    for comp_name, obj in payload.items():
        if args.format == "csv":
            print("p,q,dim")
            for entry in obj["entries"]:
                print(f"{entry['p']},{entry['q']},{entry['dim']}")
        else:
            if not args.quiet:
                print(f"# component {comp_name}, page {obj['page']}")
            for entry in obj["entries"]:
                print(f"{entry['p']:>4} {entry['q']:>5} {entry['dim']:>4}")
            print("series " + " ".join(str(c) for c in obj["series"]))
    return 0


def cmd_series(args) -> int:
    builders = {
        "lg": series_mod.lg_series,
        "le": series_mod.le_series,
        "total": series_mod.total_series,
    }
    r = builders[args.which](args.n)
    payload = {"num": list(r.numerator), "den": list(r.denominator)}
    if args.expand is not None:
        payload["expansion"] = [
            _frac(c) if isinstance(c, Fraction) else c
            for c in series_mod.expand(r, args.expand).coefficients
        ]
    if args.average:
        payload["average"] = _frac(series_mod.average_alternating(r))
    if args.format == "json":
        print(_emit_json(payload))
        return 0
    print(f"num: {payload['num']}")
    print(f"den: {payload['den']}")
    if "expansion" in payload:
        print("expansion: " + " ".join(str(c) for c in payload["expansion"]))
    if "average" in payload:
        print(f"average: {payload['average']}")
    return 0


def cmd_verify(args) -> int:
    cfg = _algebra(args)
    failed = False
    report = spectral.verify_collapse(cfg, args.max_degree)
    if report.passed:
        if not args.quiet:
            print(f"collapse n={cfg.n} case={cfg.bv_case.value} "
                  f"through degree {args.max_degree}: PASS")
    else:
        failed = True
        print(f"collapse n={cfg.n} case={cfg.bv_case.value}: FAIL")
        if not report.e_page_stable:
            print("  contractible component moved between pages two and three")
        if report.first_mismatch:
            k, got, want = report.first_mismatch
            print(f"  first mismatch at degree {k}: computed {got}, expected {want}")
            print(f"  computed series: {list(report.computed)}")
            print(f"  expected series: {list(report.expected)}")
    lo, hi = -cfg.dim, 12 * cfg.n
    failures = bv.axiom_failures(cfg, lo, hi, samples=args.samples, seed=args.seed)
    if failures:
        failed = True
        print(f"axioms n={cfg.n} case={cfg.bv_case.value}: FAIL")
        for message in failures[:10]:
            print(f"  {message}")
    elif not args.quiet:
        print(f"axioms n={cfg.n} case={cfg.bv_case.value} on degrees "
              f"[{lo}, {hi}] with {args.samples} samples (seed {args.seed}): PASS")
    return 1 if failed else 0


def _resonance_payload(args, n: int, records) -> tuple[dict, bool]:
    payload: dict = {"n": n}
    passed = True
    if args.check == "nondegenerate":
        rep = resonance.nondegenerate_check(records, n)
        payload["check"] = "nondegenerate"
        payload["sum"] = _frac(rep.total)
        payload["target"] = _frac(rep.target)
        payload["consistent_with_full"] = rep.consistent_with_full
        payload["verdict"] = "pass" if rep.passed else "fail"
        passed = rep.passed
    else:
        rep = resonance.resonance_check(records, n)
        payload["check"] = "full"
        payload["per_geodesic"] = {label: _frac(value) for label, value in rep.per_geodesic.items()}
        payload["sum"] = _frac(rep.total)
        payload["target"] = _frac(rep.target)
        payload["vacuous"] = rep.vacuous
        payload["verdict"] = "pass" if rep.passed else "fail"
        passed = rep.passed
    if args.morse is not None:
        trunc = resonance.morse_truncation(records, n, args.morse)
        payload["morse"] = {
            "q": args.morse,
            "alternating_sum": trunc.alternating_sum,
            "average": _frac(trunc.average) if trunc.average is not None else None,
        }
    return payload, passed


def cmd_resonance(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as handle:
            obj = json.load(handle)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON in {args.input}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    n, records = resonance.load_problem(obj)
    payload, passed = _resonance_payload(args, n, records)
    if args.format == "json":
        print(_emit_json(payload))
    else:
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, dict):
                value = json.dumps(value, sort_keys=True)
            print(f"{key}: {value}")
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopbv",
        description="Exact mod-2 loop-homology computations for odd projective spaces",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_ring = sub.add_parser("ring", help="basis monomials with degrees and components")
    p_ring.add_argument("--n", type=int, default=1)
    p_ring.add_argument("--case", choices=CASE_CHOICES, default="A_v")
    p_ring.add_argument("--component", choices=["e", "g", "both"], default="both")
    p_ring.add_argument("--min-degree", type=int, default=None)
    p_ring.add_argument("--max-degree", type=int, default=None)
    _common_flags(p_ring)
    p_ring.set_defaults(func=cmd_ring)

    p_bv = sub.add_parser("bv", help="BV operator table on basis monomials")
    p_bv.add_argument("action", nargs="?", choices=["table"], default="table")
    p_bv.add_argument("--n", type=int, default=1)
    p_bv.add_argument("--case", choices=CASE_CHOICES, default="A_v")
    p_bv.add_argument("--component", choices=["e", "g", "both"], default="both")
    p_bv.add_argument("--min-degree", type=int, default=None)
    p_bv.add_argument("--max-degree", type=int, default=None)
    _common_flags(p_bv)
    p_bv.set_defaults(func=cmd_bv)

    p_pages = sub.add_parser("pages", help="spectral-sequence page dimensions and series")
    p_pages.add_argument("--n", type=int, default=1)
    p_pages.add_argument("--case", choices=CASE_CHOICES, default="A_v")
    p_pages.add_argument("--component", choices=["e", "g", "both"], default="both")
    p_pages.add_argument("--max-degree", type=int, default=40)
    p_pages.add_argument("--page", type=int, choices=[2, 3], default=3)
    _common_flags(p_pages)
    p_pages.set_defaults(func=cmd_pages)

    p_series = sub.add_parser("series", help="closed-form series, expansion, average")
    p_series.add_argument("--n", type=int, default=1)
    p_series.add_argument("--which", choices=["lg", "le", "total"], default="lg")
    p_series.add_argument("--expand", type=int, default=None, metavar="N")
    p_series.add_argument("--average", action="store_true")
    _common_flags(p_series, formats=("table", "json"))
    p_series.set_defaults(func=cmd_series)

    p_verify = sub.add_parser("verify", help="collapse certificate plus sampled axiom checks")
    p_verify.add_argument("--n", type=int, default=1)
    p_verify.add_argument("--case", choices=CASE_CHOICES, default="A_v")
    p_verify.add_argument("--max-degree", type=int, default=100)
    p_verify.add_argument("--samples", type=int, default=200)
    _common_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_res = sub.add_parser("resonance", help="resonance identity checks on geodesic data")
    p_res.add_argument("--input", required=True)
    p_res.add_argument("--check", choices=["full", "nondegenerate"], default="full")
    p_res.add_argument("--morse", type=int, default=None, metavar="Q")
    _common_flags(p_res, formats=("table", "json"))
    p_res.set_defaults(func=cmd_resonance)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, series_mod.NonQuasilinearError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
