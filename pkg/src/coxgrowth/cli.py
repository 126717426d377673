"""Command-line interface.

Subcommands: growth, verify, chi, census, oracle, catalog.  Every subcommand
accepts ``--json`` for a structured report (schema in :data:`REPORT_SCHEMA`).
Exit codes: 0 all checks pass, 1 computational failure or a failed check,
2 usage error.  Output is deterministic except for the timestamp field.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from . import __version__
from .catalog import ENTRIES
from .census import (KINDS, enumerate_simplices, euler_series,
                     euler_series_by_type, valid_type_masks)
from .classify import classify, spherical_subsets
from .coxeter import CoxParseError, format_subset, parse_coxeter_file
from .growth import (InvariantViolation, growth_table, nerve_coefficient,
                     nerve_link, verify_identities, verify_identity)
from .oracle import OracleHorizonError, WordOracle, cross_check_oracles
from .ratfunc import format_poly, format_ratfunc, series_expand

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "system", "timestamp", "checks", "data", "exit_status"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "system": {"type": ["string", "null"]},
        "timestamp": {"type": "string"},
        "exit_status": {"type": "integer", "minimum": 0, "maximum": 2},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "not-applicable"]},
                    "detail": {"type": ["string", "null"]},
                    "lhs": {"type": ["string", "null"]},
                    "rhs": {"type": ["string", "null"]},
                },
            },
        },
        "data": {"type": "object"},
    },
}


def _check(name, status, detail=None, lhs=None, rhs=None):
    return {"name": name, "status": status, "detail": detail, "lhs": lhs, "rhs": rhs}


def _load(path):
    with open(path, encoding="utf-8") as handle:
        return parse_coxeter_file(handle.read())


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (lines, data, checks)
# ---------------------------------------------------------------------------

def _cmd_growth(args):
    matrix = _load(args.file)
    table = growth_table(matrix)
    series = table.series()
    info = table.info()
    lines = [f"W(t) = {format_ratfunc(series)}"]
    if info.finite:
        lines.append(f"finite group of order {info.order}, "
                     f"longest element length {info.longest_length}")
    else:
        lines.append("infinite group")
    data = {
        "rank": matrix.rank,
        "numerator": format_poly(series.num),
        "denominator": format_poly(series.den),
        "display": format_ratfunc(series),
        "finite": info.finite,
        "longest_length": info.longest_length,
        "order": info.order,
        "series": None,
    }
    if args.series is not None:
        coeffs = series_expand(series, args.series)
        data["series"] = coeffs
        lines.append(f"series: {coeffs}")
    return lines, data, []


def _cmd_verify(args):
    matrix = _load(args.file)
    if args.identity == "all":
        reports = verify_identities(matrix)
    else:
        reports = [verify_identity(matrix, int(args.identity))]
    lines = []
    checks = []
    for rep in reports:
        lines.append(rep.describe())
        if not rep.applicable:
            checks.append(_check(f"identity {rep.identity}", "not-applicable", rep.note))
        else:
            status = "pass" if rep.holds else "fail"
            detail = "holds by construction" if rep.by_construction else "independent check"
            checks.append(_check(f"identity {rep.identity}", status, detail,
                                 format_ratfunc(rep.lhs), format_ratfunc(rep.rhs)))
    data = {"rank": matrix.rank, "finite": classify(matrix, matrix.full_mask).finite}
    return lines, data, checks


def _cmd_chi(args):
    matrix = _load(args.file)
    lines = []
    checks = []
    rows = []
    for subset in spherical_subsets(matrix):
        chi = nerve_coefficient(matrix, subset)
        link = nerve_link(matrix, subset)
        one_minus = 1 - link.euler_characteristic()
        sign = -1 if subset.bit_count() & 1 else 1
        agree = one_minus == sign * chi
        rows.append({"subset": format_subset(subset), "mask": subset,
                     "chi": chi, "one_minus_link_euler": one_minus})
        lines.append(f"T = {format_subset(subset):<12} chi_T = {chi:>3}   "
                     f"1 - chi(link) = {one_minus:>3}   "
                     f"{'ok' if agree else 'MISMATCH'}")
        checks.append(_check(f"link euler identity at {format_subset(subset)}",
                             "pass" if agree else "fail",
                             lhs=str(one_minus), rhs=str(sign * chi)))
    return lines, {"rank": matrix.rank, "table": rows}, checks


def _cmd_census(args):
    matrix = _load(args.file)
    info = classify(matrix, matrix.full_mask)
    horizon = args.max_length
    if horizon is None and not info.finite:
        raise ValueError("--max-length is required for an infinite group")
    oracle = WordOracle(matrix)
    records = enumerate_simplices(matrix, args.complex, horizon, oracle)
    if horizon is None:
        horizon = info.longest_length
    coeffs = euler_series(matrix, args.complex, horizon, records=records)
    label = "chi^t" if args.complex == "tits" else "chi_t"
    lines = [f"{label} coefficients: {coeffs}",
             f"records: {len(records)}"]
    checks = []
    by_type = []
    for t in valid_type_masks(matrix, args.complex):
        tc = euler_series_by_type(matrix, args.complex, t, horizon, oracle)
        by_type.append({"type": format_subset(t), "mask": t,
                        "census": list(tc.census),
                        "closed_form": format_ratfunc(tc.closed_form),
                        "matches": tc.matches})
        checks.append(_check(f"type {format_subset(t)} census vs closed form",
                             "pass" if tc.matches else "fail",
                             lhs=str(list(tc.census)),
                             rhs=str(list(tc.closed_series))))
        if args.by_type:
            lines.append(f"type {format_subset(t):<12} census {list(tc.census)}  "
                         f"closed form {format_ratfunc(tc.closed_form)}  "
                         f"{'ok' if tc.matches else 'MISMATCH'}")
    data = {"kind": args.complex, "horizon": horizon,
            "coefficients": coeffs, "record_count": len(records),
            "by_type": by_type}
    return lines, data, checks


def _cmd_oracle(args):
    matrix = _load(args.file)
    oracle = WordOracle(matrix)
    sizes = oracle.sphere_sizes(args.max_length)
    lines = [f"sphere sizes: {sizes}"]
    checks = []
    bad = []
    for w in oracle.ball(args.max_length):
        if not classify(matrix, oracle.descent_mask(w)).finite:
            bad.append(w)
    checks.append(_check("descent sets are spherical",
                         "pass" if not bad else "fail",
                         detail=None if not bad else f"{len(bad)} violations"))
    data = {"rank": matrix.rank, "horizon": args.max_length,
            "sphere_sizes": sizes, "cross_check": None}
    if args.cross_check:
        rep = cross_check_oracles(matrix, args.max_length, oracle)
        checks.append(_check("numeric representation agreement",
                             "pass" if rep.passed else "fail",
                             lhs=str(rep.symbolic_sizes), rhs=str(rep.numeric_sizes),
                             detail=f"{len(rep.descent_mismatches)} descent mismatches"))
        data["cross_check"] = {"numeric_sizes": rep.numeric_sizes,
                               "descent_mismatches": len(rep.descent_mismatches)}
        lines.append(f"numeric representation sizes: {rep.numeric_sizes}")
    return lines, data, checks


def _cmd_catalog(args):
    lines = []
    checks = []
    entries_data = []
    for entry in ENTRIES:
        lines.append(f"{entry.name:<16} rank {entry.matrix.rank}  {entry.description}")
        entries_data.append({"name": entry.name, "rank": entry.matrix.rank,
                             "description": entry.description})
    if args.self_test:
        for entry in ENTRIES:
            if entry.growth is not None:
                got = format_ratfunc(growth_table(entry.matrix).series())
                checks.append(_check(f"{entry.name}: growth series",
                                     "pass" if got == entry.growth else "fail",
                                     lhs=got, rhs=entry.growth))
            if entry.spheres is not None:
                horizon = len(entry.spheres) - 1
                got_spheres = tuple(WordOracle(entry.matrix).sphere_sizes(horizon))
                series = tuple(series_expand(growth_table(entry.matrix).series(), horizon))
                ok = got_spheres == entry.spheres and series == entry.spheres
                checks.append(_check(f"{entry.name}: sphere sizes",
                                     "pass" if ok else "fail",
                                     lhs=str(list(got_spheres)), rhs=str(list(entry.spheres))))
        lines.append(f"self-test: {sum(1 for c in checks if c['status'] == 'pass')}"
                     f"/{len(checks)} checks pass")
    return lines, {"entries": entries_data}, checks


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="coxgrowth",
        description="Exact growth series of Coxeter groups, with verification tooling.")
    parser.add_argument("--version", action="version", version=f"coxgrowth {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("growth", parents=[common],
                       help="growth series of a system as an exact rational function")
    p.add_argument("file", help="path to a .cox system file")
    p.add_argument("--series", type=int, metavar="N",
                   help="also print power-series coefficients up to degree N")
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("verify", parents=[common],
                       help="check the alternating-sum identities exactly")
    p.add_argument("file")
    p.add_argument("--identity", choices=["1", "2", "3", "4", "all"], default="all")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("chi", parents=[common],
                       help="nerve coefficients and link Euler characteristics")
    p.add_argument("file")
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("census", parents=[common],
                       help="simplex census and Euler-series of a chamber system")
    p.add_argument("file")
    p.add_argument("--complex", choices=list(KINDS), required=True)
    p.add_argument("--max-length", type=int, metavar="N",
                   help="census horizon (optional for finite groups)")
    p.add_argument("--by-type", action="store_true",
                   help="also print the per-type census lines")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("oracle", parents=[common],
                       help="brute-force sphere sizes by word enumeration")
    p.add_argument("file")
    p.add_argument("--max-length", type=int, required=True, metavar="N")
    p.add_argument("--cross-check", action="store_true",
                   help="also run the numeric reflection representation")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("catalog", parents=[common],
                       help="list built-in systems, optionally self-testing them")
    p.add_argument("--self-test", action="store_true")
    p.set_defaults(func=_cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    system = getattr(args, "file", None)
    try:
        lines, data, checks = args.func(args)
    except (CoxParseError, OracleHorizonError, InvariantViolation,
            ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    exit_status = 0 if all(c["status"] != "fail" for c in checks) else 1
    if args.json:
        doc = {
            "command": args.command,
            "system": system,
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "checks": checks,
            "data": data,
            "exit_status": exit_status,
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
        if checks:
            print(f"result: {'PASS' if exit_status == 0 else 'FAIL'}")
    return exit_status


if __name__ == "__main__":
    sys.exit(main())
