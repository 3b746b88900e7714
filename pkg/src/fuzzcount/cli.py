"""fuzzcount command line: count, oracle, verify, table."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import combinatorics
from .formulas import (
    count_fuzzy_subgroups,
    cyclic_profile,
    elementary_abelian_profile,
    formula_profile,
    single_prime_count,
    to_weak_equivalence_count,
)
from .groups import GroupSpec, parse_partition
from .oracle import DEFAULT_MAX_ORDER, OracleBoundError, build_lattice, count_chains

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_BOUND = 3

FAMILIES = ("ee-ee", "cyc-ee", "cyc-cyc")


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    oracle_agreement: bool | None = None
    elapsed_ms: int = 0

    def to_json(self):
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "oracle_agreement": self.oracle_agreement,
            "elapsed_ms": self.elapsed_ms,
        }
        return json.dumps(payload, indent=2) + "\n"


def _counts(values):
    return [str(v) for v in values]


def _spec_from_args(args):
    p_part = parse_partition(args.p_partition)
    if (args.q is None) != (args.q_partition is None):
        raise ValueError("--q and --q-partition must be given together")
    q_part = parse_partition(args.q_partition) if args.q_partition is not None else None
    return GroupSpec(args.p, p_part, args.q, q_part)


def _profile(part: GroupSpec, max_order):
    prof = formula_profile(part)
    if prof is not None:
        kind = "cyclic" if part.is_cyclic_p() else "elementary"
        return prof, f"formula:{kind}"
    return count_chains(build_lattice(part, max_order)).profile, "oracle"


def cmd_count(args):
    spec = _spec_from_args(args)
    report = RunReport("count", inputs={"group": spec.to_dict(), "equivalence": args.equivalence})
    prof_a, src_a = _profile(spec.p_part(), args.max_order)
    sources = {"A": src_a}
    if spec.two_prime:
        prof_b, src_b = _profile(spec.q_part(), args.max_order)
        sources["B"] = src_b
        n = count_fuzzy_subgroups(spec, prof_a, prof_b)
        report.results["profile_A"] = _counts(prof_a)
        report.results["profile_B"] = _counts(prof_b)
    else:
        n = single_prime_count(prof_a)
        report.results["profile_A"] = _counts(prof_a)
    report.inputs["profile_sources"] = sources
    report.results["n"] = str(n)
    if args.equivalence == "approx":
        report.results["n2"] = str(to_weak_equivalence_count(n))
    return report, EXIT_OK


def cmd_oracle(args):
    spec = _spec_from_args(args)
    lattice = build_lattice(spec, args.max_order)
    counts = count_chains(lattice)
    report = RunReport("oracle", inputs={"group": spec.to_dict(), "max_order": args.max_order})
    report.results = {
        "subgroups": str(len(lattice)),
        "n": str(counts.n),
        "h": str(counts.h),
        "profile": _counts(counts.profile),
    }
    if spec.two_prime:
        parts = [count_chains(build_lattice(x, args.max_order)).profile for x in (spec.p_part(), spec.q_part())]
        formula_n = count_fuzzy_subgroups(spec, *parts)
    else:
        prof = formula_profile(spec)
        formula_n = single_prime_count(prof) if prof is not None else 2 * counts.h
    report.results["formula_n"] = str(formula_n)
    report.oracle_agreement = formula_n == counts.n and counts.n == 2 * counts.h
    if args.dump:
        lattice.dump(args.dump)
        report.inputs["dump"] = args.dump
    code = EXIT_OK if report.oracle_agreement else EXIT_MISMATCH
    return report, code


def cmd_verify(args):
    from .checks import run_battery

    groups, checks = run_battery(
        max_order=args.max_order,
        max_ij=args.max_ij,
        chain_order=args.chain_order,
        sabotage=args.sabotage,
    )
    report = RunReport(
        "verify",
        inputs={"max_order": args.max_order, "max_ij": args.max_ij, "chain_order": args.chain_order},
    )
    report.results = {
        "groups": str(len(groups)),
        "group_list": [g.label() for g in groups],
        "checks": [c.to_dict() for c in checks],
    }
    ok = all(c.passed for c in checks)
    report.oracle_agreement = ok
    for c in checks:
        for detail in c.failures:
            print(f"MISMATCH [{c.name}] {detail}", file=sys.stderr)
    return report, EXIT_OK if ok else EXIT_MISMATCH


def _family_profiles(family, p, q, n, m):
    a_kind, b_kind = family.split("-")
    pa = cyclic_profile(n) if a_kind == "cyc" else elementary_abelian_profile(n, p)
    pb = cyclic_profile(m) if b_kind == "cyc" else elementary_abelian_profile(m, q)
    return pa, pb


def table_grid(family, p, q, n_max, m_max):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose one of {', '.join(FAMILIES)}")
    if n_max < 1 or m_max < 1:
        raise ValueError("--n-max and --m-max must be >= 1")
    # validates p, q
    GroupSpec(p, (1,), q, (1,))
    grid = []
    for n in range(1, n_max + 1):
        row = []
        for m in range(1, m_max + 1):
            pa, pb = _family_profiles(family, p, q, n, m)
            row.append(count_fuzzy_subgroups(None, pa, pb))
        grid.append(row)
    return grid


def render_table(grid, fmt, family, p, q):
    if fmt == "json":
        payload = {
            "family": family,
            "p": p,
            "q": q,
            "n_max": len(grid),
            "m_max": len(grid[0]),
            "rows": [{"n": n, "counts": _counts(row)} for n, row in enumerate(grid, start=1)],
        }
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n\\m"] + list(range(1, len(grid[0]) + 1)))
    for n, row in enumerate(grid, start=1):
        writer.writerow([n] + row)
    return buf.getvalue()


def cmd_table(args):
    grid = table_grid(args.family, args.p, args.q, args.n_max, args.m_max)
    text = render_table(grid, args.format, args.family, args.p, args.q)
    report = RunReport(
        "table",
        inputs={
            "family": args.family,
            "p": args.p,
            "q": args.q,
            "n_max": args.n_max,
            "m_max": args.m_max,
            "format": args.format,
        },
    )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        report.inputs["out"] = args.out
        report.results = {"cells": str(args.n_max * args.m_max)}
    else:
        report.results = {"table": text}
    return report, EXIT_OK


def _add_group_args(sp):
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--p-partition", required=True, help="cyclic factor exponents, e.g. 2,1")
    sp.add_argument("--q", type=int)
    sp.add_argument("--q-partition")
    sp.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, help="oracle bound on |G|")


def build_parser():
    timing = argparse.ArgumentParser(add_help=False)
    timing.add_argument(
        "--no-timing", action="store_true", default=argparse.SUPPRESS,
        help="report elapsed_ms as 0 (reproducible output)",
    )
    parser = argparse.ArgumentParser(prog="fuzzcount", description=__doc__, parents=[timing])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("count", parents=[timing], help="n(G) from the closed formulas")
    _add_group_args(sp)
    sp.add_argument("--equivalence", choices=("tilde", "approx"), default="tilde")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("oracle", parents=[timing], help="brute-force chain counts from the subgroup lattice")
    _add_group_args(sp)
    sp.add_argument("--dump", help="write the lattice as JSON to this path")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", parents=[timing], help="run the formula/oracle cross-check battery")
    sp.add_argument("--max-order", type=int, default=200)
    sp.add_argument("--max-ij", type=int, default=6)
    sp.add_argument("--chain-order", type=int, default=100, help="order bound for chain-enumerating checks")
    sp.add_argument("--sabotage", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", parents=[timing], help="n(G) grid for one of the closed-form families")
    sp.add_argument("--family", required=True, help="ee-ee, cyc-ee or cyc-cyc")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--m-max", type=int, required=True)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_table)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = os.environ.get("FUZZCOUNT_CACHE_DIR")
    if cache_dir:
        combinatorics.load_cache(cache_dir)
    start = time.perf_counter()
    try:
        report, code = args.func(args)
    except OracleBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report.elapsed_ms = 0 if getattr(args, "no_timing", False) else int((time.perf_counter() - start) * 1000)
    if args.command == "table" and not args.out:
        sys.stdout.write(report.results["table"])
    else:
        sys.stdout.write(report.to_json())
    if cache_dir:
        combinatorics.save_cache(cache_dir)
    return code


if __name__ == "__main__":
    sys.exit(main())
