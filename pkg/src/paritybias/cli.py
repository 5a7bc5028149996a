"""Command-line front door for the whole laboratory.

Subcommands: expand (series coefficients), oracle (counting-side values),
verify (one theorem verdict), identities (the substitution catalog),
scan (observational bias tables, no verdict), report (everything at once).

Exit codes: 0 when all checked claims hold, 1 when at least one point is
violated, 2 on usage errors or series/oracle tier disagreement.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from . import oracle
from .families import FAMILY_IDS, build_series
from .identities import check_identity, substitution_checks
from .inequalities import (
    THEOREM_IDS,
    TheoremSpec,
    TierDisagreement,
    family_oracle_counts,
    verify_theorem,
)
from .oracle import BiasSpec, ConstraintSpec
from .report import identity_record, run_all_checks, theorem_record

__all__ = ["main", "build_parser"]


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _coefficient_table(values, fmt: str, meta: dict) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "coefficient"])
        for n, v in enumerate(values):
            writer.writerow([n, v])
        return buf.getvalue()
    if fmt == "json":
        payload = dict(meta)
        payload["coefficients"] = [str(v) for v in values]
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"{n:6d}  {v}" for n, v in enumerate(values)]
    return "\n".join(lines) + "\n"


def cmd_expand(args: argparse.Namespace) -> int:
    series = build_series(args.family, args.order, args.m)
    meta = {"family": args.family, "m": args.m, "order": args.order}
    _emit(_coefficient_table(series.coeffs, args.format, meta), args.out)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    tier = "dp" if args.tier == "auto" else args.tier
    counts = family_oracle_counts(args.family, args.max_n, m=args.m, tier=tier)
    meta = {"family": args.family, "m": args.m, "max_n": args.max_n, "tier": tier}
    _emit(_coefficient_table(counts, args.format, meta), args.out)
    return 0


def _verify_text(spec: TheoremSpec, rep) -> str:
    lines = [f"theorem {spec.id}" + (f" (m={spec.m})" if spec.m is not None else "")]
    lines.append(
        f"claim: {rep.lhs_id} {rep.relation} {rep.rhs_id} for n in [{rep.lo}, {rep.hi}]"
    )
    cross = "yes" if rep.confirmed else "no"
    lines.append(
        f"tiers: lhs={','.join(rep.sources[0])} rhs={','.join(rep.sources[1])}"
        f" cross-checked={cross}"
    )
    if rep.vacuous:
        lines.append("range is empty; vacuously true")
    if rep.violations:
        lines.append(f"violations ({len(rep.violations)}):")
        for n, left, right in rep.violations:
            lines.append(f"  n={n}: {left} vs {right}")
    if rep.threshold is not None:
        lines.append(f"threshold: {rep.threshold}")
    lines.append("HOLDS" if rep.holds else "VIOLATED")
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    spec = TheoremSpec(args.theorem, args.m)
    # a max_n below the claimed start means the user wants to scan under it
    lo = 0 if args.max_n < spec.claimed_range_lo else None
    t0 = time.perf_counter()
    rep = verify_theorem(spec, args.max_n, lo=lo)
    elapsed = int((time.perf_counter() - t0) * 1000)
    if args.format == "json":
        record = theorem_record(spec.id, spec.m, rep, elapsed)
        text = json.dumps(record, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "lhs", "rhs"])
        for n, left, right in rep.violations:
            writer.writerow([n, left, right])
        text = buf.getvalue()
    else:
        text = _verify_text(spec, rep)
    _emit(text, args.out)
    return 0 if rep.holds else 1


def cmd_identities(args: argparse.Namespace) -> int:
    results = []
    for chk in substitution_checks(args.order):
        t0 = time.perf_counter()
        res = check_identity(chk)
        results.append((res, int((time.perf_counter() - t0) * 1000)))
    ok = all(res.passed for res, _ in results)
    if args.format == "json":
        records = [identity_record(res, ms) for res, ms in results]
        text = json.dumps({"order": args.order, "records": records}, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "label", "passed", "first_mismatch"])
        for res, _ in results:
            writer.writerow(
                [res.identity, res.label, res.passed, res.first_mismatch]
            )
        text = buf.getvalue()
    else:
        lines = []
        for res, _ in results:
            mark = "PASS" if res.passed else "FAIL"
            extra = "" if res.passed else f"  (first mismatch at q^{res.first_mismatch})"
            lines.append(f"{mark}  {res.identity:28s} {res.label}{extra}")
        lines.append(
            f"{sum(1 for r, _ in results if r.passed)}/{len(results)} substitutions "
            f"verified to order {args.order}"
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if ok else 1


def cmd_scan(args: argparse.Namespace) -> int:
    bias = BiasSpec(args.j, args.k, args.m)
    cons = ConstraintSpec(min_part=args.min_part)
    more_j, more_k, tied = oracle.bias_breakdown_dp(cons, bias, args.max_n)
    rows = []
    for n in range(args.max_n + 1):
        if more_j[n] > more_k[n]:
            lead = "j"
        elif more_k[n] > more_j[n]:
            lead = "k"
        else:
            lead = "tie"
        rows.append((n, more_j[n], more_k[n], tied[n], lead))
    if args.format == "json":
        payload = {
            "j": args.j,
            "k": args.k,
            "m": args.m,
            "min_part": args.min_part,
            "max_n": args.max_n,
            "rows": [[n, str(a), str(b), str(t), lead] for n, a, b, t, lead in rows],
        }
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "more_j", "more_k", "tied", "lead"])
        for row in rows:
            writer.writerow(row)
        text = buf.getvalue()
    else:
        lines = [
            f"parts = {args.j} (mod {args.m}) vs = {args.k} (mod {args.m}), "
            f"min part {args.min_part}",
            f"{'n':>6}  {'more_j':>12}  {'more_k':>12}  {'tied':>12}  lead",
        ]
        for n, a, b, t, lead in rows:
            lines.append(f"{n:6d}  {a:12d}  {b:12d}  {t:12d}  {lead}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0  # observational: no verdict, no failure exit


def cmd_report(args: argparse.Namespace) -> int:
    if not args.all:
        print("error: report requires --all", file=sys.stderr)
        return 2
    if args.format == "csv":
        print("error: report supports text or json output", file=sys.stderr)
        return 2
    rep = run_all_checks(max_n=args.max_n, order=args.order)
    if args.format == "text":
        lines = []
        for rec in rep.records:
            params = "".join(f" {k}={v}" for k, v in rec.get("params", {}).items())
            lo, hi = rec["range"]
            status = "ok " if rec["holds"] else "BAD"
            note = " (vacuous)" if rec.get("vacuous") else ""
            lines.append(f"{status} {rec['id']}{params} range [{lo}, {hi}]{note}")
        bad = sum(1 for rec in rep.records if not rec["holds"])
        lines.append(
            "all claims hold" if rep.holds_all else f"{bad} record(s) violated"
        )
        text = "\n".join(lines) + "\n"
    else:
        text = rep.to_json()
    _emit(text, args.out)
    return 0 if rep.holds_all else 1


def _add_format(parser: argparse.ArgumentParser, default: str = "text") -> None:
    parser.add_argument(
        "--format", choices=("text", "csv", "json"), default=default,
        help=f"output format (default {default})",
    )
    parser.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paritybias",
        description="exact q-series laboratory for parity bias in partitions",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("expand", help="series coefficients of a cataloged family")
    p.add_argument("family", choices=FAMILY_IDS, metavar="FAMILY")
    p.add_argument("--m", type=int, default=None, help="family parameter")
    p.add_argument("--order", type=int, default=200, help="truncation order (default 200)")
    _add_format(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("oracle", help="counting-side values of a family")
    p.add_argument("family", choices=FAMILY_IDS, metavar="FAMILY")
    p.add_argument("--m", type=int, default=None, help="family parameter")
    p.add_argument("--max-n", type=int, default=200, help="largest n (default 200)")
    p.add_argument(
        "--tier", choices=("auto", "dp", "enum"), default="auto",
        help="counting route; auto picks the packed table",
    )
    _add_format(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="verdict for one cataloged theorem")
    p.add_argument("theorem", choices=THEOREM_IDS, metavar="THEOREM")
    p.add_argument("--m", type=int, default=None, help="theorem parameter")
    p.add_argument("--max-n", type=int, default=200, help="largest n (default 200)")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identities", help="run the substitution catalog")
    p.add_argument("--order", type=int, default=200, help="truncation order (default 200)")
    _add_format(p)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("scan", help="observational residue-bias table, no verdict")
    p.add_argument("--j", type=int, required=True, help="favored residue class")
    p.add_argument("--k", type=int, required=True, help="compared residue class")
    p.add_argument("--m", type=int, required=True, help="modulus (at least 2)")
    p.add_argument(
        "--min-part", type=int, default=2,
        help="smallest allowed part (default 2, the non-unitary case)",
    )
    p.add_argument("--max-n", type=int, default=200, help="largest n (default 200)")
    _add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("report", help="run every check and emit one report")
    p.add_argument("--all", action="store_true", help="run the full catalog")
    p.add_argument("--max-n", type=int, default=200, help="largest n (default 200)")
    p.add_argument("--order", type=int, default=200, help="truncation order (default 200)")
    _add_format(p, default="json")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on --help and usage errors
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except TierDisagreement as exc:
        print(f"tier disagreement: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
