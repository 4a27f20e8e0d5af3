"""Command-line front end: ``mcgdim vcd|table|verify|catalog``."""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import catalog, tables, verifier
from .dimensions import ExternalResultError, gd_mcg, vcd_mcg, vcd_spherical_braid

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def cmd_vcd(args) -> int:
    g, n = args.genus, args.punctures
    if args.braid:
        if g != 0:
            raise UsageError("--braid needs genus 0")
        print(vcd_spherical_braid(n))
    elif args.gd:
        print(gd_mcg(g, n, allow_external=args.allow_external))
    else:
        print(vcd_mcg(g, n))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.appendix == "A":
        if args.n is None:
            raise UsageError("table A needs --n")
        rows = tables.appendix_a(args.n, published_order=args.paper_order)
        notes = tables.notes_a(args.n)
        out = tables.render_a(rows, args.format, notes)
    else:
        rows = tables.appendix_b()
        notes = tables.notes_b()
        out = tables.render_b(rows, args.format, args.n, notes)
    sys.stdout.write(out)
    if args.format != "markdown":
        for text in notes:
            print(f"note: {text}", file=sys.stderr)
    return EXIT_OK


_CSV_FIELDS = ["ambient", "group_label", "order", "signature", "n_F", "vcd_WF", "lambda_F", "sum", "budget", "status"]


def _write_records(records, out_path, csv_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            for r in records:
                fh.write(json.dumps(r.to_json()) + "\n")
    if csv_path:
        key = lambda r: (r.ambient.genus, r.ambient.punctures, r.group_label, r.order, r.signature, r.n_F or -1)  # noqa: E731
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(_CSV_FIELDS)
            for r in sorted(records, key=key):
                row = r.to_json()
                row["ambient"] = str(r.ambient)
                w.writerow(["" if row[f] is None else row[f] for f in _CSV_FIELDS])


def cmd_verify(args) -> int:
    try:
        ns = verifier.parse_range(args.range)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = args.genus
    bad = 0
    if args.branches:
        for rep in verifier.verify_branch_genus0(max(ns[-1], 14), jobs=args.jobs):
            print(f"branch {rep.branch_id}: n >= {rep.threshold} on {rep.range_checked}: "
                  f"{'holds' if rep.holds else 'FAILS'}; just below: {rep.boundary_witness}")
            bad += not rep.holds
    if g >= 3:
        if ns[0] < 1:
            raise UsageError("n must be >= 1")
        rep = verifier.verify_genus_ge3(g, ns[-1], g_min=g, n_min=ns[0])
        print(f"genus {g}, n in {ns[0]}..{ns[-1]}: {'holds' if rep.holds else 'FAILS'} ({rep.note})")
        return EXIT_OK if rep.holds and not bad else EXIT_FAIL
    outside = [n for n in ns if not verifier.in_theorem_range(g, n)]
    if outside and not args.report_mode:
        raise UsageError(f"n={outside} outside the theorem range for genus {g}; use --report-mode")
    records = verifier.verify_many([(g, n) for n in ns], report_mode=True, jobs=args.jobs)
    try:
        _write_records(records, args.out, args.csv)
    except OSError as exc:
        print(f"error: cannot write {exc.filename}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    for r in verifier.failures(records):
        print(f"FAIL {r.ambient} {r.group_label} {r.signature} n_F={r.n_F}: "
              f"{r.vcd_WF}+{r.lambda_F}={r.sum} > {r.budget}")
    unreal = [r for r in records if r.status == "unrealizable"]
    if unreal:
        first = unreal[0]
        print(f"{len(unreal)} unrealizable records (no invariant set of n punctures), "
              f"first: {first.ambient} {first.group_label} {first.signature}")
    in_range_fail = [r for r in verifier.failures(records)
                     if verifier.in_theorem_range(r.ambient.genus, r.ambient.punctures)]
    print(f"{len(records)} records, {len(verifier.failures(records))} failing, "
          f"{len(in_range_fail)} inside the theorem range")
    return EXIT_FAIL if in_range_fail or bad else EXIT_OK


def cmd_catalog(args) -> int:
    g, n = args.genus, args.n
    if g == 0:
        entries = catalog.subgroups_genus0(n if n is not None else 12)
    elif g == 1:
        entries = catalog.families_genus1(n if n is not None else 1)
    elif g == 2:
        entries = catalog.broughton_genus2(n or 0)
    else:
        raise UsageError("catalogs exist for genus 0, 1 and 2")
    json.dump([e.to_json() for e in entries], sys.stdout, indent=2)
    print()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcgdim", description="Dimensions of punctured mapping class groups.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("vcd", help="virtual cohomological dimension of Mod_g^n")
    v.add_argument("genus", type=_nonneg)
    v.add_argument("punctures", type=_nonneg)
    v.add_argument("--gd", action="store_true", help="print the proper geometric dimension")
    v.add_argument("--braid", action="store_true", help="vcd of the spherical braid group (genus 0)")
    v.add_argument("--allow-external", action="store_true", help="accept cited values for closed surfaces")
    v.set_defaults(func=cmd_vcd)

    t = sub.add_parser("table", help="regenerate an appendix table")
    t.add_argument("appendix", choices=["A", "B"])
    t.add_argument("--n", type=_nonneg)
    t.add_argument("--format", choices=tables.FORMATS, default="markdown")
    t.add_argument("--paper-order", action="store_true", help="published row layout instead of the canonical sort")
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("verify", help="check vcd(WF) + lambda(F) <= vcd(Mod_g^n) over a range of n")
    r.add_argument("genus", type=_nonneg)
    r.add_argument("range", help="a..b or a single n")
    r.add_argument("--branches", action="store_true", help="also check the large-n genus-0 inequalities")
    r.add_argument("--report-mode", action="store_true", help="allow n outside the theorem range")
    r.add_argument("--jobs", type=int, default=1)
    r.add_argument("--out", help="JSON-lines output file")
    r.add_argument("--csv", help="sorted CSV output file")
    r.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalog", help="dump a finite-subgroup catalog as JSON")
    c.add_argument("genus", type=_nonneg)
    c.add_argument("--n", type=_nonneg)
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, tables.OutOfTableRange, ExternalResultError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
