"""Command-line front end: ``knotsig {sig,bounds,sum,scan}``.

A knot is given as a matrix literal, a file holding one, or ``NAME@TABLE``
where TABLE is a CSV path (``fixtures`` names the bundled table when no
such file exists).

Exit codes: 0 success, 2 bad input, 3 internal invariant violation.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .bounds import BoundsError, TSV_HEADER, bounds_report
from .realalg import approx_decimal
from .seifert import SeifertMatrixError, connected_sum, mirror, parse_matrix, power, validate
from .signature import PointError, samples, signature_function, theta_over_pi, to_tsv
from .table import (KNOTINFO, ScanCriteria, TableError, find_record, fixture_path,
                    parse_table, scan)

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


class InputError(Exception):
    pass


@dataclass(frozen=True)
class Resolved:
    name: str
    matrix: object
    metadata: dict = None


def _load_table(path):
    p = Path(path)
    if not p.exists() and p.stem == "fixtures":
        p = Path(str(fixture_path()))
    if not p.is_file():
        raise InputError(f"table not found: {path}")
    diags = []
    try:
        return parse_table(p, KNOTINFO, diags)
    except TableError as exc:
        raise InputError(f"{path}: {exc}") from None


def resolve(spec):
    """Turn a KnotSpec string into a named, validated matrix."""
    spec = spec.strip()
    try:
        if spec[:1] in "[{":
            return Resolved(spec, validate(parse_matrix(spec)))
        if "@" in spec:
            name, table = spec.rsplit("@", 1)
            try:
                rec = find_record(_load_table(table), name)
            except KeyError:
                raise InputError(f"no knot named {name!r} in {table}") from None
            return Resolved(rec.name, rec.seifert, rec.metadata)
        p = Path(spec)
        if not p.is_file():
            raise InputError(f"not a matrix literal, file or NAME@TABLE: {spec}")
        return Resolved(p.stem, validate(parse_matrix(p.read_text(encoding="utf-8"))))
    except SeifertMatrixError as exc:
        raise InputError(f"{spec}: {exc}") from None


def _mirrored(k):
    return Resolved(f"mirror({k.name})", mirror(k.matrix), k.metadata)


def _emit(text):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _sig_text(f):
    lines = [f"n = {f.n}"]
    for i, (x, v) in enumerate(zip(f.jumps, f.point_values)):
        lines.append(f"jump {i}: x ~ {approx_decimal(x)}  theta/pi ~ {theta_over_pi(x)}  "
                     f"sigma = {v.sigma}  nullity = {v.nullity}  minpoly {list(x.min_poly)}")
    lines.append("arc values (ascending x): " + " ".join(str(a) for a in f.arc_values))
    return "\n".join(lines)


def cmd_sig(args):
    k = resolve(args.knot)
    if args.mirror:
        k = _mirrored(k)
    f = signature_function(k.matrix)
    if args.json:
        doc = f.to_dict()
        if args.samples:
            doc["samples"] = [{"theta_over_pi": str(t), "sigma": s}
                              for t, s in samples(f, args.samples)]
        _emit(json.dumps(doc, indent=2))
    elif args.tsv:
        _emit(to_tsv(f, args.samples))
    else:
        out = _sig_text(f)
        if args.samples:
            out += "\n" + "\n".join(f"{float(t):.12g}\t{s}" for t, s in samples(f, args.samples))
        _emit(out)


def _report_out(rep, args):
    if args.json:
        _emit(rep.to_json())
    elif args.tsv:
        _emit(TSV_HEADER + "\n" + rep.tsv_line())
    else:
        f = rep.function
        lines = [f"knot: {rep.name}",
                 f"gds_lower = {rep.gds_lower}   [{rep.gds_witness.describe(f)}]",
                 f"g4_lower  = {rep.g4_lower}   [{rep.g4_witness.describe(f)}]"]
        if rep.metadata:
            lines.append("table: " + ", ".join(f"{k}={v}" for k, v in rep.metadata.items()))
            for key, v in rep.to_dict()["verdicts"].items():
                lines.append(f"  {key}: {v}")
        _emit("\n".join(lines))


def cmd_bounds(args):
    k = resolve(args.knot)
    if args.mirror:
        k = _mirrored(k)
    _report_out(bounds_report(k.matrix, k.metadata, k.name), args)


def parse_sum_terms(tokens):
    """Split ``[--mirror] [--copies K] KNOT ...`` into (spec, mirror, copies) triples.

    Flags apply to the next knot only.
    """
    terms = []
    mir, copies = False, 1
    it = iter(tokens)
    for tok in it:
        if tok == "--mirror":
            mir = True
        elif tok == "--copies" or tok.startswith("--copies="):
            val = tok.partition("=")[2] if "=" in tok else next(it, None)
            try:
                copies = int(val)
            except (TypeError, ValueError):
                raise InputError(f"--copies needs a nonnegative integer, got {val!r}") from None
            if copies < 0:
                raise InputError(f"--copies needs a nonnegative integer, got {copies}")
        elif tok.startswith("--"):
            raise InputError(f"unknown option {tok}")
        else:
            terms.append((tok, mir, copies))
            mir, copies = False, 1
    if mir or copies != 1:
        raise InputError("--mirror/--copies given after the last knot")
    if not terms:
        raise InputError("sum needs at least one knot")
    return terms


def cmd_sum(args):
    blocks, names = [], []
    for spec, mir, copies in parse_sum_terms(args.terms):
        k = resolve(spec)
        if mir:
            k = _mirrored(k)
        blocks.append(power(k.matrix, copies))
        names.append(k.name if copies == 1 else f"{copies}*{k.name}")
    V = connected_sum(*blocks)
    _report_out(bounds_report(V, None, " # ".join(names)), args)


def _hit_dict(h):
    if h.error:
        return {"name": h.name, "error": h.error}
    f = h.report.function
    return {
        "name": h.name,
        "gds_lower": h.report.gds_lower,
        "g4_lower": h.report.g4_lower,
        "root_evidence": [
            {"jump": i, "min_poly": list(f.jumps[i].min_poly),
             "x_approx": approx_decimal(f.jumps[i]), "theta_over_pi_approx": theta_over_pi(f.jumps[i]),
             "sigma": v.sigma, "nullity": v.nullity}
            for i, v in h.root_evidence
        ],
    }


def cmd_scan(args):
    records = _load_table(args.table)
    crit = ScanCriteria(args.max_crossings, args.slice_only, args.min_root_sig)
    hits = scan(records, crit, args.jobs)
    docs = [_hit_dict(h) for h in hits]
    if args.json:
        _emit(json.dumps(docs, indent=2))
        return
    lines = ["name\tgds_lower\tg4_lower\troot_evidence"] if args.tsv else []
    for d in docs:
        if "error" in d:
            lines.append(f"{d['name']}\tERROR\t{d['error']}")
            continue
        ev = ";".join(f"x~{e['x_approx']}:sigma={e['sigma']}" for e in d["root_evidence"]) or "-"
        if args.tsv:
            lines.append(f"{d['name']}\t{d['gds_lower']}\t{d['g4_lower']}\t{ev}")
        else:
            lines.append(f"{d['name']}  gds_lower={d['gds_lower']} g4_lower={d['g4_lower']}  {ev}")
    if not args.tsv:
        lines.append(f"{len(docs)} knot(s)")
    _emit("\n".join(lines))


def _output_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON output")
    g.add_argument("--tsv", action="store_true", help="tab-separated output")


def build_parser():
    p = argparse.ArgumentParser(prog="knotsig", description="Exact Tristram-Levine signatures and genus bounds.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("sig", help="signature function of a knot")
    s.add_argument("knot")
    s.add_argument("--mirror", action="store_true")
    s.add_argument("--samples", type=int, default=0, metavar="N", help="also emit N (theta/pi, sigma) samples")
    _output_flags(s)
    s.set_defaults(func=cmd_sig)

    b = sub.add_parser("bounds", help="doubly slice and slice genus lower bounds")
    b.add_argument("knot")
    b.add_argument("--mirror", action="store_true")
    _output_flags(b)
    b.set_defaults(func=cmd_bounds)

    m = sub.add_parser("sum", help="bounds for a connected sum",
                       usage="knotsig sum [--json|--tsv] ([--mirror] [--copies K] KNOT)...")
    _output_flags(m)
    m.set_defaults(func=cmd_sum)

    c = sub.add_parser("scan", help="scan a knot table")
    c.add_argument("table")
    c.add_argument("--max-crossings", type=int)
    c.add_argument("--slice-only", action="store_true")
    c.add_argument("--min-root-sig", type=int)
    c.add_argument("--jobs", type=int, default=1)
    _output_flags(c)
    c.set_defaults(func=cmd_scan)
    return p


def main(argv=None):
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if args.cmd == "sum":
        args.terms = extra
    elif extra:
        parser.error("unrecognized arguments: " + " ".join(extra))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s: %(message)s")
    try:
        args.func(args)
    except (InputError, PointError) as exc:
        print(f"knotsig: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AssertionError, BoundsError) as exc:
        print(f"knotsig: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
