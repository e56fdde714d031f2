"""Command-line interface: ``dnarayana {count,table,enumerate,convert,verify,bfile}``."""

from __future__ import annotations

import argparse
import json
import sys

from ._combinat import GuardExceeded
from .families import FAMILIES, get_family, natural_cells, route
from .numbers import catalan, lagrange_narayana, narayana, series_narayana

METHODS = ("formula", "series", "lagrange")


class UsageError(Exception):
    pass


def _row(d, n, method):
    if method == "formula":
        return [narayana(d, n, k) for k in range(n + 1)]
    if method == "series":
        return series_narayana(d, n).row(n)
    return [lagrange_narayana(d, n, k) for k in range(n + 1)]


def cmd_count(args, out):
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    row = _row(args.d, args.n, args.method)
    if args.k is None:
        print(" ".join(map(str, row)), file=out)
    elif 0 <= args.k <= args.n:
        print(row[args.k], file=out)
    elif args.k > args.n:
        print(0, file=out)
    else:
        raise UsageError("--k must be nonnegative")
    return 0


def _grid(corner, col_labels, rows):
    """Right-aligned text grid; ``rows`` are (label, values) with ragged values."""
    cells = [str(x) for _, vals in rows for x in vals] + [str(c) for c in col_labels]
    width = max(len(c) for c in cells)
    first = max([len(corner)] + [len(str(lab)) for lab, _ in rows])
    lines = [" ".join([corner.ljust(first)] + [str(c).rjust(width) for c in col_labels])]
    for lab, vals in rows:
        lines.append(" ".join([str(lab).ljust(first)] + [str(v).rjust(width) for v in vals]))
    return "\n".join(line.rstrip() for line in lines)


def narayana_table(d, n_max):
    rows = [(n, [narayana(d, n, k) for k in range(n + 1)]) for n in range(n_max + 1)]
    return _grid("n\\k", list(range(n_max + 1)), rows)


def catalan_table(ds, n_max):
    rows = [(d, [catalan(d, n) for n in range(n_max + 1)]) for d in ds]
    return _grid("d\\n", list(range(n_max + 1)), rows)


def cmd_table(args, out):
    ds = args.d
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    if args.format == "text":
        if args.catalan:
            print(catalan_table(ds, args.n_max), file=out)
        else:
            blocks = [narayana_table(d, args.n_max) if len(ds) == 1
                      else f"d = {d}\n" + narayana_table(d, args.n_max) for d in ds]
            print("\n\n".join(blocks), file=out)
    elif args.format == "csv":
        if args.catalan:
            print("d,n,value", file=out)
            for d in ds:
                for n in range(args.n_max + 1):
                    print(f"{d},{n},{catalan(d, n)}", file=out)
        else:
            print("d,n,k,value", file=out)
            for d in ds:
                for n in range(args.n_max + 1):
                    for k in range(n + 1):
                        print(f"{d},{n},{k},{narayana(d, n, k)}", file=out)
    else:
        if args.catalan:
            data = {str(d): [catalan(d, n) for n in range(args.n_max + 1)] for d in ds}
        else:
            data = {str(d): [[narayana(d, n, k) for k in range(n + 1)]
                             for n in range(args.n_max + 1)] for d in ds}
        print(json.dumps(data), file=out)
    return 0


def cmd_enumerate(args, out):
    fam = get_family(args.family)
    d = args.d
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.k is not None:
        if not 0 <= args.k <= args.n:
            raise UsageError("need 0 <= --k <= --n")
        cells = [(args.n, args.k)]
    else:
        cells = natural_cells(d, fam.name, args.n)
    objs = []
    for n, k in cells:
        objs.extend(fam.enumerate(d, n, k, args.limit))
    for o in objs:
        if args.format == "jsonl":
            print(json.dumps(fam.to_json(o)), file=out)
        else:
            print(fam.format(o, d), file=out)
    return 0


def cmd_convert(args, out, inp, err):
    src = get_family(args.src)
    dst = get_family(args.dst)
    steps = route(src.name, dst.name)
    if args.verbose:
        chain = " -> ".join([src.name] + [label for label, _ in steps])
        print(f"route: {chain} -> {dst.name}" if steps else f"route: {src.name} (identity)",
              file=err)
    status = 0
    for line in inp:
        text = line.rstrip("\n")
        if not text.strip() and src.name not in ("lschroder", "fpaths"):
            continue
        try:
            obj = src.parse(text, args.d)
            if not src.member(obj, args.d):
                raise ValueError(f"{text!r} is not in {src.symbol} for d={args.d}")
            for _, fn in steps:
                obj = fn(obj, args.d)
        except (ValueError, SyntaxError) as exc:
            print(f"error: {exc}", file=err)
            status = 2
            continue
        print(dst.format(obj, args.d), file=out)
    return status


def cmd_verify(args, out):
    from .verify import verify_bijections, verify_counts, verify_identities

    d_range = list(range(2, (args.d_max or 5) + 1))
    report = None
    suites = ["counts", "bijections", "identities"] if args.suite == "all" else [args.suite]
    for suite in suites:
        if suite == "counts":
            part = verify_counts(d_range, args.n_max)
        elif suite == "bijections":
            part = verify_bijections(d_range, args.n_max)
        else:
            part = verify_identities(d_max=max(6, args.d_max or 6))
        if report is None:
            report = part
        else:
            report.extend(part)
    if args.jsonl:
        with open(args.jsonl, "w") as fh:
            fh.write(report.to_jsonl())
    print(report.summary_table(), file=out)
    return 0 if report.ok else 1


def cmd_bfile(args, out):
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    idx = args.offset
    for n in range(args.n_max + 1):
        values = [narayana(args.d, n, k) for k in range(n + 1)] if args.narayana \
            else [catalan(args.d, n)]
        for v in values:
            print(f"{idx} {v}", file=out)
            idx += 1
    return 0


def _arity(text):
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid arity {text!r}") from None
    if d < 2:
        raise argparse.ArgumentTypeError("arity must be at least 2")
    return d


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dnarayana",
        description="Generalized Narayana numbers, their combinatorial families and bijections.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="N_d(n,k), or the whole row n")
    c.add_argument("--d", type=_arity, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--method", choices=METHODS, default="formula")

    t = sub.add_parser("table", help="grid of N_d(n,k), or of C_d(n) with --catalan")
    t.add_argument("--d", type=_arity, nargs="+", required=True)
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--catalan", action="store_true")
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")

    e = sub.add_parser("enumerate", help="list a family's members, one per line")
    e.add_argument("--family", choices=list(FAMILIES), required=True)
    e.add_argument("--d", type=_arity, required=True)
    e.add_argument("--n", type=int, required=True,
                   help="with --k: the (n,k) of N_d(n,k); alone: the family's natural size")
    e.add_argument("--k", type=int)
    e.add_argument("--format", choices=("text", "jsonl"), default="text")
    e.add_argument("--limit", type=int, default=10**6, help="abort above this many objects")

    v = sub.add_parser("convert", help="map objects read on stdin between families")
    v.add_argument("--from", dest="src", choices=list(FAMILIES), required=True)
    v.add_argument("--to", dest="dst", choices=list(FAMILIES), required=True)
    v.add_argument("--d", type=_arity, required=True)
    v.add_argument("--verbose", action="store_true", help="print the chain of maps to stderr")

    r = sub.add_parser("verify", help="run the exhaustive verification sweeps")
    r.add_argument("--suite", choices=("counts", "bijections", "identities", "all"), default="all")
    r.add_argument("--d-max", type=_arity)
    r.add_argument("--n-max", type=int)
    r.add_argument("--jsonl", metavar="PATH", help="also write the per-cell report here")

    b = sub.add_parser("bfile", help="b-file lines 'index value' for C_d(n) or flattened N_d")
    b.add_argument("--d", type=_arity, required=True)
    b.add_argument("--n-max", type=int, required=True)
    b.add_argument("--narayana", action="store_true", help="flatten rows of N_d(n,k) instead")
    b.add_argument("--offset", type=int, default=0)
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "count":
            return cmd_count(args, out)
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "convert":
            return cmd_convert(args, out, stdin or sys.stdin, err)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_bfile(args, out)
    except (UsageError, ValueError, GuardExceeded) as exc:
        print(f"error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
