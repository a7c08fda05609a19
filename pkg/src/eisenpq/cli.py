"""Command-line interface: ``eisenpq {table,verify,winding,report}``.

Exit status: 0 success, 1 mathematical or numerical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .boundary import boundary_symbol_sum, divisor_of_eisenstein, pinned_sigma
from .eisenstein import REPRESENTATIVE_RULE, SymbolSum, coefficient, coefficient_table
from .errors import EisenpqError, InvalidLevel, PrecisionFailure
from .homology import winding_element, winding_metadata
from .p1 import Level, normalize

SCHEMA_VERSION = 1
NORMALIZATION = "E_N = N*E2(N z) - E2(z), constant term N-1 at infinity; cusp constants use the same scale"
RULE_NOTE = {"odd-lift": "generic r is lifted to the odd representative in [0, 2pq)"}


def _meta(level, **extra):
    meta = {"tool": "eisenpq", "version": __version__, "schema_version": SCHEMA_VERSION,
            "p": level.p, "q": level.q, "pq": level.pq, "sigma": pinned_sigma(),
            "representative_rule": RULE_NOTE[REPRESENTATIVE_RULE], "normalization": NORMALIZATION}
    meta.update(extra)
    return meta


def _entry(g, c):
    row = {"c": g.c, "d": g.d, "coefficient": c.value, "source": c.source}
    if c.source == "oracle":
        row["error_bound"] = float(c.error_bound)
    return row


def _emit(doc, rows, fmt, out):
    if fmt == "json":
        text = json.dumps(doc, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["c", "d", "coefficient", "source", "error_bound"])
        for r in rows:
            w.writerow([r["c"], r["d"], r["coefficient"], r["source"], r.get("error_bound", "")])
        text = buf.getvalue()
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def table_document(level, label, tol):
    n = level.series(label)
    table = coefficient_table(n, level)

    X = SymbolSum(level, {g: c.value for g, c in table})
    bd = boundary_symbol_sum(X)
    div = divisor_of_eisenstein(n, level)
    rows = [_entry(g, c) for g, c in table]
    doc = {
        "meta": _meta(level, series=label, N=n),
        "entries": rows,
        "boundary": bd.as_dict(),
        "certificates": {
            "divisor_of_eisenstein": div.as_dict(),
            "boundary_equals_sigma_divisor": bd == pinned_sigma() * div,
            "degree_zero": bd.degree == 0,
            "oracle_entries": sum(r["source"] == "oracle" for r in rows),
        },
    }
    return doc, rows


def cmd_table(args):
    doc, rows = table_document(args.level, args.series, args.tol)
    _emit(doc, rows, args.format, args.out)
    return 0 if doc["certificates"]["boundary_equals_sigma_divisor"] else 1


def cmd_winding(args):
    level = args.level
    W = winding_element(level)
    rows = []
    for g, v in W.items():
        # the symbol of (1 0; x 1) is the point (x : 1); its coefficient is F((1 : x))
        x = g.c * pow(g.d, -1, level.pq) % level.pq
        c = coefficient(normalize(1, x, level), level.pq, level)
        assert c.value == v
        row = _entry(g, c)
        row["x"] = x
        rows.append(row)
    bd = boundary_symbol_sum(W)
    doc = {"meta": _meta(level, series="pq", N=level.pq, **winding_metadata(level)),
           "entries": rows, "boundary": bd.as_dict(),
           "certificates": {"zero_boundary": bd.is_zero()}}
    _emit(doc, rows, args.format, args.out)
    return 0 if bd.is_zero() else 1


def cmd_verify(args):
    from .verify import run

    checks = run(args.level, args.suite, args.seed, args.tol)
    lines = [c.line() for c in checks]
    failed = [c for c in checks if not c.passed and not c.informational]
    lines.append(f"{'FAILED' if failed else 'PASSED'}: {len(checks) - len(failed)}/{len(checks)} checks "
                 f"(level {args.level.pq}, suite {args.suite}, seed {args.seed})")
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    sys.stdout.write(text)
    return 1 if failed else 0


def cmd_report(args):
    from .report import write_figures

    level = args.level
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    labels = ["p", "q", "pq"] if args.series == "all" else [args.series]
    ok = True
    for label in labels:
        doc, rows = table_document(level, label, args.tol)
        ok &= doc["certificates"]["boundary_equals_sigma_divisor"]
        _emit(doc, rows, "csv", outdir / f"table_{level.p}_{level.q}_{label}.csv")
        _emit(doc, rows, "json", outdir / f"table_{level.p}_{level.q}_{label}.json")
    paths = write_figures(level, [level.series(lb) for lb in labels], outdir, args.tol)
    for p in sorted(outdir.glob(f"*_{level.p}_{level.q}*")):
        print(p)
    return 0 if ok and paths else 1


def _parser():
    ap = argparse.ArgumentParser(prog="eisenpq", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, tol=1e-8):
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--tol", type=float, default=tol, help="oracle tolerance")
        p.add_argument("--out", default=None)

    t = sub.add_parser("table", help="coefficients of the Eisenstein element")
    common(t)
    t.add_argument("--series", choices=["p", "q", "pq"], default="pq")
    t.add_argument("--format", choices=["json", "csv"], default="json")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run verification suites")
    common(v)
    v.add_argument("--suite", default="all",
                   choices=["dedekind", "periods", "fvalues", "boundary", "homology", "winding", "all"])
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("winding", help="the winding element as a sum of Manin symbols")
    common(w)
    w.add_argument("--format", choices=["json", "csv"], default="json")
    w.set_defaults(func=cmd_winding)

    r = sub.add_parser("report", help="tables plus figures written to a directory")
    common(r)
    r.add_argument("--series", choices=["p", "q", "pq", "all"], default="all")
    r.set_defaults(func=cmd_report, out="report")
    return ap


def main(argv=None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)
    try:
        args.level = Level(args.p, args.q)
    except InvalidLevel as exc:
        print(f"eisenpq: error: {exc}", file=sys.stderr)
        return 2
    if args.tol <= 0:
        print("eisenpq: error: --tol must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except PrecisionFailure as exc:
        print(f"eisenpq: numerical failure: {exc}", file=sys.stderr)
        return 1
    except EisenpqError as exc:
        print(f"eisenpq: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
