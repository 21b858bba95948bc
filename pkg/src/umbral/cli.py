"""Command-line front end.

    umbral verify (--all | ID ...) [--profile quick|full] [--cap var=N] [--json FILE] [--jobs N]
    umbral seq NAME --n N [--upto]
    umbral cong [GROUP ...]
    umbral table {tau,mu,frobenius,conjecture} [--jmax J] [--nmax N] [--tmax T] [--csv FILE]
    umbral list [--json]

Exit status: 0 when every requested check passes, 1 on a failed check,
2 on a usage error.  Rationals are printed as ``p/q``.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from math import factorial
from typing import Callable, Sequence

from . import congruence as cong
from . import sequences as seqs
from .catalog import CatalogError, catalog_list, get, verify_all
from .poly import Poly
from .rat import rat_str, rat_valuation


class UsageError(Exception):
    pass


def _show(v) -> str:
    if isinstance(v, Poly):
        return str(v)
    return rat_str(v)


SEQUENCES: dict[str, Callable[[int], object]] = {
    "bernoulli": seqs.bernoulli,
    "bell": seqs.bell,
    "euler": seqs.euler,
    "tangent": seqs.tangent,
    "xsech": seqs.xsech,
    "genocchi": seqs.genocchi,
    "median-genocchi": seqs.median_genocchi,
    "dellac": seqs.dellac_count,
    "derangement": seqs.derangement,
    "fibonacci": seqs.fibonacci,
    "lucas": seqs.lucas,
    "kaneko-tilde": seqs.kaneko_tilde,
    "zagier-bstar": seqs.zagier_bstar,
    "hermite": seqs.hermite,
    "charlier": seqs.charlier,
    "rogers-szego": seqs.rogers_szego,
    "eulerian": seqs.eulerian,
}


def _sequence(name: str) -> Callable[[int], object]:
    if name in SEQUENCES:
        return SEQUENCES[name]
    try:
        return cong.sequence(name)
    except ValueError:
        raise UsageError(f"unknown sequence {name!r}; known: {', '.join(sorted(SEQUENCES))}, "
                         "gen-euler:m, f:m") from None


def _parse_caps(items: Sequence[str]) -> dict[str, int]:
    caps = {}
    for item in items or ():
        var, sep, val = item.partition("=")
        if not sep or not var or not val.lstrip("-").isdigit():
            raise UsageError(f"bad --cap {item!r}; expected var=N")
        caps[var] = int(val)
    return caps


def cmd_verify(args, out) -> int:
    if args.all == bool(args.ids):
        raise UsageError("give either --all or one or more identity ids")
    overrides = _parse_caps(args.cap)
    ids = None if args.all else args.ids
    try:
        for i in ids or ():
            get(i)
        reports = verify_all(args.profile, overrides, ids, jobs=args.jobs or os.cpu_count() or 1)
    except CatalogError as exc:
        raise UsageError(str(exc)) from None
    failed = 0
    for r in reports:
        caps = ",".join(f"{k}={v}" for k, v in r.caps.items())
        line = f"{r.status.upper():4} {r.id} [{caps}]"
        if r.mismatch is not None:
            m = r.mismatch
            line += f" first mismatch at {m.monomial}: lhs {m.lhs}, rhs {m.rhs}"
            failed += 1
        elif not r.passed:
            failed += 1
        print(line, file=out)
    print(f"{len(reports) - failed}/{len(reports)} passed", file=out)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=2)
            fh.write("\n")
    return 1 if failed else 0


def cmd_seq(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    f = _sequence(args.name)
    if args.upto:
        for k in range(args.n + 1):
            print(f"{k} {_show(f(k))}", file=out)
    else:
        print(_show(f(args.n)), file=out)
    return 0


def _cong_groups() -> dict[str, Callable[[], list]]:
    return {
        "tau": lambda: cong.tau_reports(8, 8),
        "mu": lambda: [_table_report(cong.check_mu(7, 8))],
        "refinements": lambda: cong.refinement_checks(12),
        "frobenius": lambda: [cong.frobenius_check(8, 6)],
        "bell": lambda: cong.bell_congruences(),
        "kummer": lambda: [r for m, p in cong.KUMMER_CASES
                           for r in cong.kummer_transfer_check(m, p)] + cong.kummer2_euler(),
    }


def _table_report(t: cong.ValuationTable) -> cong.CheckReport:
    r = cong.CheckReport(t.name)
    for c in t.cells:
        r.expect(c.ok, f"j={c.j} n={c.n}: computed {c.computed}, predicted {c.predicted}")
    return r


def cmd_cong(args, out) -> int:
    groups = _cong_groups()
    chosen = args.groups or list(groups)
    bad = [g for g in chosen if g not in groups]
    if bad:
        raise UsageError(f"unknown group(s) {', '.join(bad)}; known: {', '.join(groups)}")
    rc = 0
    for g in chosen:
        for r in groups[g]():
            print(f"{r.status.upper():5} {g}: {r.name} ({r.checked} checks)", file=out)
            for f in r.failures[:5]:
                print(f"      {f}", file=out)
            if r.known_issue:
                print(f"      note: {r.known_issue}", file=out)
            if not r.acceptable:
                rc = 1
    return rc


def _write_csv(path: str, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def cmd_table(args, out) -> int:
    kind = args.kind
    if kind == "conjecture":
        cells = cong.conjecture_probe(args.tmax, args.nmax if args.nmax is not None else 6,
                                      args.jmax if args.jmax is not None else 3)
        header = ("j", "n", "t", "computed", "conjectured", "status", "theta_residue")
        rows = cong.probe_rows(cells)
        rc = 0  # report only
    elif kind == "frobenius":
        jmax = args.jmax if args.jmax is not None else 6
        nmax = args.nmax if args.nmax is not None else 8
        header = cong.ValuationTable.HEADER
        rows = []
        rc = 0
        for n in range(nmax + 1):
            target = n + rat_valuation(factorial(n), 2).value
            for j in range(0, jmax + 1, 2):
                v = cong.frobenius_cell(j, n)
                rows.append([str(j), str(n), str(v), str(target), "true" if v == target else "false"])
                if v != target:
                    rc = 1
    else:
        if kind == "tau":
            t = cong.check_tau(8 if args.jmax is None else args.jmax,
                               8 if args.nmax is None else args.nmax)
        else:
            t = cong.check_mu(7 if args.jmax is None else args.jmax,
                              8 if args.nmax is None else args.nmax)
        header = t.HEADER
        rows = t.rows()
        rc = 0 if t.ok else 1
    print(",".join(header), file=out)
    for row in rows:
        print(",".join(row), file=out)
    if args.csv:
        _write_csv(args.csv, header, rows)
    return rc


def cmd_list(args, out) -> int:
    items = catalog_list()
    if args.json:
        print(json.dumps(items, indent=2), file=out)
    else:
        for e in items:
            print(f"{e['id']:28} {e['anchor']:12} {e['description']}", file=out)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="umbral", description="Exact verification of umbral identities and congruences.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check catalog identities")
    v.add_argument("ids", nargs="*")
    v.add_argument("--all", action="store_true")
    v.add_argument("--profile", choices=("quick", "full"), default="quick")
    v.add_argument("--cap", action="append", metavar="VAR=N")
    v.add_argument("--json", metavar="FILE")
    v.add_argument("--jobs", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("seq", help="print a sequence value")
    s.add_argument("name")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--upto", action="store_true", help="print indices 0..n")
    s.set_defaults(func=cmd_seq)

    c = sub.add_parser("cong", help="run the congruence checks")
    c.add_argument("groups", nargs="*")
    c.set_defaults(func=cmd_cong)

    t = sub.add_parser("table", help="valuation tables")
    t.add_argument("kind", choices=("tau", "mu", "frobenius", "conjecture"))
    t.add_argument("--jmax", type=int)
    t.add_argument("--nmax", type=int)
    t.add_argument("--tmax", type=int, default=2)
    t.add_argument("--csv", metavar="FILE")
    t.set_defaults(func=cmd_table)

    ls = sub.add_parser("list", help="list catalog entries")
    ls.add_argument("--json", action="store_true")
    ls.set_defaults(func=cmd_list)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
