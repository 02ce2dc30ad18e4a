"""Command-line interface.

Exit codes: 0 certified-admissible (or success), 2 inconclusive / nothing
found, 3 inapplicable, 1 usage or internal error.  TSV is the default
output; ``--format json`` gives the same fields in the same order.
"""

from __future__ import annotations

import argparse
import json
import sys

from .admissibility import METHODS, AdmissibilityReport, Tuple4, Verdict, bounds, check, search_min_d, table1
from .dickson import render_family
from .errors import MassAdmitError, NotFound
from .grassmann import GrassmannSpec, dual_classes, ranks
from .index import DEFAULT_BUDGET

EXIT_CODES = {Verdict.CERTIFIED: 0, Verdict.INCONCLUSIVE: 2, Verdict.INAPPLICABLE: 3}

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def report_record(rep: AdmissibilityReport, timing: bool = False) -> dict:
    t = rep.tuple
    rec = {
        "d": t.d, "l": t.ell, "k": t.k, "j": t.j,
        "verdict": rep.verdict.value,
        "method": rep.method,
        "witness": str(rep.witness) if rep.witness is not None else None,
        "ramos_lower": rep.bounds.ramos_lower,
        "mvz_upper": rep.bounds.mvz_upper,
        "theorem2_bound": rep.bounds.theorem2_bound,
        "note": rep.note,
    }
    if timing:
        rec["elapsed"] = round(rep.elapsed, 6)
    return rec


def _cell(v) -> str:
    if v is None:
        return "NA"
    return str(v)


def emit(records: list[dict], fmt: str, single: bool = False, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(records[0] if single else records) + "\n")
        return
    if not records:
        return
    keys = list(records[0])
    out.write("\t".join(keys) + "\n")
    for rec in records:
        out.write("\t".join(_cell(rec[k]) for k in keys) + "\n")


def cmd_check(args) -> int:
    rep = check(Tuple4(args.d, args.l, args.k, args.j), args.method, args.budget)
    emit([report_record(rep, args.timing)], args.format, single=True)
    return EXIT_CODES[rep.verdict]


def cmd_table1(args) -> int:
    reps = table1(args.method, workers=args.jobs)
    emit([report_record(r, args.timing) for r in reps], args.format)
    return 0 if all(r.certified for r in reps) else 1


def cmd_search(args) -> int:
    b = bounds(args.k, args.j)
    try:
        d = search_min_d(args.k, args.j, args.dmax, with_oracle=args.with_oracle, budget=args.budget)
        code = 0
    except NotFound:
        d, code = None, 2
    rec = {"k": args.k, "j": args.j, "min_d": d,
           "ramos_lower": b.ramos_lower, "theorem2_bound": b.theorem2_bound}
    emit([rec], args.format, single=True)
    return code


def cmd_bounds(args) -> int:
    b = bounds(args.k, args.j)
    rec = {"k": args.k, "j": args.j, "ramos_lower": b.ramos_lower,
           "mvz_upper": b.mvz_upper, "theorem2_bound": b.theorem2_bound}
    emit([rec], args.format, single=True)
    return 0


def cmd_ring_info(args) -> int:
    spec = GrassmannSpec(args.d, args.l)
    rk = ranks(spec)
    duals = [str(p) for p in dual_classes(spec).entries]
    if args.format == "json":
        obj = {"d": spec.d, "l": spec.ell, "ranks": rk, "dual_classes": duals}
        sys.stdout.write(json.dumps(obj) + "\n")
        return 0
    out = ["degree\trank"] + [f"{i}\t{r}" for i, r in enumerate(rk)]
    out += ["", "r\tdual_class"] + [f"{r}\t{p}" for r, p in enumerate(duals)]
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def cmd_dickson(args) -> int:
    rows = render_family(args.k)
    if args.format == "json":
        sys.stdout.write(json.dumps({"k": args.k, "polynomials": dict(rows)}) + "\n")
        return 0
    sys.stdout.write("name\tpolynomial\n" + "".join(f"{n}\t{p}\n" for n, p in rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="massadmit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("tsv", "json"), default="tsv")

    sp = sub.add_parser("check", help="certify one (d, l, k, j) tuple")
    for name in ("d", "l", "k", "j"):
        sp.add_argument(f"--{name}", type=_positive_int, required=True)
    sp.add_argument("--method", choices=METHODS, default="fast")
    sp.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)
    sp.add_argument("--timing", action="store_true", help="include elapsed seconds")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("search", help="least certifying d for (k, j)")
    sp.add_argument("--k", type=_positive_int, required=True)
    sp.add_argument("--j", type=_positive_int, required=True)
    sp.add_argument("--dmax", type=_positive_int, required=True)
    sp.add_argument("--with-oracle", action="store_true")
    sp.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)
    common(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("table1", help="reproduce the comparison table")
    sp.add_argument("--method", choices=METHODS, default="fast")
    sp.add_argument("--jobs", type=_positive_int, default=None)
    sp.add_argument("--timing", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("ring-info", help="graded ranks and dual classes of G_l(R^d)")
    sp.add_argument("--d", type=_positive_int, required=True)
    sp.add_argument("--l", type=_positive_int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_ring_info)

    sp = sub.add_parser("dickson", help="Dickson polynomials in k variables")
    sp.add_argument("--k", type=_positive_int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_dickson)

    sp = sub.add_parser("bounds", help="classical and numerical bounds for (k, j)")
    sp.add_argument("--k", type=_positive_int, required=True)
    sp.add_argument("--j", type=_positive_int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_bounds)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MassAdmitError, ValueError) as exc:
        print(f"massadmit: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
