"""Command-line interface: ``qtasm {enumerate,pf,verify,counts}``.

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 budget
exceeded, 4 singular point.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from typing import Sequence

from qtasm import __version__, asm, ice, identities
from qtasm.exact import DomainError, LaurentPoly, format_value, parse_value

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_SINGULAR = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class BudgetError(Exception):
    pass


class _Singular(Exception):
    pass


# --------------------------------------------------------------------------
# output


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qtasm-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# --------------------------------------------------------------------------
# commands


def cmd_enumerate(args) -> tuple[int, str]:
    cls = asm.SymmetryClass(args.cls)
    n = args.order
    if n < 1:
        raise UsageError("order must be positive")
    if cls is asm.SymmetryClass.QT and n % 2 == 0 and n % 4 != 0:
        raise UsageError(f"order {n}: even quarter-turn symmetric ASMs need an order divisible by 4")
    try:
        mats = []
        count = 0
        for m in asm.enumerate_asms(n, cls, strategy=args.strategy):
            count += 1
            if args.max_states is not None and count > args.max_states:
                raise BudgetError(f"more than {args.max_states} matrices")
            if args.list:
                mats.append(m.compact())
    except asm.SearchBoundError as exc:
        raise BudgetError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        doc = {"command": "enumerate", "class": cls.value, "order": n, "count": count}
        if args.list:
            doc["matrices"] = mats
        return EXIT_OK, _json(doc)
    if args.format == "csv":
        rows = [["class", "order", "count"], [cls.value, n, count]]
        if args.list:
            rows += [["matrix"]] + [[m] for m in mats]
        return EXIT_OK, _csv(rows)
    lines = [str(count)] + (mats if args.list else [])
    return EXIT_OK, "\n".join(lines) + "\n"


def _values(text: str | None, name: str) -> list:
    if text is None:
        return []
    try:
        return [parse_value(t) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--{name}: {exc}") from exc


def _estimate_terms(graph: ice.IceGraph, nstates: int) -> int:
    # each tetravalent weight is a binomial, so a state has at most 2**V terms
    return nstates * 2 ** len(graph.tetravalent)


def cmd_pf(args) -> tuple[int, str]:
    try:
        graph = ice.build_pattern(args.pattern, args.order)
    except ice.PatternSizeError as exc:
        raise UsageError(str(exc)) from exc
    try:
        nstates = len(graph.states(args.max_states))
    except ice.SearchLimitExceeded as exc:
        raise BudgetError(str(exc)) from exc
    if args.symbolic:
        est = _estimate_terms(graph, nstates)
        if args.max_terms is not None and est > args.max_terms:
            raise BudgetError(f"symbolic expansion may reach {est} terms (limit {args.max_terms})")
        point = "symbolic"
        shown = {"a": "symbolic"}
    else:
        if args.a is None:
            raise UsageError("give --a (a rational p/q or 'zeta') or --symbolic")
        a = _values(args.a, "a")
        if len(a) != 1:
            raise UsageError("--a takes a single value")
        point = {"a": a[0]}
        xs, ys = _values(args.x, "x"), _values(args.y, "y")
        wanted = [v for v in graph.variables]
        given = [(f"x{k}", v) for k, v in enumerate(xs, 1)] + [(f"y{k}", v) for k, v in enumerate(ys, 1)]
        point.update(given)
        names = [n for n, _ in given]
        if sorted(names) != sorted(wanted):
            raise UsageError(f"{args.pattern} of order {args.order} needs values for "
                             f"{', '.join(wanted) or 'no spectral parameters'}")
        shown = {k: format_value(v) for k, v in point.items()}
    try:
        value = ice.partition_function(graph, point)
    except (DomainError, ZeroDivisionError) as exc:
        raise _Singular(str(exc) or "singular point") from exc
    text = format_value(value)
    if args.format == "json":
        doc = {"command": "pf", "pattern": graph.pattern.value, "order": args.order,
               "mode": "symbolic" if args.symbolic else "point", "point": shown,
               "states": nstates, "tetravalent_vertices": len(graph.tetravalent), "value": text}
        if isinstance(value, LaurentPoly):
            doc["terms"] = [{"coefficient": format_value(c),
                             "exponents": {v: e for v, e in zip(value.variables, exps) if e}}
                            for exps, c in value.sorted_terms()]
        return EXIT_OK, _json(doc)
    if args.format == "csv":
        return EXIT_OK, _csv([["pattern", "order", "states", "value"],
                              [graph.pattern.value, args.order, nstates, text]])
    return EXIT_OK, text + "\n"


def cmd_verify(args) -> tuple[int, str]:
    name = args.identity
    if name != "all" and name not in identities.CATALOG:
        raise UsageError(f"unknown identity {name!r}; catalog: all, {', '.join(identities.CATALOG)}")
    reports = identities.run(name, seed=args.seed, extended=args.extended, threads=args.threads)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    if args.format == "json":
        return code, _json([r.to_dict() for r in reports])
    if args.format == "csv":
        rows = [["identity", "parameters", "mode", "points", "passed"]]
        rows += [[r.identity, json.dumps(r.parameters, sort_keys=True), r.mode, r.points,
                  "pass" if r.passed else "fail"] for r in reports]
        return code, _csv(rows)
    lines = []
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r.parameters.items())
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.identity:24s} {params:28s} "
                     f"{r.mode} x{r.points}")
        if not r.passed:
            lines.append(f"      witness: {json.dumps(r.witness, sort_keys=True)}")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return code, "\n".join(lines) + "\n"


_DEFAULT_ORDERS = {"all": range(1, 7), "ht": range(1, 6), "qt": (3, 4, 5, 7, 8, 9)}


def _orders(text: str | None, cls: str):
    if text is None:
        return list(_DEFAULT_ORDERS[cls])
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out += range(int(lo), int(hi) + 1)
        else:
            out.append(int(part))
    return out


def cmd_counts(args) -> tuple[int, str]:
    rows = []
    classes = [args.cls] if args.cls else ["all", "ht", "qt"]
    try:
        for cls in classes:
            for n in _orders(args.orders, cls):
                rows.append({"class": cls, "order": n, "count": asm.count(n, asm.SymmetryClass(cls))})
    except asm.SearchBoundError as exc:
        raise BudgetError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        return EXIT_OK, _json({"command": "counts", "rows": rows})
    if args.format == "csv":
        return EXIT_OK, _csv([["class", "order", "count"]] + [[r["class"], r["order"], r["count"]] for r in rows])
    return EXIT_OK, "".join(f"{r['class']:4s} {r['order']:3d} {r['count']}\n" for r in rows)


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", help="write output to this file (atomically)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--max-states", type=int, default=None)
    common.add_argument("--max-terms", type=int, default=1_000_000)

    p = argparse.ArgumentParser(prog="qtasm", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common], help="enumerate or count ASMs")
    e.add_argument("--class", dest="cls", choices=["all", "ht", "qt"], default="all")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--count", action="store_true", help="print only the count (default)")
    e.add_argument("--list", action="store_true", help="also print each matrix")
    e.add_argument("--strategy", choices=["rows", "triangles", "domain"], default=None)
    e.set_defaults(func=cmd_enumerate)

    f = sub.add_parser("pf", parents=[common], help="evaluate a partition function")
    f.add_argument("--pattern", choices=[pt.value for pt in ice.Pattern], required=True)
    f.add_argument("--order", type=int, required=True)
    f.add_argument("--symbolic", action="store_true")
    f.add_argument("--a", help="value of a: p/q or 'zeta'")
    f.add_argument("--x", help="comma-separated x values")
    f.add_argument("--y", help="comma-separated y values (dwbc, ht-odd)")
    f.set_defaults(func=cmd_pf)

    v = sub.add_parser("verify", parents=[common], help="run identity checks")
    v.add_argument("--identity", default="all")
    v.add_argument("--extended", action="store_true", help="include the larger optional cases")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("counts", parents=[common], help="tabulate ASM counts")
    c.add_argument("--class", dest="cls", choices=["all", "ht", "qt"], default=None)
    c.add_argument("--orders", help="e.g. 1-6 or 3,5,7")
    c.set_defaults(func=cmd_counts)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate" and args.count and args.list:
        parser.error("--count and --list are mutually exclusive")
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"qtasm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"qtasm: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except _Singular as exc:
        print(f"qtasm: singular point: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
