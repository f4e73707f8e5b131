"""Command-line front end.

Exit codes: 0 success / admissible, 1 violation or exclusion found
(``check``, ``status``), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .chains import OracleDomainError, oracle_extremes, sweep_bound
from .enumerator import enumerate_orientations, min_alpha
from .prohibitions import DatabaseError, Status, annotate, default_db, load_db_file, lookup
from .restrictions import HULL_MAX_DEGREE, check_all
from .schemes import (
    ComplexScheme,
    DegreeError,
    RealScheme,
    SchemeSyntaxError,
    curve_params,
    format_canonical,
    lambda_balance,
    parse_scheme,
    pi_balance,
    validate_m_scheme,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _record(out, **fields) -> None:
    print("\t".join(f"{k}={v}" for k, v in fields.items()), file=out)


def _scheme_arg(text: str, **kw):
    try:
        return parse_scheme(text, **kw)
    except SchemeSyntaxError as exc:
        raise UsageError(f"cannot parse scheme: {exc}\n{exc.caret()}") from None


def _params(m: int):
    try:
        return curve_params(m)
    except DegreeError as exc:
        raise UsageError(str(exc)) from None


def _db(path: Optional[str]):
    if path is None:
        return default_db()
    try:
        return load_db_file(path)
    except OSError as exc:
        raise UsageError(f"cannot read database {path}: {exc.strerror}") from None
    except DatabaseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_parse(args, out) -> int:
    print(format_canonical(_scheme_arg(args.scheme)), file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    p = _params(args.degree)
    cs = _scheme_arg(args.scheme)
    if not isinstance(cs, ComplexScheme):
        raise UsageError("check needs a complex scheme (every group signed)")
    report = check_all(cs, p)
    status = lookup(default_db(), p.m, cs)
    text = format_canonical(cs)
    if args.records:
        for v in report.verdicts:
            _record(out, scheme=text, degree=p.m, rule=v.rule_id, outcome=v.outcome.value, detail=v.detail)
        _record(
            out,
            scheme=text,
            degree=p.m,
            admissible=str(report.arithmetically_admissible).lower(),
            database=status.status.value,
        )
    else:
        print(f"{text}  (m = {p.m}, k = {p.k}, g = {p.g})", file=out)
        for v in report.verdicts:
            print(f"  {v.outcome.value.upper():<15} {v.rule_id:<20} {v.detail}", file=out)
        verdict = "admissible" if report.arithmetically_admissible else "violated"
        print(f"arithmetic: {verdict}", file=out)
        print(f"database: {status}", file=out)
    return EXIT_OK if report.arithmetically_admissible else EXIT_VIOLATION


def _alpha_range(args, p) -> range:
    top = p.oval_budget - 2
    if args.alpha is not None:
        if args.alpha_min is not None or args.alpha_max is not None:
            raise UsageError("--alpha cannot be combined with --alpha-min/--alpha-max")
        lo = hi = args.alpha
    else:
        lo = 0 if args.alpha_min is None else args.alpha_min
        hi = top if args.alpha_max is None else args.alpha_max
    if lo < 0 or hi > top or lo > hi:
        raise UsageError(f"alpha range [{lo}, {hi}] must lie within [0, {top}] for m = {p.m}")
    return range(lo, hi + 1)


def cmd_enumerate(args, out) -> int:
    p = _params(args.degree)
    if p.m > HULL_MAX_DEGREE:
        raise UsageError(f"enumerate supports m <= {HULL_MAX_DEGREE}")
    alphas = _alpha_range(args, p)
    db = default_db() if args.with_db else None
    if not args.records:
        print(f"arithmetic survivors for m = {p.m} (k = {p.k}, g = {p.g})", file=out)
    for alpha in alphas:
        res = enumerate_orientations(p, alpha)
        rows = annotate(db, res).rows if db else [(cs, r, None) for cs, r in res.survivors]
        if args.records:
            _record(
                out, kind="summary", degree=p.m, alpha=alpha, beta=res.beta,
                survivors=len(rows), searched=res.searched,
            )
        else:
            print(f"alpha={alpha:<3} beta={res.beta:<3} survivors={len(rows):<3} searched={res.searched}", file=out)
        for cs, _, status in rows:
            fields = dict(
                kind="survivor", degree=p.m, alpha=alpha, scheme=format_canonical(cs),
                pi_balance=pi_balance(cs), lambda_balance=lambda_balance(cs),
            )
            if status is not None:
                fields["status"] = status.status.value
                if status.source:
                    fields["source"] = status.source
            if args.records:
                _record(out, **fields)
            else:
                tail = f"  [{status}]" if status is not None else ""
                print(f"    {fields['scheme']:<32} D={fields['pi_balance']:+d}{tail}", file=out)
    return EXIT_OK


def cmd_status(args, out) -> int:
    p = _params(args.degree)
    scheme = _scheme_arg(args.scheme, allow_nestless=True)
    db = _db(args.db)
    found = lookup(db, p.m, scheme)
    text = format_canonical(scheme)
    print(f"{text}: {found}", file=out)

    violated = False
    m_count = validate_m_scheme(scheme, p)
    if not m_count.passed:
        violated = True
        summary = f"not an M-scheme ({m_count.detail})"
    elif isinstance(scheme, ComplexScheme):
        report = check_all(scheme, p)
        violated = not report.arithmetically_admissible
        summary = "admissible" if not violated else "fails " + ", ".join(v.rule_id for v in report.failures)
    elif isinstance(scheme, RealScheme) and p.m <= HULL_MAX_DEGREE:
        n = len(enumerate_orientations(p, scheme.alpha).survivors)
        violated = n == 0
        summary = f"{n} complex orientation(s) survive"
    else:
        summary = "not evaluated"
    print(f"arithmetic: {summary}", file=out)
    return EXIT_VIOLATION if violated or found.status is Status.EXCLUDED else EXIT_OK


def cmd_min_alpha(args, out) -> int:
    p = _params(args.degree)
    if p.m > HULL_MAX_DEGREE:
        raise UsageError(f"min-alpha supports m <= {HULL_MAX_DEGREE}")
    a = min_alpha(p, db=None) if args.arithmetic_only else min_alpha(p, db=_db(args.db))
    print("none" if a is None else a, file=out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    try:
        lo, hi = oracle_extremes(args.k, args.alpha, args.beta, args.base)
        bound = sweep_bound(args.k, args.alpha, args.base)
    except OracleDomainError as exc:
        raise UsageError(str(exc)) from None
    print(f"minD={lo}\tmaxD={hi}\tbound={bound}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="mcurve-schemes", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("parse", help="echo a scheme in canonical form")
    sp.add_argument("scheme")
    sp.set_defaults(func=cmd_parse)

    sp = sub.add_parser("check", help="run every rule on a complex scheme")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("scheme")
    sp.add_argument("--records", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("enumerate", help="list arithmetic survivors")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--alpha", type=int)
    sp.add_argument("--alpha-min", type=int)
    sp.add_argument("--alpha-max", type=int)
    sp.add_argument("--with-db", action="store_true")
    sp.add_argument("--records", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("status", help="knowledge-base lookup plus arithmetic summary")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("scheme")
    sp.add_argument("--db")
    sp.set_defaults(func=cmd_status)

    sp = sub.add_parser("min-alpha", help="smallest alpha with a survivor")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--db")
    sp.add_argument("--arithmetic-only", action="store_true", help="ignore knowledge-base exclusions")
    sp.set_defaults(func=cmd_min_alpha)

    sp = sub.add_parser("oracle", help="exhaustive chain-sweep extremes")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--beta", type=int, required=True)
    sp.add_argument("--base", choices=["vertex", "exterior"], required=True)
    sp.set_defaults(func=cmd_oracle)
    return ap


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
