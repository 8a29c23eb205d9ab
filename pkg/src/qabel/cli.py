"""Command-line interface: ``qabel verify | limit | qbracket | cf``.

Exit codes: 0 success (all identities pass), 1 an identity failed,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction

from . import identities, qbracket
from .arith import get_function, load_function_table
from .errors import QabelError
from .forms import FormId
from .jsonfmt import dumps, rational
from .limits import (
    LimitSettings,
    cf_from_terms,
    closed_form_terms,
    evaluate_convergents,
    limit_form_names,
    partial_sums,
    run,
)
from .limits.accel import METHODS
from .limits.evaluate import DOUBLE_BITS
from .limits.paths import DEFAULT_DELTA0, DEFAULT_M, DEFAULT_POINTS, DEFAULT_RATIO
from .series import EXACT, FLOAT

ACCEPTANCE_FUNCTIONS = ("one", "even_indicator", "odd_indicator", "residue_1_3", "mobius", "phi_ratio")
IDENTITY_CHOICES = ("euler", "qbinomial", "chain_eq5", "chain_eq8", "chain_cor2_5", "thm3")


class ConfigError(Exception):
    pass


def _shared(p: argparse.ArgumentParser, order_default) -> None:
    p.add_argument("--order", type=int, default=order_default, metavar="N")
    p.add_argument("--backend", default=None, help="exact | float")
    p.add_argument("--output", default="json", help="json | csv")
    p.add_argument("--precision", type=int, default=DOUBLE_BITS, metavar="BITS")
    p.add_argument("--no-timing", action="store_true",
                   help="report ms = 0 so repeated runs give byte-identical output")


def _path_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--theta", type=float, default=0.0, metavar="RAD")
    p.add_argument("--stolz-m", type=float, default=DEFAULT_M, metavar="M")
    p.add_argument("--delta0", type=float, default=DEFAULT_DELTA0, metavar="D")
    p.add_argument("--ratio", type=float, default=DEFAULT_RATIO, metavar="R")
    p.add_argument("--points", type=int, default=DEFAULT_POINTS, metavar="K")
    p.add_argument("--accel", default="wynn", help="none | richardson | wynn (or wynn_epsilon, wynn_rho)")
    p.add_argument("--cesaro-depth", type=int, default=None, metavar="D")
    p.add_argument("--tolerance", type=float, default=1e-3)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qabel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check the q-series identities coefficientwise")
    _shared(v, identities.DEFAULT_ORDER)
    v.add_argument("--all", action="store_true", help="run every identity (default)")
    v.add_argument("--identity", action="append", default=None, metavar="NAME")
    v.add_argument("--function", action="append", default=None, metavar="NAME")
    v.add_argument("--function-file", action="append", default=None, metavar="PATH")
    v.add_argument("--a", action="append", default=None, metavar="NAME")

    lim = sub.add_parser("limit", help="estimate a q -> 1 limit along a Stolz path")
    _shared(lim, None)
    lim.add_argument("--form", default=FormId.THM1_CLOSED.value, metavar="TAG")
    g = lim.add_mutually_exclusive_group()
    g.add_argument("--function", default=None, metavar="NAME")
    g.add_argument("--function-file", default=None, metavar="PATH")
    _path_flags(lim)

    qb = sub.add_parser("qbracket", help="q-bracket series, expansion check and limits")
    _shared(qb, qbracket.QBRACKET_ORDER)
    qb.add_argument("--a", required=True, metavar="NAME")
    qb.add_argument("--limit", action="store_true")
    qb.add_argument("--limit-order", type=int, default=None, metavar="N",
                    help="truncation order for the limit (default: adequacy minimum)")
    _path_flags(qb)

    cf = sub.add_parser("cf", help="Euler continued fraction of a series")
    _shared(cf, None)
    src = cf.add_mutually_exclusive_group(required=True)
    src.add_argument("--terms", default=None, help="comma-separated terms, e.g. 1,1/2,1/4")
    src.add_argument("--form", default=None, metavar="TAG", help="n-sum terms of a closed form at --q")
    cf.add_argument("--function", default="one", metavar="NAME")
    cf.add_argument("--q", type=complex, default=0.9)
    cf.add_argument("--depth", type=int, default=30)
    return parser


# -- helpers -------------------------------------------------------------------


def _function(name: str | None, path: str | None):
    if path is not None:
        return load_function_table(path)
    if name is None:
        raise ConfigError("give --function NAME or --function-file PATH")
    try:
        return get_function(name)
    except KeyError as e:
        raise ConfigError(e.args[0]) from None


def _choice(value: str, valid, what: str) -> str:
    if value not in valid:
        raise ConfigError(f"unknown {what} {value!r}; valid: {', '.join(valid)}")
    return value


def _settings(args, form: str, order) -> LimitSettings:
    accel = args.accel
    if accel != "wynn":
        _choice(accel, METHODS, "acceleration")
    return LimitSettings(
        form=form, N=order, M=args.stolz_m, theta=args.theta, delta0=args.delta0,
        ratio=args.ratio, points=args.points, accel=accel, precision=args.precision,
        cesaro_depth=args.cesaro_depth, tolerance=args.tolerance,
    )


def _emit(obj, out) -> None:
    out.write(dumps(obj) + "\n")


# -- commands ------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    if (args.backend or EXACT) != EXACT:
        raise ConfigError("identity verification is exact-only; --backend must be exact")
    if args.output != "json":
        raise ConfigError("verify reports are JSON only; CSV is offered for limit traces")
    if args.order < 0:
        raise ConfigError("--order must be nonnegative")
    chosen = args.identity or list(IDENTITY_CHOICES)
    if args.all:
        chosen = list(IDENTITY_CHOICES)
    for name in chosen:
        _choice(name, IDENTITY_CHOICES, "identity")
    funcs = [_function(n, None) for n in (args.function or [])]
    funcs += [_function(None, p) for p in (args.function_file or [])]
    if not funcs:
        funcs = [get_function(n) for n in ACCEPTANCE_FUNCTIONS]
    names = args.a or qbracket.registered_names()
    for n in names:
        _choice(n, qbracket.registered_names(), "partition function")
    pfs = [qbracket.get_partition_function(n) for n in names]

    N = args.order
    reports = []
    if "euler" in chosen:
        reports.append(identities.verify_euler_identity(N))
    if "qbinomial" in chosen:
        reports += [identities.verify_qbinomial(n, N) for n in identities.QBINOMIAL_RANGE]
    for chain in identities.CHAINS:
        if f"chain_{chain}" in chosen:
            reports += [identities.verify_chain(chain, f, N) for f in funcs]
    if "thm3" in chosen:
        reports += [qbracket.verify_thm3_identity(a, N) for a in pfs]
    reports.sort(key=lambda r: r.identity_name)
    _emit([r.to_dict(timing=not args.no_timing) for r in reports], out)
    return 0 if all(r.passed for r in reports) else 1


def _trace_csv(est, path, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["j", "q_re", "q_im", "delta", "raw_re", "raw_im", "accelerated_re", "accelerated_im", "tail_bound"])
    for j, q in enumerate(path.points):
        raw, acc = complex(est.raw_values[j]), complex(est.accelerated_values[j])
        w.writerow([j, *("%.17g" % x for x in (q.real, q.imag, path.deltas[j], raw.real, raw.imag,
                                               acc.real, acc.imag, est.tail_bounds[j]))])


def cmd_limit(args, out) -> int:
    if (args.backend or FLOAT) != FLOAT:
        raise ConfigError("limits are evaluated in floating point; --backend must be float")
    if args.output not in ("json", "csv"):
        raise ConfigError(f"unknown output {args.output!r}; valid: json, csv")
    form = _choice(args.form, limit_form_names(), "form")
    f = None if form == FormId.LAMBERT_DEN.value and not (args.function or args.function_file) \
        else _function(args.function, args.function_file)
    if f is None and args.cesaro_depth:
        raise ConfigError("--cesaro-depth needs a function")
    settings = _settings(args, form, args.order)
    path = settings.path()
    est = run(settings, f)
    if args.output == "csv":
        _trace_csv(est, path, out)
    else:
        _emit(est.to_dict(), out)
    return 0


def cmd_qbracket(args, out) -> int:
    if (args.backend or EXACT) != EXACT:
        raise ConfigError("q-bracket coefficients are exact; --backend must be exact")
    if args.output != "json":
        raise ConfigError("qbracket output is JSON only")
    _choice(args.a, qbracket.registered_names(), "partition function")
    a = qbracket.get_partition_function(args.a)
    N = args.order
    series = qbracket.qbracket_series(a, N)
    report = qbracket.verify_thm3_identity(a, N)
    result = {
        "a": a.name,
        "order": N,
        "coefficients": [rational(c) for c in series.coeffs],
        "thm3": report.to_dict(timing=not args.no_timing),
    }
    if args.limit:
        lim = qbracket.qbracket_limit(a, _settings(args, "qbracket", args.limit_order))
        result["limit"] = lim.to_dict()
    _emit(result, out)
    return 0 if report.passed else 1


def _parse_term(text: str, exact: bool):
    text = text.strip()
    if exact:
        return Fraction(text)
    return complex(text) if "j" in text else float(Fraction(text)) if "/" in text else float(text)


def cmd_cf(args, out) -> int:
    if args.output != "json":
        raise ConfigError("cf output is JSON only")
    if args.depth < 0:
        raise ConfigError("--depth must be nonnegative")
    if args.terms is not None:
        exact = (args.backend or EXACT) == EXACT
        try:
            terms = [_parse_term(t, exact) for t in args.terms.split(",")]
        except (ValueError, ZeroDivisionError) as e:
            raise ConfigError(f"bad --terms: {e}") from None
        terms = terms[: args.depth + 1]
        source = {"terms": args.terms}
    else:
        if (args.backend or FLOAT) != FLOAT:
            raise ConfigError("terms of a form at a point are floating point; --backend must be float")
        form = _choice(args.form, [FormId.THM1_CLOSED.value, FormId.COR1_CLOSED.value,
                                   FormId.THM2_CLOSED.value, FormId.COR2_5_SINGLE.value], "form")
        f = _function(args.function, None)
        if not abs(args.q) < 1:
            raise ConfigError("--q must lie inside the unit disk")
        t = closed_form_terms(form, f, args.q, args.depth + 1)
        terms = [complex(x) if complex(x).imag else complex(x).real for x in t[1:]]
        source = {"form": form, "function": f.name, "q": args.q}
    cf = cf_from_terms(terms)
    conv = evaluate_convergents(cf)
    sums = partial_sums(terms)[: len(conv)]
    exact = all(isinstance(c, Fraction) for c in conv)
    worst = 0.0
    for c, s in zip(conv, sums):
        d = abs(c - s)
        worst = max(worst, float(d / abs(s)) if s else float(d))
    result = {
        **source,
        "depth": cf.depth,
        "truncated": cf.truncated,
        "convergents": [rational(c) for c in conv] if exact else conv,
        "partial_sums": [rational(s) for s in sums] if exact else sums,
        "max_relative_difference": worst,
    }
    _emit(result, out)
    return 0


COMMANDS = {"verify": cmd_verify, "limit": cmd_limit, "qbracket": cmd_qbracket, "cf": cmd_cf}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (ConfigError, QabelError, KeyError, ValueError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        print(f"qabel {args.command}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
