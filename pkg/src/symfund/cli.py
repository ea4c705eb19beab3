"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import sympy

from . import __version__
from .cache import CacheStore
from .derivation import derive, lr_product_recursive
from .formats import ExpressionError, parse_expression, render
from .oracle import schur_plethysm_oracle, schur_product_oracle
from .partition import (
    format_partition,
    parse_partition,
    partitions_of,
    to_multiplicity,
)
from .shadows import chern_shadow
from .splethysm import (
    CACHE,
    ConsistencyError,
    SupportError,
    d_s,
    decompose_support,
    plethysm,
    support_bound,
)
from .symfun import character, power_to_schur, schur_to_power

EXIT_USAGE = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class VerificationError(Exception):
    pass


def _pair(tokens: list[str]) -> tuple[tuple[int, ...], tuple[int, ...] | None]:
    text = " ".join(tokens)
    pieces = [p.strip() for p in text.split("/")]
    try:
        if len(pieces) == 1:
            return parse_partition(pieces[0]), None
        if len(pieces) == 2:
            return parse_partition(pieces[0]), parse_partition(pieces[1])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"expected 'ALPHA / BETA', got {text!r}")


def _two(tokens: list[str]):
    alpha, beta = _pair(tokens)
    if beta is None:
        raise UsageError("expected two partitions separated by '/'")
    return alpha, beta


def _store(args) -> CacheStore | None:
    if args.no_prune:
        return None
    return CacheStore(args.cache)


def _fraction_json(c: Fraction) -> dict:
    return {"num": str(c.numerator), "den": str(c.denominator)}


def cmd_derive(args) -> str:
    f = parse_expression(" ".join(args.expr))
    if args.s:
        return render(d_s(f), args.format)
    result = derive(f)
    if args.verify and power_to_schur(derive(schur_to_power(f))) != result:
        raise VerificationError("hook-collapse and power-sum derivatives disagree")
    extra = {"verified": True} if args.verify and args.format == "json" else {}
    out = render(result, args.format, **extra)
    if args.verify and args.format == "text":
        out += "\n# verified: power-sum route agrees"
    return out


def cmd_product(args) -> str:
    alpha, beta = _two(args.partitions)
    store = _store(args)
    result = store.get("product", alpha, beta) if store else None
    if result is None:
        result = lr_product_recursive(alpha, beta)
        if store:
            store.put("product", alpha, beta, result)
    if args.verify and schur_product_oracle(alpha, beta) != result:
        raise VerificationError(f"oracle disagrees on s{alpha}*s{beta}")
    extra = {"verified": True} if args.verify and args.format == "json" else {}
    out = render(result, args.format, **extra)
    if args.verify and args.format == "text":
        out += "\n# verified: oracle agrees"
    return out


def cmd_plethysm(args) -> str:
    alpha, beta = _two(args.partitions)
    prune = not args.no_prune
    store = _store(args)
    result = None
    if store:
        for (kind, a, b), v in store.records.items():
            if kind == "plethysm" and CACHE.get(a, b, True) is None:
                CACHE.put(a, b, True, v)
        result = store.get("plethysm", alpha, beta)
    if result is None:
        result = plethysm(alpha, beta, prune=prune, threads=args.threads)
        if store:
            store.put("plethysm", alpha, beta, result)
    if args.verify and schur_plethysm_oracle(alpha, beta) != result:
        raise VerificationError(f"oracle disagrees on s{alpha}[s{beta}]")
    extra = {"verified": True} if args.verify and args.format == "json" else {}
    out = render(result, args.format, **extra)
    if args.verify and args.format == "text":
        out += "\n# verified: oracle agrees"
    return out


def cmd_char(args) -> str:
    alpha, cls = _pair(args.partitions)
    d = sum(alpha)
    classes = [cls] if cls is not None else list(partitions_of(d))
    try:
        values = [(mu, character(alpha, to_multiplicity(mu))) for mu in classes]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return json.dumps(
            {"alpha": list(alpha), "values": [{"class": list(mu), "value": v} for mu, v in values]}
        )
    if cls is not None:
        return str(values[0][1])
    return "\n".join(f"{format_partition(mu)}: {v}" for mu, v in values)


def cmd_shadow(args) -> str:
    alpha, extra = _pair(args.partitions)
    if extra is not None:
        raise UsageError("shadow takes a single partition")
    r = None if args.r in (None, "r") else _int(args.r, "--r")
    value = chern_shadow(alpha, args.m, r)
    if isinstance(value, Fraction):
        if args.format == "json":
            return json.dumps({"alpha": list(alpha), "m": args.m, "r": r, "value": _fraction_json(value)})
        return str(value)
    expr = value.as_expr()
    if args.format == "json":
        coeffs = [
            {"power": int(mon[0]), **_fraction_json(Fraction(int(c.p), int(c.q)))}
            for mon, c in value.terms()
        ]
        return json.dumps({"alpha": list(alpha), "m": args.m, "r": "r", "coefficients": coeffs})
    if args.format == "latex":
        return sympy.latex(expr)
    return str(expr)


def _int(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{name} expects an integer or 'r', got {text!r}") from None


def cmd_bound(args) -> str:
    alpha, beta = _two(args.partitions)
    cols, rows = support_bound(alpha, beta)
    if args.format == "json":
        return json.dumps({"max_cols": cols, "max_rows": rows})
    return f"max_cols={cols} max_rows={rows}"


def cmd_decompose(args) -> str:
    f = parse_expression(" ".join(args.expr))
    try:
        g, m = decompose_support(f, args.t, args.mode)
    except SupportError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return json.dumps({"g": json.loads(render(g, "json")), "m": _fraction_json(m)})
    return f"g = {render(g, args.format)}\nm = {m}"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--cache", metavar="PATH", default=None, help="cache file (default: $SYMFUND_CACHE)")
    common.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")
    common.add_argument("--no-prune", action="store_true", help="do not restrict plethysm candidates by the support bound")
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="symfund", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", parents=[common], help="D(f), or D_s(f) with --s")
    p.add_argument("--s", action="store_true", help="label hooks by size (D_s)")
    p.add_argument("expr", nargs="+")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("product", parents=[common], help="s_alpha * s_beta via the D recursion")
    p.add_argument("partitions", nargs="+", metavar="ALPHA / BETA")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("plethysm", parents=[common], help="s_alpha[s_beta] via the chain rule")
    p.add_argument("partitions", nargs="+", metavar="ALPHA / BETA")
    p.set_defaults(func=cmd_plethysm)

    p = sub.add_parser("char", parents=[common], help="symmetric group characters")
    p.add_argument("partitions", nargs="+", metavar="ALPHA [/ CLASS]")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("shadow", parents=[common], help="Chern shadow Sh_m(S^alpha E)")
    p.add_argument("partitions", nargs="+", metavar="ALPHA")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--r", default=None, help="integer rank, or 'r' for the polynomial (default)")
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("bound", parents=[common], help="support bound for s_alpha[s_beta]")
    p.add_argument("partitions", nargs="+", metavar="ALPHA / BETA")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("decompose", parents=[common], help="split f = g + m p_d")
    p.add_argument("expr", nargs="+")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=("columns", "rows"), default="columns")
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (UsageError, ExpressionError) as exc:
        print(f"symfund {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VerificationError, ConsistencyError) as exc:
        print(f"symfund {args.command}: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    print(out)
    return 0
