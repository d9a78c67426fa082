"""Command-line front end.

Exit status: 0 success, 1 domain error or failed verification, 2 usage error.
Structured output (``--format structured``) is JSON Lines: one object per
term / index / checked item, and for ``verify`` a trailing ``{"summary": ...}``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra import Product, format_combination, product
from .bivariate import zeta_xy
from .expr import MzvExpr, format_monomial
from .indices import DomainError, format_index, parse_index
from .numeric import DEFAULT_DIGITS, EvalCache, eval_index, format_value
from .polynomials import BivariatePolynomial, RegPolynomial, format_bivariate, format_reg_polynomial
from .regularization import regularize
from .rho import apply_rho
from . import verification as V

IDENTITIES = ("ikz", "main", "t-independence", "stuffle-hom-xy", "reg-coeff", "product-hom", "a-splitting")


def default_cache_path() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "mzvreg" / "zeta_values.json"


def resolve_cache(flag: str | None) -> EvalCache:
    """``--cache`` beats ``MZV_CACHE`` beats the per-user default."""
    return EvalCache(flag or os.environ.get("MZV_CACHE") or default_cache_path())


def _digits_arg(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"digits must be an integer, got {text!r}") from None
    if d < 10:
        raise argparse.ArgumentTypeError("digits must be at least 10")
    return d


def _tol_arg(text: str) -> str:
    s = text.strip().lower()
    mant, _, exp = s.partition("e")
    if mant not in ("1", "1.0") or not exp.lstrip("+-").isdigit():
        raise argparse.ArgumentTypeError(f"tolerance must be a power of ten like 1e-30, got {text!r}")
    return s


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text", dest="output")
    common.add_argument("--cache", default=None, help="numeric cache file (overrides MZV_CACHE)")

    parser = argparse.ArgumentParser(prog="mzvreg", description="Multiple zeta value regularization toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    typ = dict(choices=[p.value for p in Product], help="stuffle or shuffle")

    p = sub.add_parser("product", parents=[common], help="stuffle/shuffle product of two indices")
    p.add_argument("--type", required=True, **typ)
    p.add_argument("K", type=str)
    p.add_argument("L", type=str)

    p = sub.add_parser("regularize", parents=[common], help="regularized polynomial ζ^•(K;T)")
    p.add_argument("--type", required=True, **typ)
    p.add_argument("K", type=str)

    p = sub.add_parser("rho", parents=[common], help="ρ(ζ*(K;T))")
    p.add_argument("K", type=str)

    p = sub.add_parser("bivariate", parents=[common], help="ζ_{x,y}^•(K;T)")
    p.add_argument("--type", required=True, **typ)
    p.add_argument("K", type=str)

    p = sub.add_parser("eval", parents=[common], help="numeric ζ(K) for admissible K")
    p.add_argument("K", type=str)
    p.add_argument("--digits", type=_digits_arg, default=DEFAULT_DIGITS)

    p = sub.add_parser("verify", parents=[common], help="sweep an identity over all indices")
    p.add_argument("--identity", required=True, choices=IDENTITIES)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--digits", type=_digits_arg, default=DEFAULT_DIGITS)
    p.add_argument("--tol", type=_tol_arg, default=V.DEFAULT_TOL)
    p.add_argument("--type", default=None, **typ)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-recheck", action="store_true", help="skip the digits+10 rerun")
    return parser


def _expr_records(e: MzvExpr, **extra):
    for m, c in e:
        yield {**extra, "coeff": str(c), "monomial": [format_index(f) for f in m], "text": format_monomial(m) or "1"}


def _emit_reg(p: RegPolynomial, structured: bool, out) -> None:
    if not structured:
        print(format_reg_polynomial(p), file=out)
        return
    for j, c in p.terms():
        for rec in _expr_records(c, T=j):
            print(json.dumps(rec, ensure_ascii=False), file=out)


def _emit_bivariate(p: BivariatePolynomial, structured: bool, out) -> None:
    if not structured:
        print(format_bivariate(p), file=out)
        return
    for (a, b, j), c in p.terms():
        for rec in _expr_records(c, x=a, y=b, T=j):
            print(json.dumps(rec, ensure_ascii=False), file=out)


def _run_verify(args, cache: EvalCache, out) -> int:
    ident, w = args.identity, args.max_weight
    if w < 0:
        raise DomainError("--max-weight must be nonnegative")
    kinds = [Product(args.type)] if args.type else [Product.STUFFLE, Product.SHUFFLE]
    numeric = dict(digits=args.digits, tol=args.tol, cache=cache, recheck=not args.no_recheck)
    if ident == "ikz":
        reports = [V.verify_regularization_theorem(w, workers=args.workers, **numeric)]
    elif ident == "main":
        reports = [V.verify_main_theorem(w, workers=args.workers, **numeric)]
    elif ident == "t-independence":
        reports = [V.verify_t_independence(w, which=t, workers=args.workers, **numeric) for t in kinds]
    elif ident == "stuffle-hom-xy":
        reports = [V.verify_stuffle_hom_xy(w, workers=args.workers)]
    elif ident == "reg-coeff":
        reports = [V.verify_reg_coeff(w, t, workers=args.workers) for t in kinds]
    elif ident == "product-hom":
        reports = [V.verify_product_hom(w, t, workers=args.workers, **numeric) for t in kinds]
    else:
        reports = [V.verify_a_splitting(w)]
    for report in reports:
        if args.output == "structured":
            for line in report.json_lines():
                print(line, file=out)
        else:
            for rec in report.failures:
                print(f"  fail {rec.label}: {json.dumps(rec.to_dict(), ensure_ascii=False)}", file=out)
            print(report.summary(), file=out)
    return 0 if all(r.passed for r in reports) else 1


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    structured = args.output == "structured"
    cache = resolve_cache(args.cache)
    try:
        for name in ("K", "L"):
            if hasattr(args, name):
                setattr(args, name, parse_index(getattr(args, name)))
        if args.command == "product":
            combo = product(args.K, args.L, args.type)
            if structured:
                for k, c in combo:
                    print(json.dumps({"index": format_index(k), "coeff": str(c)}), file=out)
            else:
                print(format_combination(combo), file=out)
        elif args.command == "regularize":
            _emit_reg(regularize(args.K, args.type), structured, out)
        elif args.command == "rho":
            _emit_reg(apply_rho(regularize(args.K, Product.STUFFLE)), structured, out)
        elif args.command == "bivariate":
            _emit_bivariate(zeta_xy(args.K, args.type), structured, out)
        elif args.command == "eval":
            value = format_value(eval_index(args.K, args.digits, cache), args.digits)
            if structured:
                print(json.dumps({"index": format_index(args.K), "digits": args.digits, "value": value}), file=out)
            else:
                print(value, file=out)
        else:
            return _run_verify(args, cache, out)
    except DomainError as exc:
        print(f"mzvreg: error: {exc}", file=sys.stderr)
        return 1
    finally:
        try:
            cache.save()
        except OSError as exc:
            print(f"mzvreg: warning: could not write cache: {exc}", file=sys.stderr)
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
