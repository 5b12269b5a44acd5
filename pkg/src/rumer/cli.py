"""Command-line front end: count, enumerate, straighten, verify, render.

Machine-readable contract: with --format json every subcommand writes a
single JSON document to stdout and diagnostics to stderr only.  Exit codes
are stable: 0 success, 1 verification failure, 2 usage or parse error.
Work guards are explicit flags with safe defaults, never silent truncation;
the rewrite budget can be overridden with the RUMER_FUEL environment
variable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .bijection import verify_psi_bijection
from .brackets import ParseError, parse as parse_polynomial, straighten
from .counting import (
    binomial,
    compositions,
    n_recurrence,
    rho_closed,
    rho_product,
    rho_sum_over_compositions,
)
from .diagrams import (
    ValenceScheme,
    enumerate_rumer,
    enumerate_rumer_by_multidegree,
)
from .oracle import basis_ok, expand, verify_basis
from .render import render_svg

OK, FAIL, USAGE = 0, 1, 2
DEFAULT_MAX_SCHEMES = 10**7


def _parse_multidegree(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not parts or any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError(f"multidegree entries must be nonnegative: {text!r}")
    return parts


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or LO..HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _fuel_from_env() -> int | None:
    raw = os.environ.get("RUMER_FUEL")
    if raw is None:
        return None
    try:
        value = int(raw)
        if value < 0:
            raise ValueError
    except ValueError:
        raise SystemExit(_usage_error(f"RUMER_FUEL must be a nonnegative integer, got {raw!r}"))
    return value


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return USAGE


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(payload if payload.endswith("\n") else payload + "\n")
    else:
        print(payload)


def _emit_json(document, out: str | None) -> None:
    _emit(json.dumps(document, indent=2), out)


def _scheme_space(n: int, m: int) -> int:
    """Number of loop-free multigraphs with m edges on n vertices."""
    return binomial(binomial(n, 2) + m - 1, m) if m else 1


def _cmd_count(args) -> int:
    method = args.method
    if args.multidegree is not None:
        if args.n is not None or args.m is not None:
            return _usage_error("--multidegree excludes --n/--m")
        d = args.multidegree
        if method in ("formula", "product"):
            return _usage_error(f"method {method!r} applies to --n/--m, not --multidegree")
        if method is None:
            method = "recurrence"
        counts: dict[str, int] = {}
        if method in ("recurrence", "all"):
            counts["recurrence"] = n_recurrence(d)
        if method in ("enumerate", "all"):
            predicted = n_recurrence(d)
            if predicted > args.max_schemes:
                return _usage_error(
                    f"{predicted} diagrams exceed the --max-schemes guard ({args.max_schemes})"
                )
            counts["enumerate"] = len(enumerate_rumer_by_multidegree(d))
        label = {"multidegree": list(d)}
    else:
        if args.n is None or args.m is None:
            return _usage_error("need --n and --m, or --multidegree")
        n, m = args.n, args.m
        if method is None:
            method = "formula"
        if method == "product" and n < 3:
            return _usage_error("--method product requires n >= 3")
        counts = {}
        if method in ("formula", "all"):
            counts["formula"] = rho_closed(n, m)
        if method in ("product", "all") and n >= 3:
            counts["product"] = rho_product(n, m)
        if method in ("recurrence", "all"):
            counts["recurrence"] = rho_sum_over_compositions(n, m)
        if method in ("enumerate", "all"):
            predicted = rho_closed(n, m)
            if predicted > args.max_schemes:
                return _usage_error(
                    f"{predicted} diagrams exceed the --max-schemes guard ({args.max_schemes})"
                )
            counts["enumerate"] = len(enumerate_rumer(n, m))
        label = {"n": n, "m": m}

    agree = len(set(counts.values())) == 1
    if method != "all":
        value = counts[method]
        if args.format == "json":
            _emit_json({**label, "method": method, "count": value}, args.out)
        elif args.format == "csv":
            _emit_csv_counts(counts, None, args.out)
        else:
            _emit(str(value), args.out)
        return OK
    if args.format == "json":
        _emit_json({**label, "counts": counts, "agree": agree}, args.out)
    elif args.format == "csv":
        _emit_csv_counts(counts, agree, args.out)
    else:
        lines = [f"{name}: {value}" for name, value in counts.items()]
        lines.append(f"agree: {str(agree).lower()}")
        _emit("\n".join(lines), args.out)
    return OK if agree else FAIL


def _emit_csv_counts(counts: dict, agree: bool | None, out: str | None) -> None:
    lines = ["method,count"]
    lines.extend(f"{name},{value}" for name, value in counts.items())
    if agree is not None:
        lines.append(f"agree,{str(agree).lower()}")
    _emit("\n".join(lines), out)


def _cmd_enumerate(args) -> int:
    if args.multidegree is not None:
        if args.n is not None or args.m is not None:
            return _usage_error("--multidegree excludes --n/--m")
        predicted = n_recurrence(args.multidegree)
        if predicted > args.max_schemes:
            return _usage_error(
                f"{predicted} diagrams exceed the --max-schemes guard ({args.max_schemes})"
            )
        diagrams = enumerate_rumer_by_multidegree(args.multidegree)
        label = {"multidegree": list(args.multidegree)}
    else:
        if args.n is None or args.m is None:
            return _usage_error("need --n and --m, or --multidegree")
        predicted = rho_closed(args.n, args.m)
        if predicted > args.max_schemes:
            return _usage_error(
                f"{predicted} diagrams exceed the --max-schemes guard ({args.max_schemes})"
            )
        diagrams = enumerate_rumer(args.n, args.m)
        label = {"n": args.n, "m": args.m}

    if args.format == "json":
        _emit_json(
            {**label, "count": len(diagrams), "diagrams": [d.scheme.to_json_dict() for d in diagrams]},
            args.out,
        )
    else:
        lines = [d.scheme.to_text() for d in diagrams]
        lines.append(f"count: {len(diagrams)}")
        _emit("\n".join(lines), args.out)
    return OK


def _cmd_straighten(args) -> int:
    try:
        poly = parse_polynomial(args.polynomial, args.n)
    except ParseError as exc:
        return _usage_error(str(exc))
    flat = straighten(poly, fuel=_fuel_from_env())
    verified = None
    if args.verify:
        verified = expand(flat) == expand(poly)
    if args.format == "json":
        document = {"input": args.polynomial, **flat.to_json_dict()}
        if verified is not None:
            document["verified"] = verified
        _emit_json(document, args.out)
    else:
        lines = [flat.to_text()]
        if verified is not None:
            lines.append(f"verify: {'pass' if verified else 'FAIL'}")
        _emit("\n".join(lines), args.out)
    return OK if verified in (None, True) else FAIL


def _verify_cell(n: int, m: int, fuel: int | None) -> dict:
    counts = {
        "formula": rho_closed(n, m),
        "recurrence": rho_sum_over_compositions(n, m),
        "enumerate": len(enumerate_rumer(n, m)),
    }
    if n >= 3:
        counts["product"] = rho_product(n, m)
    counts_agree = len(set(counts.values())) == 1
    basis = verify_basis(n, m, fuel=fuel)
    bijection_failures = []
    if n >= 2:
        for d in compositions(2 * m, n):
            report = verify_psi_bijection(d)
            if not report["bijection_ok"]:
                bijection_failures.append(report)
    cell_ok = counts_agree and basis_ok(basis) and not bijection_failures
    return {
        "n": n,
        "m": m,
        "counts": counts,
        "counts_agree": counts_agree,
        "basis": basis,
        "bijection_failures": bijection_failures,
        "ok": cell_ok,
    }


def _cmd_verify(args) -> int:
    n_lo, n_hi = args.n
    m_lo, m_hi = args.m
    if n_lo < 1:
        return _usage_error("--n must start at 1 or above")
    if m_lo < 0:
        return _usage_error("--m must start at 0 or above")
    fuel = _fuel_from_env()
    for n in range(n_lo, n_hi + 1):
        for m in range(m_lo, m_hi + 1):
            space = _scheme_space(n, m)
            if space > args.max_schemes:
                return _usage_error(
                    f"(n={n}, m={m}) needs {space} schemes, over the --max-schemes "
                    f"guard ({args.max_schemes})"
                )
    cells = [
        _verify_cell(n, m, fuel)
        for n in range(n_lo, n_hi + 1)
        for m in range(m_lo, m_hi + 1)
    ]
    all_ok = all(cell["ok"] for cell in cells)
    if args.format == "json":
        _emit_json({"ok": all_ok, "cells": cells}, args.out)
    else:
        lines = []
        for cell in cells:
            basis = cell["basis"]
            status = "ok" if cell["ok"] else "FAIL"
            lines.append(
                f"n={cell['n']} m={cell['m']}: {status} "
                f"(rho={basis['rho']} rumer_rank={basis['rumer_rank']} "
                f"full_rank={basis['full_rank']} counts_agree={str(cell['counts_agree']).lower()})"
            )
        lines.append("all checks passed" if all_ok else "FAILURES detected")
        _emit("\n".join(lines), args.out)
    return OK if all_ok else FAIL


def _cmd_render(args) -> int:
    text = args.diagram.strip()
    try:
        if text.startswith("{"):
            scheme = ValenceScheme.from_json(text)
        else:
            scheme = ValenceScheme.from_text(text)
    except (ValueError, KeyError, TypeError) as exc:
        return _usage_error(f"bad diagram: {exc}")
    _emit(render_svg(scheme, size=args.size), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rumer",
        description="Count, enumerate, straighten, verify, and render non-crossing "
        "valence diagrams.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    count = sub.add_parser("count", help="count diagrams by (n, m) or by multidegree")
    count.add_argument("--n", type=int)
    count.add_argument("--m", type=int)
    count.add_argument("--multidegree", type=_parse_multidegree)
    count.add_argument(
        "--method", choices=["formula", "product", "recurrence", "enumerate", "all"],
        help="default: formula for --n/--m, recurrence for --multidegree",
    )
    count.add_argument("--format", choices=["text", "json", "csv"], default="text")
    count.add_argument("--max-schemes", type=int, default=DEFAULT_MAX_SCHEMES)
    count.add_argument("--out")
    count.set_defaults(func=_cmd_count)

    enum = sub.add_parser("enumerate", help="list diagrams in canonical order")
    enum.add_argument("--n", type=int)
    enum.add_argument("--m", type=int)
    enum.add_argument("--multidegree", type=_parse_multidegree)
    enum.add_argument("--format", choices=["text", "json"], default="text")
    enum.add_argument("--max-schemes", type=int, default=DEFAULT_MAX_SCHEMES)
    enum.add_argument("--out")
    enum.set_defaults(func=_cmd_enumerate)

    flat = sub.add_parser("straighten", help="rewrite a bracket polynomial into the "
                          "non-crossing basis")
    flat.add_argument("polynomial", help="e.g. \"[1,3][2,4]\" or \"2*[1,2] - [2,1]\"")
    flat.add_argument("--n", type=int, required=True)
    flat.add_argument("--verify", action="store_true",
                      help="check the result against full coordinate expansion")
    flat.add_argument("--format", choices=["text", "json"], default="text")
    flat.add_argument("--out")
    flat.set_defaults(func=_cmd_straighten)

    verify = sub.add_parser("verify", help="run the full verification suite over ranges")
    verify.add_argument("--n", type=_parse_range, required=True, metavar="LO..HI")
    verify.add_argument("--m", type=_parse_range, required=True, metavar="LO..HI")
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.add_argument("--max-schemes", type=int, default=DEFAULT_MAX_SCHEMES)
    verify.add_argument("--out")
    verify.set_defaults(func=_cmd_verify)

    render = sub.add_parser("render", help="emit an SVG drawing of one diagram")
    render.add_argument(
        "--diagram", required=True,
        help="text form 'n=4; (1,2)(3,4)' or JSON {\"n\":..., \"edges\":[[i,j],...]}",
    )
    render.add_argument("--size", type=int, default=360)
    render.add_argument("--format", choices=["svg"], default="svg")
    render.add_argument("--out")
    render.set_defaults(func=_cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
