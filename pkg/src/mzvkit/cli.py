"""Command-line interface.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import finite_sums as fs
from . import numeric as num
from . import regularization as reg
from .algebra import Index, LinComb, Word, harmonic, shuffle
from .errors import CapExceededError, DomainError
from .verification import (
    OUT_OF_SCOPE_CLAIMS,
    CampaignConfig,
    campaign_for_claim,
    run_all,
    write_reports,
)


def parse_operand(text: str) -> LinComb:
    """Parse a word-or-index operand.

    "index:..." and "word:..." force an interpretation; otherwise strings made
    of 0/1 characters parse as words and anything else as a comma-separated
    index.  (A one-part index such as "10" needs the explicit prefix.)
    """
    if text.startswith("index:"):
        return LinComb.of_index(Index.parse(text[len("index:"):]))
    if text.startswith("word:"):
        return LinComb.of_word(Word.parse(text[len("word:"):]))
    if text == "" or set(text) <= {"0", "1"}:
        return LinComb.of_word(Word.parse(text))
    return LinComb.of_index(Index.parse(text))


def _parse_schedule(text: str) -> tuple[int, ...]:
    """Parse "a:b" into the doubling schedule a, 2a, 4a, ..., <= b."""
    try:
        lo_text, hi_text = text.split(":")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as exc:
        raise DomainError(f"schedule syntax is 'a:b', got {text!r}") from exc
    if lo < 2 or hi < lo:
        raise DomainError("schedule bounds must satisfy 2 <= a <= b")
    out = []
    n = lo
    while n <= hi:
        out.append(n)
        n *= 2
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzvkit",
        description="Word-algebra products, exact truncated zeta sums, "
        "regularization polynomials, and verification campaigns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_product = sub.add_parser("product", help="harmonic or shuffle product of two operands")
    p_product.add_argument("--op", choices=("harmonic", "shuffle"), required=True)
    p_product.add_argument("left", help="word (over 0/1) or index (comma-separated)")
    p_product.add_argument("right")

    p_sum = sub.add_parser("sum", help="exact truncated sum of an index or R-args")
    p_sum.add_argument("--kind", choices=("plain", "flat", "natural", "r"), default="plain")
    p_sum.add_argument("target", help="index like '1,2', or 'a1,..;b1,..' for --kind r")
    p_sum.add_argument("--n", type=int, required=True, dest="n_value")

    p_reg = sub.add_parser("regularize", help="decompose an index word into an H0 polynomial in T")
    p_reg.add_argument("--op", choices=("star", "sh"), required=True)
    p_reg.add_argument("index")

    p_mzv = sub.add_parser("mzv", help="numeric value of an admissible index")
    p_mzv.add_argument("index")
    p_mzv.add_argument("--tol", type=float, default=num.DEFAULT_MZV_TOL)

    p_verify = sub.add_parser("verify", help="run one claim campaign or all of them")
    p_verify.add_argument("claim", help="a claim id or 'all'")
    p_verify.add_argument("--max-weight", type=int, default=None)
    p_verify.add_argument("--n-schedule", type=str, default=None, help="'a:b' doubling schedule")
    p_verify.add_argument("--tol", type=float, default=None, help="override the residual tolerance")
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--workers", type=int, default=None)
    p_verify.add_argument("--out", type=str, default=None, help="directory for report files")
    p_verify.add_argument("--format", choices=("json", "csv"), default=None)

    return parser


def _config_from_args(args: argparse.Namespace) -> CampaignConfig:
    cfg = CampaignConfig()
    overrides = {}
    if args.max_weight is not None:
        overrides["max_weight"] = args.max_weight
    if args.n_schedule is not None:
        overrides["n_schedule"] = _parse_schedule(args.n_schedule)
    if args.tol is not None:
        overrides["edsr_tol"] = args.tol
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.out is not None:
        overrides["out_dir"] = args.out
    if args.format is not None:
        overrides["out_format"] = args.format
    try:
        return replace(cfg, **overrides)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _cmd_product(args: argparse.Namespace) -> int:
    op = harmonic if args.op == "harmonic" else shuffle
    result = op(parse_operand(args.left), parse_operand(args.right))
    print(json.dumps(result.serialize()))
    return 0


def _cmd_sum(args: argparse.Namespace) -> int:
    if args.kind == "r":
        value = fs.r_value(fs.RArgs.parse(args.target), args.n_value)
    else:
        k = Index.parse(args.target)
        evaluator = {"plain": fs.zeta_lt, "flat": fs.zeta_flat, "natural": fs.zeta_natural}[args.kind]
        value = evaluator(k, args.n_value)
    print(f"{value.numerator}/{value.denominator}")
    return 0


def _cmd_regularize(args: argparse.Namespace) -> int:
    k = Index.parse(args.index)
    poly = reg.z_star_polynomial(k) if args.op == "star" else reg.z_shuffle_polynomial(k)
    print(json.dumps(poly.serialize()))
    return 0


def _cmd_mzv(args: argparse.Namespace) -> int:
    value = num.mzv(Index.parse(args.index), args.tol)
    print(json.dumps(value.serialize()))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    if args.claim == "all":
        _, status = run_all(cfg, echo=print)
        return status
    if args.claim in OUT_OF_SCOPE_CLAIMS:
        print(f"{args.claim} is out of scope: {OUT_OF_SCOPE_CLAIMS[args.claim]}", file=sys.stderr)
        return 2
    campaign = campaign_for_claim(args.claim)
    reports = [r for r in campaign(cfg) if r.claim_id == args.claim]
    write_reports(reports, cfg)
    for report in reports:
        print(f"{report.claim_id}: {report.verdict.upper()} "
              f"({len(report.cases)} cases, {report.elapsed_ms:.0f} ms)")
    return 0 if all(r.passed for r in reports) else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    handlers = {
        "product": _cmd_product,
        "sum": _cmd_sum,
        "regularize": _cmd_regularize,
        "mzv": _cmd_mzv,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (DomainError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
