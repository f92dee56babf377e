"""Command-line front end.

    qapery verify --theorem T1E1 --n 1..100 --m 1..3 --alpha 1..3 --out t1e1.jsonl
    qapery resume t1e1.jsonl
    qapery compute cyclotomic --d 6

Exit codes: 0 all pass, 1 a verification failed, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .apery import apery_poly, delannoy_poly, eta_product_coeffs, q_apery_poly
from .exact_arith import LaurentPoly
from .qcomb import cyclotomic
from .sweep import (EXIT_IO, EXIT_USAGE, THEOREM_PARAMS, SpecError, SweepSpec,
                    resume_sweep, run_sweep)
from .verify import TheoremId

RANGE_FLAGS = ("n", "m", "alpha", "d", "p", "a", "b", "h", "k")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_range(text: str) -> tuple[int, int]:
    """``"5"`` -> (5, 5); ``"1..100"`` -> (1, 100)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected lo..hi or an integer") from None


def _add_range_flags(p: argparse.ArgumentParser) -> None:
    for name in RANGE_FLAGS:
        p.add_argument(f"--{name}", metavar="LO..HI")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qapery", description="Verify Apéry-polynomial congruences exactly.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    v = sub.add_parser("verify", help="run a parameter sweep")
    v.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    _add_range_flags(v)
    v.add_argument("--sign", choices=["+1", "-1", "both"])
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--out", default="-", help="JSON-lines output path ('-' for stdout)")
    v.add_argument("--deterministic", action="store_true",
                   help="omit timing fields so repeated runs are byte-identical")

    r = sub.add_parser("resume", help="continue an interrupted sweep")
    r.add_argument("path")
    r.add_argument("--workers", type=int, default=1)
    r.add_argument("--theorem", choices=[t.value for t in TheoremId],
                   help="optional: refuse to resume unless the file matches this sweep")
    _add_range_flags(r)
    r.add_argument("--sign", choices=["+1", "-1", "both"])
    r.add_argument("--deterministic", action="store_true")

    c = sub.add_parser("compute", help="print one object as JSON")
    c.add_argument("family", choices=["apery", "delannoy", "q-apery", "cyclotomic", "eta"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--d", type=int)
    c.add_argument("--alpha", type=int, default=2)
    return parser


def _spec_from_args(args, out: str = "-", workers: int = 1) -> SweepSpec:
    tid = TheoremId(args.theorem)
    ranges = {}
    for name in RANGE_FLAGS:
        text = getattr(args, name)
        if text is not None:
            ranges[name] = parse_range(text)
    return SweepSpec(tid, ranges, args.sign, args.deterministic, workers, out)


def _compute(args) -> dict:
    fam = args.family
    if fam in ("apery", "delannoy", "eta"):
        if args.n is None:
            raise UsageError(f"{fam} needs --n")
    if args.alpha < 1:
        raise UsageError("--alpha must be >= 1")
    if fam == "apery":
        if args.n < 0:
            raise UsageError("--n must be >= 0")
        return apery_poly(args.n, args.alpha).to_json()
    if fam == "delannoy":
        if args.n < 0:
            raise UsageError("--n must be >= 0")
        return delannoy_poly(args.n).to_json()
    if fam == "q-apery":
        k = args.k if args.k is not None else args.n
        if k is None or k < 0:
            raise UsageError("q-apery needs --k >= 0")
        return q_apery_poly(k, args.alpha).to_json()
    if fam == "cyclotomic":
        if args.d is None or args.d < 1:
            raise UsageError("cyclotomic needs --d >= 1")
        return cyclotomic(args.d).to_json()
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    eta = eta_product_coeffs(args.n)
    return LaurentPoly(0, eta.coeffs).to_json()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand (verify, resume, compute)")
        if args.command == "compute":
            sys.stdout.write(json.dumps(_compute(args), separators=(",", ":")) + "\n")
            return 0
        if args.command == "verify":
            return run_sweep(_spec_from_args(args, args.out, args.workers))
        expected = _spec_from_args(args) if args.theorem else None
        return resume_sweep(args.path, expected, workers=args.workers)
    except (UsageError, SpecError) as exc:
        print(f"qapery: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qapery: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
