"""Command-line interface.

Examples::

    binomgcd ord --n 6 --k 3 --p 2
    binomgcd gcd --n 30 --q 2 --factored
    binomgcd predict --n 30 --q 2 --p 7
    binomgcd witness --n 30 --q 2 --p 5
    binomgcd verify --n-max 200 --q-max 8 --jobs 4 --json
    binomgcd table --q 2 --n-max 30

Exit codes: 0 ok, 1 usage error, 2 strict-mode mismatch.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .binomial_gcd import SteppedFamily, format_factors, gcd_exact, gcd_factored, gcd_valuation_fast
from .harness import MODES, format_table, records_to_csv, records_to_jsonl, verify_grid
from .primes_digits import PrimeBase, alpha, minimal_representation
from .theorem_q import (check_weakened_hypothesis, predict_theorem_q, predict_weakened,
                        witness_unit_valuation, witness_zero_valuation)
from .valuation import ord_p_binomial_kummer

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _decimal(text: str) -> int:
    if not re.fullmatch(r"-?[0-9]+", text):
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


def _prime(text: str) -> PrimeBase:
    try:
        return PrimeBase(_decimal(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family(args) -> SteppedFamily:
    try:
        return SteppedFamily(args.n, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="binomgcd", description="GCDs and p-adic valuations of stepped binomial families.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="JSON output")
        g.add_argument("--csv", action="store_true", help="CSV output")

    sp = sub.add_parser("ord", help="ord_p C(n, k) by carry counting")
    sp.add_argument("--n", type=_decimal, required=True)
    sp.add_argument("--k", type=_decimal, required=True)
    sp.add_argument("--p", type=_prime, required=True)
    fmt(sp)

    sp = sub.add_parser("gcd", help="GCD of C(n, qk) over 0 < qk < n")
    sp.add_argument("--n", type=_decimal, required=True)
    sp.add_argument("--q", type=_decimal, default=1)
    sp.add_argument("--factored", action="store_true", help="print the prime factorization")
    fmt(sp)

    sp = sub.add_parser("predict", help="closed-form prediction vs oracle for one (n, q, p)")
    sp.add_argument("--n", type=_decimal, required=True)
    sp.add_argument("--q", type=_decimal, default=1)
    sp.add_argument("--p", type=_prime, required=True)
    fmt(sp)

    sp = sub.add_parser("witness", help="explicit index attaining the minimal valuation")
    sp.add_argument("--n", type=_decimal, required=True)
    sp.add_argument("--q", type=_decimal, default=1)
    sp.add_argument("--p", type=_prime, required=True)
    fmt(sp)

    sp = sub.add_parser("verify", help="check predictions over a grid")
    sp.add_argument("--n-max", type=_decimal, default=100)
    sp.add_argument("--q-max", type=_decimal, default=4)
    sp.add_argument("--mode", choices=MODES, default="strict")
    sp.add_argument("--exact-limit", type=_decimal, default=200,
                    help="cross-check against the exact GCD for n up to this bound")
    sp.add_argument("--jobs", type=_decimal, default=1)
    fmt(sp)

    sp = sub.add_parser("table", help="factored family GCDs for each n")
    sp.add_argument("--q", type=_decimal, default=2)
    sp.add_argument("--n-max", type=_decimal, required=True)
    fmt(sp)
    return parser


def _emit_rows(args, rows: list[dict], text: str, out) -> None:
    if args.json:
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif args.csv:
        keys = list(rows[0]) if rows else []
        out.write(",".join(keys) + "\n")
        for row in rows:
            out.write(",".join(str(row[k]) for k in keys) + "\n")
    else:
        out.write(text)


def cmd_ord(args, out) -> int:
    try:
        v = ord_p_binomial_kummer(args.n, args.k, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit_rows(args, [{"n": args.n, "k": args.k, "p": int(args.p), "ord": v}], f"{v}\n", out)
    return EXIT_OK


def cmd_gcd(args, out) -> int:
    family = _family(args)
    if args.factored:
        fg = gcd_factored(family)
        if args.csv:
            factors = format_factors(fg.factors)
        else:
            factors = {str(p): e for p, e in sorted(fg.factors.items())}
        row = {"n": family.n, "q": family.q, "gcd": fg.value, "factors": factors}
        text = f"{fg}\n"
    else:
        g = gcd_exact(family)
        row = {"n": family.n, "q": family.q, "gcd": g}
        text = f"{g}\n"
    _emit_rows(args, [row], text, out)
    return EXIT_OK


def cmd_predict(args, out) -> int:
    family = _family(args)
    pred = predict_theorem_q(family, args.p)
    actual = gcd_valuation_fast(family, args.p)
    row = {"n": family.n, "q": family.q, "p": int(args.p), "alpha": alpha(family.n, args.p),
           "applicable": pred.applicable, "predicted": pred.predicted_ord, "actual": actual}
    if pred.applicable:
        lines = [f"applicable, ord {pred.predicted_ord}",
                 f"oracle ord {actual} ({'match' if actual == pred.predicted_ord else 'MISMATCH'})"]
    else:
        lines = ["not applicable", f"oracle ord {actual}"]
        holds, c = check_weakened_hypothesis(family.n, family.q, args.p)
        if holds:
            w = predict_weakened(family.n, family.q, args.p).predicted_ord
            row["weakened_predicted"] = w
            lines.insert(1, f"weakened hypothesis (residue {c}): experimental ord {w}")
    _emit_rows(args, [row], "\n".join(lines) + "\n", out)
    return EXIT_OK


def cmd_witness(args, out) -> int:
    family = _family(args)
    if (args.p - 1) % family.q:
        raise UsageError(f"p={int(args.p)} is not 1 mod q={family.q}")
    r = len(minimal_representation(family.n, args.p))
    w = witness_zero_valuation(family, args.p) if r > family.q else witness_unit_valuation(family, args.p)
    row = {"n": family.n, "q": family.q, "p": w.p, "index": w.index, "ord": w.asserted_ord,
           "valid": w.is_valid()}
    text = f"index {w.index}, ord {w.asserted_ord} (C({family.n},{w.index}))\n"
    _emit_rows(args, [row], text, out)
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    if args.n_max <= 2:
        raise UsageError(f"--n-max must be > 2, got {args.n_max}")
    if args.q_max < 1:
        raise UsageError(f"--q-max must be >= 1, got {args.q_max}")
    if args.jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
    report = verify_grid(args.n_max, args.q_max, args.mode, args.exact_limit, args.jobs)
    if args.json:
        out.write(records_to_jsonl(report.records))
        err.write(json.dumps(report.summary()) + "\n")
    elif args.csv:
        out.write(records_to_csv(report.records))
        err.write(json.dumps(report.summary()) + "\n")
    else:
        out.write(format_table(report))
    return EXIT_MISMATCH if report.failed else EXIT_OK


def cmd_table(args, out) -> int:
    if args.q < 1:
        raise UsageError(f"--q must be >= 1, got {args.q}")
    rows, lines = [], [f"{'n':>6}  GCD_(0<k<n/{args.q}) C(n, {args.q}k)"]
    for n in range(args.q + 1, args.n_max + 1):
        fg = gcd_factored(SteppedFamily(n, args.q))
        rows.append({"n": n, "q": args.q, "gcd": fg.value, "factors": format_factors(fg.factors)})
        lines.append(f"{n:>6}  {fg}")
    _emit_rows(args, rows, "\n".join(lines) + "\n", out)
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        handler = {"ord": cmd_ord, "gcd": cmd_gcd, "predict": cmd_predict,
                   "witness": cmd_witness, "table": cmd_table}[args.command]
        return handler(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
