"""Command line interface.

    $ lenstc bounds --m 3 --n 4 --format json
    $ lenstc table --m-range 3..10 --n-range 0..12 --format csv --out table.csv
    $ lenstc alpha 3 14
    $ lenstc binom 3 14 14
    $ lenstc excess --op "sq 2 1"
    $ lenstc cuplength --m 3 --n 1

Exit codes: 0 success, 2 usage error, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import sys

from . import output
from .bounds import tc_report, tc_table
from .cohomology import LensParams
from .errors import ConsistencyError
from .operations import CertificateKind, certify_weight, parse_operation
from .padic import alpha_p, binomial_valuation
from .weights import canonical_zero_divisors, unweighted_cup_length, weighted_lower_bound

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONSISTENCY = 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"a..b"`` inclusive, or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected a..b") from None
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _params(m: int, n: int) -> LensParams:
    try:
        return LensParams(m, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror or exc}") from None


def cmd_bounds(args) -> None:
    report = tc_report(_params(args.m, args.n))
    if args.format == "json":
        _emit(output.to_json(output.report_record(report)), args.out)
    elif args.format == "csv":
        _emit(output.to_csv([report]), args.out)
    else:
        text = output.to_text_table([report])
        text += "".join(f"note: {note}\n" for note in report.notes)
        _emit(text, args.out)


def cmd_table(args) -> None:
    ms, ns = parse_range(args.m_range), parse_range(args.n_range)
    for m in ms:
        for n in ns:
            _params(m, n)
    _emit(output.format_reports(tc_table(ms, ns), args.format), args.out)


def cmd_alpha(args) -> None:
    value = alpha_p(args.p, args.n)
    if args.format == "json":
        _emit(output.to_json({"p": args.p, "n": args.n, "alpha": value}), None)
    else:
        _emit(f"{value}\n", None)


def cmd_binom(args) -> None:
    cert = binomial_valuation(args.p, args.n, args.m)
    if args.format == "json":
        _emit(output.to_json(output.valuation_record(cert)), None)
    else:
        positions = " ".join(map(str, cert.carry_positions)) or "-"
        _emit(f"valuation {cert.valuation}\ncarry positions {positions}\n", None)


def cmd_excess(args) -> None:
    op = parse_operation(args.op)
    rec = output.operation_record(op)
    if args.dim is not None:
        rec["certificate"] = output.certificate_record(
            certify_weight(op, args.dim, CertificateKind(args.kind)))
    if args.format == "json":
        _emit(output.to_json(rec), None)
        return
    lines = [f"operation {rec['label']}", f"degree {rec['degree']}"]
    if rec["admissible"] is not None:
        lines.append("admissible" if rec["admissible"] else "not admissible")
    if op.excess_exact is not None:
        lines.append(f"excess {op.excess_exact}")
    else:
        lines.append(f"excess >= {op.excess_lower_bound}")
    if "certificate" in rec:
        lines.append(rec["certificate"]["provenance"])
    _emit("\n".join(lines) + "\n", None)


def cmd_cuplength(args) -> None:
    params = _params(args.m, args.n)
    if args.weighted:
        res = weighted_lower_bound(params)
    else:
        gens = canonical_zero_divisors(params, widened=args.widened)
        res = unweighted_cup_length(params, gens, args.max_len)
    rec = output.cup_length_record(res)
    if args.format == "json":
        _emit(output.to_json(rec), None)
        return
    word = " * ".join(
        w["class"] if w["multiplicity"] == 1 else f"{w['class']}^{w['multiplicity']}"
        for w in rec["witness"]
    ) or "1"
    lines = [f"length {res.length}", f"weighted_sum {res.weighted_sum}",
             f"lower bound {res.bound}", f"witness {word}"]
    if res.pair is not None:
        lines.append(f"pair k={res.pair[0]} l={res.pair[1]}")
    _emit("\n".join(lines) + "\n", None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lenstc", description="Certified topological complexity bounds for lens spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="TC bounds for one lens space L_m^{2n+1}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", help="write to FILE instead of standard output")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="sweep over ranges of m and n")
    p.add_argument("--m-range", required=True, help="inclusive range a..b")
    p.add_argument("--n-range", required=True, help="inclusive range a..b")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", help="write to FILE instead of standard output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("alpha", help="carry-chain count alpha_p(n)")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("binom", help="p-adic valuation of C(n+m, n) with carry positions")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_binom)

    p = sub.add_parser("excess", help="degree and excess of a cohomology operation")
    p.add_argument("--op", required=True,
                   help='"bockstein [m]", "sq i1 i2 ..." or "pow p i1 i2 ..."')
    p.add_argument("--dim", type=int, help="certify weight 2 on a class of this dimension")
    p.add_argument("--kind", choices=[k.value for k in CertificateKind],
                   default=CertificateKind.TC_WEIGHT.value)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_excess)

    p = sub.add_parser("cuplength", help="zero-divisor cup-length search")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weighted", action="store_true",
                   help="weighted construction bar(x)*bar(y)^(k+l) instead of the search")
    p.add_argument("--widened", action="store_true",
                   help="search over bar(u) for every basis monomial u")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_cuplength)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ConsistencyError as exc:
        print(f"lenstc: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (UsageError, ValueError) as exc:
        print(f"lenstc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
