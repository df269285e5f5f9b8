"""Command-line interface: count, enum, sample, verify, oracle."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from swisscheese.characteristics import parse_characteristic
from swisscheese.counting import count
from swisscheese.generation import enumerate_cheeses
from swisscheese.normal_forms import count_nf
from swisscheese.oracle import BUDGET, oracle_count
from swisscheese.refdata import verify
from swisscheese.sampling import EmptyDomain, SamplerConfig, sample
from swisscheese.terms import Family, SizeModel, TermClass, print_debruijn, print_named

CLASS_NAMES = {"all": TermClass.ALL, "nf": TermClass.NORMAL, "normal": TermClass.NORMAL}


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _characteristic(text: str):
    try:
        return parse_characteristic(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_selectors(p: argparse.ArgumentParser, characteristic: bool = True) -> None:
    p.add_argument("--family", required=True, type=Family, choices=list(Family),
                   metavar="{linear,affine}")
    p.add_argument("--size", required=True, type=SizeModel, choices=list(SizeModel),
                   metavar="{natural,var0,var1}", help="size model")
    p.add_argument("--class", dest="term_class", default="all", choices=sorted(CLASS_NAMES),
                   help="all terms or beta-normal forms (nf, also spelled normal)")
    p.add_argument("--n", required=True, type=_natural, help="term size")
    if characteristic:
        p.add_argument("--characteristic", type=_characteristic, default=(),
                       metavar="m0,m1,...", help="holes per level (default: closed terms)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swisscheese",
        description="Count, enumerate and sample closed linear and affine lambda terms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of terms of a given size")
    _add_selectors(p)
    p.add_argument("--upto", action="store_true", help="print every size from 0 to N")

    p = sub.add_parser("enum", help="list every term, one per line, in canonical order")
    _add_selectors(p)
    p.add_argument("--format", default="debruijn", choices=["debruijn", "named"])

    p = sub.add_parser("sample", help="uniformly random closed terms")
    _add_selectors(p, characteristic=False)
    p.add_argument("--count", type=_natural, default=1)
    p.add_argument("--seed", type=_natural, default=0)

    p = sub.add_parser("verify", help="check counts against the bundled reference tables")
    p.add_argument("--max-n", type=_natural, default=40)

    p = sub.add_parser("oracle", help="brute-force count (small sizes only)")
    _add_selectors(p, characteristic=False)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def fail(code: int, message: str) -> int:
        print(f"swisscheese {args.command}: {message}", file=err)
        return code

    if args.command == "verify":
        report = verify(args.max_n)
        for line in report.lines():
            print(line, file=out)
        return 0 if report.ok else 1

    term_class = CLASS_NAMES[args.term_class]
    normal = term_class is TermClass.NORMAL

    if args.command == "count":
        counter = count_nf if normal else count
        sizes = range(args.n + 1) if args.upto else [args.n]
        for n in sizes:
            print(f"{n}\t{counter(args.family, args.size, n, args.characteristic)}", file=out)
        return 0

    if args.command == "enum":
        if args.format == "named" and args.characteristic:
            return fail(2, "--format named needs closed terms (empty --characteristic)")
        show = print_named if args.format == "named" else print_debruijn
        for t in enumerate_cheeses(args.family, args.size, term_class, args.n, args.characteristic):
            print(show(t), file=out)
        return 0

    if args.command == "sample":
        if args.seed >= 2**64:
            return fail(2, "--seed must fit in 64 bits")
        cfg = SamplerConfig(args.seed, args.family, args.size, term_class, args.n)
        try:
            terms = sample(cfg, args.count)
        except EmptyDomain as exc:
            return fail(3, str(exc))
        for t in terms:
            print(print_debruijn(t), file=out)
        return 0

    # oracle
    if args.n > BUDGET[args.size]:
        return fail(2, f"--n above the oracle cap of {BUDGET[args.size]} for {args.size.value}")
    print(f"{args.n}\t{oracle_count(args.family, args.size, term_class, args.n)}", file=out)
    return 0


def main() -> None:
    sys.exit(run())
