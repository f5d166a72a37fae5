"""Command-line front end.

Usage:
    kn-divisors reduce 0,2,0,6,1 [--n 5] [--trace] [--json]
    kn-divisors concentrate 0,2,0,6,1
    kn-divisors rank 0,2,0,6,1
    kn-divisors splitting 0,2,0,6,1
    kn-divisors equiv 1,1,1,1,1 0,0,5,0,0 [--quiet]
    kn-divisors enumerate --n 3 --degree 3
    kn-divisors verify --suite riemann-roch --n 3..7 --samples 500 --seed 7

Exit codes: 0 success (or equivalent), 1 not equivalent / a suite failed,
2 usage, parse or guard error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .divisor import format_divisor, parse_divisor
from .enumeration import enumerate_splitting_types
from .oracle import OracleGuardError
from .rank import rank, splitting_type
from .reduce import concentrate, equivalent, reduce_with_trace
from .verify import SUITES, VerifyConfig, run_suite

# lets "-1,0,2" through as a positional argument
_NEGATIVE_DIVISOR = re.compile(r"^-\d+(,-?\d+)*$")


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, ...]:
    """``"4"`` -> (4,), ``"3..7"`` -> (3, 4, 5, 6, 7)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = tuple(range(int(lo), int(hi) + 1))
        else:
            values = (int(text),)
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


def _emit(args, command: str, inp, output, text_lines, extra=None) -> None:
    if args.json:
        payload = {"command": command, "input": inp, "output": output}
        if extra:
            payload.update(extra)
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _divisor_arg(args, name="divisor"):
    try:
        return parse_divisor(getattr(args, name), args.n)
    except (ValueError, OverflowError) as exc:
        raise UsageError(str(exc)) from None


def cmd_reduce(args) -> int:
    D = _divisor_arg(args)
    R, trace = reduce_with_trace(D)
    lines = []
    extra = None
    if args.trace:
        for fired, result in trace.steps:
            lines.append(f"fire {{{','.join(map(str, sorted(fired)))}}} -> {format_divisor(result)}")
        extra = {
            "trace": [
                {"fired": sorted(fired), "divisor": format_divisor(result)}
                for fired, result in trace.steps
            ]
        }
    lines.append(format_divisor(R))
    _emit(args, "reduce", format_divisor(D), format_divisor(R), lines, extra)
    return 0


def cmd_concentrate(args) -> int:
    D = _divisor_arg(args)
    C = concentrate(D)
    _emit(args, "concentrate", format_divisor(D), format_divisor(C), [format_divisor(C)])
    return 0


def cmd_rank(args) -> int:
    D = _divisor_arg(args)
    r = rank(D)
    _emit(args, "rank", format_divisor(D), r, [str(r)])
    return 0


def cmd_splitting(args) -> int:
    D = _divisor_arg(args)
    S = str(splitting_type(D))
    _emit(args, "splitting", format_divisor(D), S, [S])
    return 0


def cmd_equiv(args) -> int:
    D1 = _divisor_arg(args, "first")
    D2 = _divisor_arg(args, "second")
    if D1.n != D2.n:
        raise UsageError(f"divisors have {D1.n} and {D2.n} coefficients")
    same = equivalent(D1, D2)
    if args.quiet:
        return 0 if same else 1
    _emit(
        args,
        "equiv",
        [format_divisor(D1), format_divisor(D2)],
        same,
        ["true" if same else "false"],
    )
    return 0


def cmd_enumerate(args) -> int:
    try:
        types = enumerate_splitting_types(args.n, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = [str(S) for S in types]
    _emit(args, "enumerate", {"n": args.n, "degree": args.degree}, out, out)
    return 0


def cmd_verify(args) -> int:
    n_values = parse_range(args.n) if args.n else (4,)
    box = parse_range(args.box) if args.box else None
    if box is not None:
        box = (box[0], box[-1])
    cfg = VerifyConfig(
        n_values=n_values, box=box, seed=args.seed, samples=args.samples,
        exhaustive=args.exhaustive,
    )
    names = list(SUITES) if args.suite == "all" else [args.suite]
    try:
        results = [run_suite(name, cfg) for name in names]
    except OracleGuardError as exc:
        raise UsageError(str(exc)) from None
    ok = all(r.passed for r in results)
    _emit(
        args,
        "verify",
        {"suite": args.suite, "n": list(n_values), "seed": args.seed, "samples": args.samples,
         "exhaustive": args.exhaustive},
        [r.as_dict() for r in results],
        [r.line() for r in results],
    )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kn-divisors",
        description="Reduced forms, ranks and splitting types of divisors on K_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, divisors=("divisor",)):
        p = sub.add_parser(name, help=help_text)
        p._negative_number_matcher = _NEGATIVE_DIVISOR
        for d in divisors:
            p.add_argument(d, help="comma-separated coefficients a_1,...,a_n")
        p.add_argument("--n", type=int, help="vertex count, checked against the list")
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.set_defaults(func=func)
        return p

    p = add("reduce", cmd_reduce, "v_n-reduced representative")
    p.add_argument("--trace", action="store_true", help="show every firing")
    add("concentrate", cmd_concentrate, "concentrated representative")
    add("rank", cmd_rank, "Baker-Norine rank")
    add("splitting", cmd_splitting, "splitting type, non-increasing")
    p = add("equiv", cmd_equiv, "linear equivalence test", divisors=("first", "second"))
    p.add_argument("--quiet", action="store_true", help="no output; exit 0 if equivalent, else 1")

    p = sub.add_parser("enumerate", help="all feasible splitting types of a degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check closed forms against brute force")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--n", help="vertex count or range like 3..7")
    p.add_argument("--box", help="coefficient range, e.g. --box=-4..14")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=300)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
