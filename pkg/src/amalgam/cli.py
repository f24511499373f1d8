"""Command-line interface: JSON on stdout, one-line diagnostics on stderr.

Exit codes: 0 success or pass, 1 property or witness-verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import List, Optional

from .amalgams import space_norm
from .cases import RandomCaseConfig
from .duality import holder_check, raw_pairing, rearranged_pairing
from .errors import AmalgamError
from .formats import dumps, function_to_json, load_function, parse_spec
from .laws import SUITES, run_suite
from .norms import Lebesgue
from .stepfn import as_profile
from .witnesses import (chlp_family, rwnbfs_p4_family, rwnbfs_p5_family, tem_global_witness,
                        tem_local_witness)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _workers() -> int:
    raw = os.environ.get("AMALGAM_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"AMALGAM_THREADS must be an integer, got {raw!r}") from None
    return max(1, value)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="amalgam", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    norm = sub.add_parser("norm", help="evaluate a norm")
    norm.add_argument("--spec", required=True)
    norm.add_argument("--fn", required=True, help="function file")

    rearr = sub.add_parser("rearrange", help="non-increasing rearrangement of a step function")
    rearr.add_argument("--fn", required=True)

    pair = sub.add_parser("pair", help="pairings and the Hölder bound")
    pair.add_argument("--fn-a", required=True)
    pair.add_argument("--fn-b", required=True)
    pair.add_argument("--spec", default="L:2", help="Lebesgue spec for the Hölder check")

    verify = sub.add_parser("verify", help="run a property suite")
    verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--cases", type=int, default=1000)
    verify.add_argument("--max-pieces", type=int, default=12)
    verify.add_argument("--spec", action="append", default=[],
                        help="space spec; the embedding suite takes it twice")
    verify.add_argument("--t", default="2", help="dilation factor")
    verify.add_argument("--N", type=int, default=10_000, help="family length")

    witness = sub.add_parser("witness", help="construct a certified witness")
    witness.add_argument("--name", required=True,
                         choices=["tem-local", "tem-global", "rwnbfs-p4", "rwnbfs-p5", "chlp"])
    for flag in ("--p", "--q", "--pA", "--pB", "--qB", "--qC", "--a", "--b"):
        witness.add_argument(flag)
    witness.add_argument("--N", type=int, default=10_000)
    return parser


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--name {args.name} needs " + ", ".join("--" + n for n in missing))
    return [getattr(args, n) for n in names]


def _witness(args):
    if args.name == "tem-local":
        return tem_local_witness(*_need(args, "pA", "pB"))
    if args.name == "tem-global":
        return tem_global_witness(*_need(args, "qB", "qC"))
    if args.name == "rwnbfs-p4":
        p, q = _need(args, "p", "q")
        return rwnbfs_p4_family(p, q, args.N, a=args.a)
    if args.name == "rwnbfs-p5":
        p, q = _need(args, "p", "q")
        return rwnbfs_p5_family(p, q, args.N, a=args.a, b=args.b)
    (p,) = _need(args, "p")
    return chlp_family(p, args.N)


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "norm":
        spec = parse_spec(args.spec)
        value = space_norm(spec, load_function(args.fn))
        print(dumps({"spec": str(spec), "value": value.to_json()}))
        return 0
    if args.command == "rearrange":
        print(dumps(function_to_json(as_profile(load_function(args.fn)))))
        return 0
    if args.command == "pair":
        spec = parse_spec(args.spec)
        if not isinstance(spec, Lebesgue):
            raise UsageError("pair --spec must be a Lebesgue spec L:<p>")
        f, g = load_function(args.fn_a), load_function(args.fn_b)
        report = holder_check(spec, f, g)
        print(dumps({"raw": raw_pairing(f, g).to_json(),
                     "rearranged": rearranged_pairing(f, g).to_json(),
                     "holder": report.to_json()}))
        return 0 if report.passed else 1
    if args.command == "verify":
        if args.cases < 1 or args.max_pieces < 1:
            raise UsageError("--cases and --max-pieces must be positive")
        cfg = RandomCaseConfig(seed=args.seed, cases=args.cases, max_pieces=args.max_pieces)
        specs = [parse_spec(s) for s in args.spec]
        report = run_suite(args.suite, cfg, specs, _workers(), Fraction(args.t), args.N)
        print(dumps(report.to_json()))
        return 0 if report.passed else 1
    bundle = _witness(args)
    print(dumps(bundle.to_json()))
    return 0 if bundle.verify() else 1


def main(argv: Optional[List[str]] = None) -> int:
    try:
        return run(argv)
    except (UsageError, AmalgamError, ValueError, ZeroDivisionError, OSError) as exc:
        message = " ".join(str(exc).split()) or type(exc).__name__
        print(f"amalgam: error: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
