"""Command-line front end.

Exit status: 0 success, 1 domain error, 2 usage error, 3 failed verification.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import codes, combinatorics, nu, poset, verify
from .combinatorics import format_composition, parse_composition, parse_permutation
from .errors import AlphaTamariError, NotAnAlphaPermutation
from .vectors import parse_vector

VALUE_KINDS = ("perm", "code", "reduced", "bracket")
ENUM_KINDS = ("perms", "avoiders", "codes", "reduced", "bracket")
HASSE_KINDS = {
    "weak": "weak-order",
    "tamari": "alpha-tamari",
    "code": "code",
    "reduced": "reduced",
    "bracket": "bracket",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alphatamari", description="alpha-Tamari lattices and their encodings")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help, formats=("text", "json"), alpha_required=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("--alpha", required=alpha_required, help="composition, e.g. 1,2,1")
        p.add_argument("--format", choices=formats, default=formats[0])
        return p

    p = add("encode", "alpha-code of a permutation")
    p.add_argument("--perm", required=True, help='space-separated, e.g. "3 1 4 2"')

    p = add("decode", "avoiding permutation of an alpha-code")
    p.add_argument("--code", required=True, help="comma-separated, e.g. 1,0,1,0")

    p = add("project", "greatest avoider below a permutation")
    p.add_argument("--perm", required=True)

    p = add("convert", "convert between the four incarnations")
    p.add_argument("--from", dest="source", choices=VALUE_KINDS, required=True)
    p.add_argument("--to", dest="target", choices=VALUE_KINDS, required=True)
    p.add_argument("--value", required=True)

    for name, help in (("enumerate", "list every element, one per line"), ("count", "number of elements")):
        p = add(name, help)
        p.add_argument("--kind", choices=ENUM_KINDS, required=True)

    p = add("hasse", "Hasse diagram as DOT or JSON", formats=("dot", "json"))
    p.add_argument("--kind", choices=sorted(HASSE_KINDS), required=True)
    p.add_argument("--labeling", choices=poset.LABELINGS, default="both")

    p = add("verify", "run the exhaustive checks", alpha_required=False)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--timings", action="store_true", help="include elapsed times (output is then not reproducible)")
    return parser


def _parse_value(alpha, kind, text):
    if kind == "perm":
        w = parse_permutation(alpha, text)
        witness = combinatorics.has_alpha_231_pattern(w)
        if witness is not None:
            raise NotAnAlphaPermutation(
                f"{w} has an (alpha,231)-pattern at (i,j,k)={witness}; use `project` to reach an avoider"
            )
        return w
    values = parse_vector(text)
    if kind == "code":
        return codes.validate_code(alpha, values)
    if kind == "reduced":
        return nu.validate_reduced(alpha, values)
    return nu.validate_bracket(alpha, values)


_STEPS_UP = {"perm": codes.encode, "code": nu.from_code, "reduced": nu.extend}
_STEPS_DOWN = {"bracket": nu.reduce, "reduced": nu.to_code, "code": codes.decode}


def convert(alpha, source: str, target: str, text: str):
    value = _parse_value(alpha, source, text)
    lo, hi = VALUE_KINDS.index(source), VALUE_KINDS.index(target)
    if lo <= hi:
        for kind in VALUE_KINDS[lo:hi]:
            value = _STEPS_UP[kind](value)
    else:
        for kind in reversed(VALUE_KINDS[hi + 1 : lo + 1]):
            value = _STEPS_DOWN[kind](value)
    return value


def _enumerate(alpha, kind):
    source = {
        "perms": combinatorics.enumerate_alpha_permutations,
        "avoiders": combinatorics.enumerate_avoiders,
        "codes": codes.enumerate_codes,
        "reduced": nu.enumerate_reduced,
        "bracket": nu.enumerate_brackets,
    }[kind]
    return source(alpha)


def _emit(out, args, alpha, result, extra=None):
    if args.format == "json":
        payload = {"alpha": format_composition(alpha), "command": args.command, "result": result}
        if extra:
            payload.update(extra)
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    elif isinstance(result, list):
        out.writelines(f"{x}\n" for x in result)
    else:
        out.write(f"{result}\n")


def _dispatch(args, out) -> int:
    if args.command == "verify":
        alpha = parse_composition(args.alpha) if args.alpha else None
        reports = verify.sweep(args.max_n, alpha)
        for rep in reports:
            if args.format == "json":
                out.write(rep.to_json(timings=args.timings) + "\n")
            else:
                out.write(rep.line(timings=args.timings) + "\n")
        failed = sum(not r.passed for r in reports)
        return 3 if failed else 0

    alpha = parse_composition(args.alpha)
    if args.command == "encode":
        _emit(out, args, alpha, str(codes.encode(parse_permutation(alpha, args.perm))))
    elif args.command == "decode":
        code = codes.validate_code(alpha, parse_vector(args.code))
        _emit(out, args, alpha, str(codes.decode(code)))
    elif args.command == "project":
        _emit(out, args, alpha, str(poset.projection(parse_permutation(alpha, args.perm))))
    elif args.command == "convert":
        value = convert(alpha, args.source, args.target, args.value)
        extra = {"entries": nu.bracket_annotations(value)} if args.target == "bracket" else None
        _emit(out, args, alpha, str(value), extra)
    elif args.command == "enumerate":
        _emit(out, args, alpha, [str(x) for x in _enumerate(alpha, args.kind)])
    elif args.command == "count":
        _emit(out, args, alpha, sum(1 for _ in _enumerate(alpha, args.kind)))
    elif args.command == "hasse":
        p = poset.build_poset(alpha, HASSE_KINDS[args.kind])
        if args.format == "dot":
            out.write(poset.export(p, "dot", args.labeling))
        else:
            _emit(out, args, alpha, poset.to_dict(p))
    return 0


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    saved = sys.stderr
    sys.stderr = err
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    finally:
        sys.stderr = saved
    try:
        return _dispatch(args, out)
    except (AlphaTamariError, ValueError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))
