"""Command-line interface.

Commands:
  count N       print the number of rotation words of length N
  table N1,N2   rows n,f,ratio per requested length
  enumerate N   all rotation words of length N, lexicographically sorted
  verify        cross-check closed form vs both oracles plus invariants
  census N      word / multiplicity / class / predicted-multiplicity table
  sturmian N    one Farey interval's language and its left special word

Output is deterministic: words sort lexicographically, numbers render the
same regardless of parallelism.  Exit codes: 0 success, 1 verification
mismatch, 2 usage error, 3 resource guard.  Errors print one machine-parsable
line on stderr: ``error\tcode=<tag>\t<message>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .counting import CountReport, word_count
from .rationals import Fraction, farey_intervals, format_fraction
from .rotation import (
    Constant,
    classify,
    enumerate_rotation_words,
    enumerate_via_pairs,
    form_tag,
    predicted_pair_count,
)
from .sturmian import left_special_word, sturmian_language
from .verify import run_verification

EXIT_OK = 0
EXIT_VERIFY_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE_GUARD = 3

# Oracle enumeration above this length requires --allow-large.
GUARD_MAX_LENGTH = 40


class UsageError(Exception):
    def __init__(self, message: str, code: str = "usage"):
        super().__init__(message)
        self.code = code


class ResourceGuardError(Exception):
    pass


def _fail(stream, code: str, message: str) -> None:
    print(f"error\tcode={code}\t{message}", file=stream)


def _guard(n: int, allow_large: bool) -> None:
    if n > GUARD_MAX_LENGTH and not allow_large:
        raise ResourceGuardError(
            f"length {n} exceeds the default guard of {GUARD_MAX_LENGTH}; "
            "pass --allow-large to run anyway"
        )


def _count(n: int, method: str, parallelism: int, allow_large: bool) -> int:
    if n < 1:
        raise UsageError("length must be >= 1", code="out-of-range")
    if method == "closed":
        return word_count(n)
    _guard(n, allow_large)
    if method == "geometric":
        return len(enumerate_rotation_words(n, parallelism=parallelism))
    if method == "pairs":
        if n < 2:
            raise UsageError("pairs method needs length >= 2", code="out-of-range")
        return len(enumerate_via_pairs(n - 1, with_pairs=False, parallelism=parallelism))
    raise UsageError(f"unknown method {method!r}")


def _parse_fraction(text: str) -> Fraction:
    parts = text.split("/")
    try:
        if len(parts) == 2:
            return Fraction(int(parts[0]), int(parts[1]))
        if len(parts) == 1:
            return Fraction(int(parts[0]))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid fraction {text!r}: {exc}", code="invalid-fraction")
    raise UsageError(f"invalid fraction {text!r}", code="invalid-fraction")


def _parse_lengths(text: str) -> list[int]:
    try:
        lengths = [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise UsageError(f"invalid length list {text!r}: {exc}", code="out-of-range")
    if not lengths:
        raise UsageError("no lengths given", code="out-of-range")
    return lengths


def cmd_count(args) -> int:
    value = _count(args.n, args.method, args.parallel, args.allow_large)
    if args.format == "json":
        print(json.dumps({"n": args.n, "f": value, "method": args.method}))
    else:
        print(value)
    return EXIT_OK


def cmd_table(args) -> int:
    reports = [
        CountReport.make(n, _count(n, args.method, args.parallel, args.allow_large), args.method)
        for n in _parse_lengths(args.lengths)
    ]
    if args.format == "json":
        print(json.dumps(
            [{"n": r.n, "f": r.f, "ratio": r.ratio, "method": r.method} for r in reports]
        ))
        return EXIT_OK
    if args.format == "csv":
        print("n,f,ratio")
        for r in reports:
            print(f"{r.n},{r.f},{round(r.ratio, 2):.2f}")
        return EXIT_OK
    print(f"{'n':>5} {'f':>12} {'ratio':>6}")
    for r in reports:
        print(f"{r.n:>5} {r.f:>12} {round(r.ratio, 2):>6.2f}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n < 1:
        raise UsageError("length must be >= 1", code="out-of-range")
    _guard(args.n, args.allow_large)
    if args.method == "geometric":
        words = enumerate_rotation_words(args.n, parallelism=args.parallel)
    elif args.method == "pairs":
        if args.n < 2:
            raise UsageError("pairs method needs length >= 2", code="out-of-range")
        words = enumerate_via_pairs(
            args.n - 1, with_pairs=False, parallelism=args.parallel
        ).words()
    else:
        raise UsageError(f"unknown method {args.method!r}")
    for text in sorted(str(w) for w in words):
        print(text)
    return EXIT_OK


def cmd_census(args) -> int:
    if args.n < 2:
        raise UsageError("census needs word length >= 2", code="out-of-range")
    _guard(args.n - 1, args.allow_large)
    census = enumerate_via_pairs(args.n - 1, with_pairs=False, parallelism=args.parallel)
    rows = []
    for word in sorted(census.counts, key=str):
        form = classify(word)
        if isinstance(form, Constant) or args.n < 4:
            predicted = "-"
        else:
            predicted = str(predicted_pair_count(form, args.n))
        rows.append((str(word), census.counts[word], form_tag(form), predicted))
    if args.format == "json":
        print(json.dumps(
            [
                {"word": w, "multiplicity": m, "class": tag, "predicted": p}
                for w, m, tag, p in rows
            ]
        ))
    elif args.format == "csv":
        print("word,multiplicity,class,predicted")
        for w, m, tag, p in rows:
            print(f"{w},{m},{tag},{p}")
    else:
        for w, m, tag, p in rows:
            print(f"{w}\t{m}\t{tag}\t{p}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be >= 1", code="out-of-range")
    _guard(args.max, args.allow_large)
    results = run_verification(args.max, parallelism=args.parallel)
    ok = True
    for result in results:
        if result.passed:
            print(f"ok   {result.name}")
        else:
            ok = False
            print(f"FAIL {result.name}: {result.detail}")
    print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_VERIFY_MISMATCH


def cmd_sturmian(args) -> int:
    if args.n < 1:
        raise UsageError("length must be >= 1", code="out-of-range")
    _guard(args.n, args.allow_large)
    left = _parse_fraction(args.interval)
    matches = [
        iv for iv in farey_intervals(args.n, "full") if iv.left == left
    ]
    if not matches:
        raise UsageError(
            f"{format_fraction(left)} does not start a Farey interval of order {args.n}",
            code="invalid-fraction",
        )
    language = sturmian_language(args.n, matches[0])
    for text in sorted(str(w) for w in language.words):
        print(text)
    print(f"left-special\t{left_special_word(language)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotword",
        description="Count and enumerate binary rotation words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, methods=None, fmt=True):
        if methods:
            p.add_argument("--method", choices=methods, default=methods[0])
        if fmt:
            p.add_argument("--format", choices=["text", "csv", "json"], default="text")
        p.add_argument("--parallel", type=int, default=1, metavar="P",
                       help="worker threads for interval fan-out")
        p.add_argument("--allow-large", action="store_true",
                       help=f"lift the n <= {GUARD_MAX_LENGTH} oracle guard")

    p = sub.add_parser("count", help="print f(N)")
    p.add_argument("n", type=int)
    add_common(p, methods=["closed", "geometric", "pairs"])
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="rows n,f,ratio for a comma-separated list")
    p.add_argument("lengths")
    add_common(p, methods=["closed", "geometric", "pairs"])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="print all rotation words of length N")
    p.add_argument("n", type=int)
    add_common(p, methods=["geometric", "pairs"], fmt=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("census", help="pair multiplicity census for length N")
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="cross-check formulas, oracles and invariants")
    p.add_argument("--max", type=int, default=12, metavar="M")
    add_common(p, fmt=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sturmian", help="one interval's Sturmian language")
    p.add_argument("n", type=int)
    p.add_argument("--interval", required=True, metavar="q/p",
                   help="left endpoint of a Farey interval of order N")
    add_common(p, fmt=False)
    p.set_defaults(func=cmd_sturmian)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _fail(sys.stderr, exc.code, str(exc))
        return EXIT_USAGE
    except ResourceGuardError as exc:
        _fail(sys.stderr, "resource-guard", str(exc))
        return EXIT_RESOURCE_GUARD
    except ValueError as exc:
        _fail(sys.stderr, "usage", str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
