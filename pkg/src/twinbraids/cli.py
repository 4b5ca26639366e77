"""Command-line interface.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input
error.  Every subcommand accepts --json for a machine-readable report with
the schema {command, inputs, results: [{check, expected, actual, pass}],
elapsed_ms}; output is deterministic for fixed arguments and --seed except
for the elapsed/wall-time fields.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import TwinBraidError
from .graph_words import normal_form, twin_graph, word_from_text, word_to_text
from .p6 import (
    catalog_export,
    decompose_p6,
    normal_form_to_text,
    realize_p6,
)
from .twin_braids import (
    is_pure,
    permutation_of,
    shuffle_word,
    triple_from_text,
)
from .verify import run_suite


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized suites")

    parser = argparse.ArgumentParser(
        prog="twinbraids",
        description="Planar braid words, bicoloured decompositions, and the "
                    "normal form for pure braids on six strands.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common],
                       help="canonical normal form of a word")
    p.add_argument("strands", type=int)
    p.add_argument("word", help="whitespace-separated letters, e.g. '1 3 1'")

    p = sub.add_parser("perm", parents=[common],
                       help="underlying permutation and purity")
    p.add_argument("strands", type=int)
    p.add_argument("word")

    p = sub.add_parser("shuffle", parents=[common],
                       help="shuffle braid word of a triple, e.g. 136")
    p.add_argument("triple")

    p = sub.add_parser("decompose", parents=[common],
                       help="normal form of a pure braid on six strands")
    p.add_argument("word", nargs="?", default=None)
    p.add_argument("--realize", action="store_true",
                   help="echo the braid word reconstructed from the syllables")
    p.add_argument("--catalog", action="store_true",
                   help="dump the generator catalog as JSON")

    p = sub.add_parser("verify", parents=[common],
                       help="run an invariant suite")
    p.add_argument("suite", choices=["table1", "prop4", "prop6", "theorem2",
                                     "lemma5", "wordproblem", "h1", "all"])
    p.add_argument("n", nargs="?", type=int, default=None,
                   help="strand count for the h1 suite")
    return parser


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _result(check: str, actual, expected=None) -> dict:
    return {
        "check": check,
        "expected": expected,
        "actual": actual,
        "pass": True if expected is None else expected == actual,
    }


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    t0 = time.perf_counter()
    try:
        if args.command == "nf":
            g = twin_graph(args.strands)
            w = word_from_text(args.word, g)
            nf = word_to_text(normal_form(g, w))
            payload = {
                "command": "nf",
                "inputs": {"strands": args.strands, "word": args.word},
                "results": [_result("normal_form", nf)],
                "elapsed_ms": _ms(t0),
            }
            _emit(args, payload, [nf])
            return 0

        if args.command == "perm":
            g = twin_graph(args.strands)
            w = word_from_text(args.word, g)
            images = permutation_of(args.strands, w)
            pure = images == tuple(range(1, args.strands + 1))
            payload = {
                "command": "perm",
                "inputs": {"strands": args.strands, "word": args.word},
                "results": [
                    _result("images", " ".join(map(str, images))),
                    _result("pure", pure),
                ],
                "elapsed_ms": _ms(t0),
            }
            _emit(args, payload, [
                "images: " + " ".join(map(str, images)),
                f"pure: {'yes' if pure else 'no'}",
            ])
            return 0

        if args.command == "shuffle":
            t = triple_from_text(args.triple)
            text = word_to_text(shuffle_word(t))
            payload = {
                "command": "shuffle",
                "inputs": {"triple": args.triple},
                "results": [_result("shuffle_word", text)],
                "elapsed_ms": _ms(t0),
            }
            _emit(args, payload, [text])
            return 0

        if args.command == "decompose":
            return _cmd_decompose(args, t0)

        if args.command == "verify":
            return _cmd_verify(args, t0)
    except TwinBraidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000.0, 3)


def _cmd_decompose(args, t0: float) -> int:
    results = []
    lines = []
    if args.catalog:
        export = catalog_export()
        results.append(_result("catalog", export))
        lines.append(json.dumps(export))
    if args.word is not None:
        g = twin_graph(6)
        w = word_from_text(args.word, g)
        nf = decompose_p6(w)
        text = normal_form_to_text(nf)
        results.append(_result("decompose", text.split("\n")))
        lines.extend(text.split("\n"))
        if args.realize:
            braid = word_to_text(realize_p6(nf))
            results.append(_result("realize", braid))
            lines.append("realize: " + braid)
    elif not args.catalog:
        print("error: decompose needs a word or --catalog", file=sys.stderr)
        return 2
    payload = {
        "command": "decompose",
        "inputs": {"word": args.word, "realize": args.realize,
                   "catalog": args.catalog},
        "results": results,
        "elapsed_ms": _ms(t0),
    }
    _emit(args, payload, lines)
    return 0


def _cmd_verify(args, t0: float) -> int:
    if args.suite == "h1" and args.n is None:
        print("error: verify h1 needs a strand count", file=sys.stderr)
        return 2
    try:
        reports = run_suite(args.suite, seed=args.seed, h1_n=args.n)
    except KeyError:
        print(f"error: unknown suite {args.suite}", file=sys.stderr)
        return 2
    results = []
    lines = []
    ok = True
    for rep in reports:
        for c in rep.checks:
            results.append({
                "check": f"{rep.name}.{c.check}",
                "expected": _jsonable(c.expected),
                "actual": _jsonable(c.actual),
                "pass": c.passed,
            })
        status = "OK" if rep.passed else "FAIL"
        ok = ok and rep.passed
        counts = f"{sum(c.passed for c in rep.checks)}/{len(rep.checks)} checks"
        lines.append(f"{rep.name}: {counts} — {status} "
                     f"[wall {rep.elapsed_ms:.0f} ms]")
        for c in rep.checks:
            if not c.passed:
                lines.append(f"  FAIL {c.check}: expected {c.expected!r}, "
                             f"got {c.actual!r}")
    payload = {
        "command": f"verify {args.suite}",
        "inputs": {"suite": args.suite, "n": args.n, "seed": args.seed},
        "results": results,
        "elapsed_ms": _ms(t0),
    }
    _emit(args, payload, lines)
    return 0 if ok else 1


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    return value


if __name__ == "__main__":
    sys.exit(main())
