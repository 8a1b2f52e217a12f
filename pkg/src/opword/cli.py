"""Command-line surface for the rewriting engine.

Subcommands: normalize, matches, compare-order, placements, classify,
confluence-check, equiv.  Output is plain text by default or one JSON
object per result line with ``--json``.  Exit codes: 0 success, 1 parse
or usage error, 2 search limits exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .congruence import SearchLimits, bfs_equivalent
from .contexts import (
    Intersecting,
    Nested,
    Separated,
    classify,
    enumerate_placements,
    parse_context,
    placement_from_context,
)
from .order import Ordering, compare
from .rewrite import UniverseSpec, check_local_confluence, normalize, one_step_all
from .rules import SYSTEMS, match_instances
from .words import Alphabet, ParseError, parse, render

_ORDER_SYMBOL = {Ordering.LESS: "<", Ordering.EQUAL: "=", Ordering.GREATER: ">"}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--alphabet",
        default="x,y",
        help='comma-separated generator symbols; order sets their precedence (default "x,y")',
    )
    common.add_argument("--json", action="store_true", help="one JSON object per result line")

    system_opt = argparse.ArgumentParser(add_help=False)
    system_opt.add_argument(
        "--system", required=True, choices=sorted(SYSTEMS), help="rule system to use"
    )

    parser = argparse.ArgumentParser(
        prog="opword", description="Rewriting over bracketed words."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common, system_opt], help="rewrite a word to normal form")
    p.add_argument("--trace", action="store_true", help="print each rewrite step")
    p.add_argument("--seed", type=int, default=None, help="pick matches with a seeded RNG")
    p.add_argument("word")

    p = sub.add_parser("matches", parents=[common, system_opt], help="list every rule match in a word")
    p.add_argument("word")

    p = sub.add_parser("compare-order", parents=[common], help="compare two words in the word order")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("placements", parents=[common], help="list every subword placement")
    p.add_argument("word")

    p = sub.add_parser("classify", parents=[common], help="relative position of two placements")
    p.add_argument("host")
    p.add_argument("context1")
    p.add_argument("context2")

    p = sub.add_parser(
        "confluence-check", parents=[common, system_opt], help="exhaustive local-confluence check"
    )
    p.add_argument("--max-breadth", type=int, default=3)
    p.add_argument("--max-depth", type=int, default=2)
    p.add_argument("--max-size", type=int, default=7, help="total letter cap per word")

    p = sub.add_parser(
        "equiv", parents=[common, system_opt], help="search for a replacement chain between two words"
    )
    p.add_argument("--max-degx", type=int, default=6)
    p.add_argument("--max-breadth", type=int, default=8)
    p.add_argument("--max-visited", type=int, default=100_000)
    p.add_argument("word1")
    p.add_argument("word2")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1

    try:
        alphabet = Alphabet.from_string(args.alphabet)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        return _dispatch(args, alphabet)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args: argparse.Namespace, alphabet: Alphabet) -> int:
    if args.command == "normalize":
        return _cmd_normalize(args, alphabet)
    if args.command == "matches":
        return _cmd_matches(args, alphabet)
    if args.command == "compare-order":
        return _cmd_compare(args, alphabet)
    if args.command == "placements":
        return _cmd_placements(args, alphabet)
    if args.command == "classify":
        return _cmd_classify(args, alphabet)
    if args.command == "confluence-check":
        return _cmd_confluence(args, alphabet)
    if args.command == "equiv":
        return _cmd_equiv(args, alphabet)
    raise AssertionError(f"unhandled command {args.command}")


def _trace_record(step) -> dict:
    return {
        "rule": step.match.schema.value,
        "bindings": step.match.bindings_dict(),
        "context": render(step.match.placement.context.skeleton),
        "before": render(step.before),
        "after": render(step.after),
    }


def _cmd_normalize(args: argparse.Namespace, alphabet: Alphabet) -> int:
    word = parse(args.word, alphabet)
    system = SYSTEMS[args.system]
    nf, trace = normalize(system, word, seed=args.seed, alphabet=alphabet)
    if args.trace:
        for step in trace.steps:
            if args.json:
                print(json.dumps(_trace_record(step), sort_keys=True))
            else:
                rec = _trace_record(step)
                bindings = ",".join(f"{k}={v}" for k, v in sorted(rec["bindings"].items()))
                print(
                    f"{rec['rule']} {bindings} @ {rec['context']}: "
                    f"{rec['before']} -> {rec['after']}"
                )
    if args.json:
        print(
            json.dumps(
                {"input": render(word), "normal_form": render(nf), "steps": len(trace)},
                sort_keys=True,
            )
        )
    else:
        print(render(nf))
    return 0


def _cmd_matches(args: argparse.Namespace, alphabet: Alphabet) -> int:
    word = parse(args.word, alphabet)
    system = SYSTEMS[args.system]
    for match in match_instances(system, word):
        if args.json:
            print(
                json.dumps(
                    {
                        "schema": match.schema.value,
                        "bindings": match.bindings_dict(),
                        "context": render(match.placement.context.skeleton),
                        "lhs": render(match.lhs),
                        "rhs": render(match.rhs),
                        "result": render(match.result()),
                    },
                    sort_keys=True,
                )
            )
        else:
            bindings = ",".join(f"{k}={v}" for k, v in sorted(match.bindings_dict().items()))
            print(
                f"{match.schema.value} {bindings} @ "
                f"{render(match.placement.context.skeleton)} -> {render(match.result())}"
            )
    return 0


def _cmd_compare(args: argparse.Namespace, alphabet: Alphabet) -> int:
    left = parse(args.left, alphabet)
    right = parse(args.right, alphabet)
    symbol = _ORDER_SYMBOL[compare(left, right, alphabet)]
    if args.json:
        print(json.dumps({"left": args.left, "right": args.right, "result": symbol}, sort_keys=True))
    else:
        print(symbol)
    return 0


def _cmd_placements(args: argparse.Namespace, alphabet: Alphabet) -> int:
    word = parse(args.word, alphabet)
    for placement in enumerate_placements(word):
        if args.json:
            print(
                json.dumps(
                    {
                        "subword": render(placement.subword),
                        "context": render(placement.context.skeleton),
                    },
                    sort_keys=True,
                )
            )
        else:
            print(f"{render(placement.subword)} @ {render(placement.context.skeleton)}")
    return 0


def _cmd_classify(args: argparse.Namespace, alphabet: Alphabet) -> int:
    host = parse(args.host, alphabet)
    q1 = parse_context(args.context1, alphabet)
    q2 = parse_context(args.context2, alphabet)
    p1 = placement_from_context(host, q1)
    p2 = placement_from_context(host, q2)
    outcome = classify(host, p1, p2)
    if isinstance(outcome, Separated):
        record = {"class": "separated", "witness": render(outcome.witness.skeleton)}
    elif isinstance(outcome, Nested):
        record = {
            "class": "nested",
            "connector": render(outcome.connector.skeleton),
            "direction": outcome.direction.value,
        }
    else:
        assert isinstance(outcome, Intersecting)
        record = {
            "class": "intersecting",
            "context": render(outcome.context.skeleton),
            "left": render(outcome.left),
            "middle": render(outcome.middle),
            "right": render(outcome.right),
            "orientation": outcome.orientation.value,
        }
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        details = " ".join(f"{k}={v}" for k, v in record.items() if k != "class")
        print(f"{record['class']} {details}")
    return 0


def _cmd_confluence(args: argparse.Namespace, alphabet: Alphabet) -> int:
    system = SYSTEMS[args.system]
    universe = UniverseSpec(alphabet, args.max_breadth, args.max_depth, args.max_size)
    words = universe.words()
    violations = check_local_confluence(system, universe)
    for violation in violations:
        if args.json:
            print(
                json.dumps(
                    {
                        "host": render(violation.host),
                        "left": render(violation.left),
                        "right": render(violation.right),
                        "joinable": False,
                    },
                    sort_keys=True,
                )
            )
        else:
            print(
                f"non-joinable fork at {render(violation.host)}: "
                f"{render(violation.left)} vs {render(violation.right)}"
            )
    summary = {
        "system": system.name,
        "words": len(words),
        "violations": len(violations),
    }
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        print(f"checked {summary['words']} words: {summary['violations']} violations")
    return 0


def _cmd_equiv(args: argparse.Namespace, alphabet: Alphabet) -> int:
    system = SYSTEMS[args.system]
    word1 = parse(args.word1, alphabet)
    word2 = parse(args.word2, alphabet)
    limits = SearchLimits(args.max_degx, args.max_breadth, args.max_visited)
    result = bfs_equivalent(system, word1, word2, limits, alphabet)
    if result.equivalent:
        if args.json:
            print(
                json.dumps(
                    {
                        "verdict": "equivalent",
                        "path": [render(w) for w in result.path],
                        "steps": len(result.path) - 1,
                    },
                    sort_keys=True,
                )
            )
        else:
            for w in result.path:
                print(render(w))
        return 0
    if args.json:
        print(json.dumps({"verdict": "unknown", "explored": result.explored}, sort_keys=True))
    else:
        print("unknown (limits exhausted)")
    return 2


if __name__ == "__main__":
    sys.exit(main())
