"""Command-line driver: validate, run, zoo, sweep.

Exit status is 0 on success, 1 when a machine is malformed or a claim
fails, and 2 for usage errors (bad flags, bad words, unreadable files).
"""

from __future__ import annotations

import argparse
import sys

from . import afa, afca, zoo
from .afca import AfcaSpec
from .core import format_rational, weigh
from .errors import FormatError, InputError, NonTerminationError
from .fileformat import parse, serialize
from .sweep import MAX_WORDS, SweepError, sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _load(path: str):
    """Parse and validate, or report the diagnostics and signal failure."""
    try:
        return parse(_read(path))
    except FormatError as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        return None


def _split_word(spec, word: str) -> list[str]:
    if all(len(s) == 1 for s in spec.alphabet):
        return [c for c in word if not c.isspace() and (c != "," or "," in spec.alphabet)]
    return word.replace(",", " ").split()


def cmd_validate(args) -> int:
    spec = _load(args.path)
    if spec is None:
        return EXIT_FAIL
    print("ok")
    return EXIT_OK


def _dump_state(spec, v) -> None:
    if isinstance(spec, AfcaSpec):
        order = {s: i for i, s in enumerate(spec.states)}
        for (state, counters), value in sorted(v.items(), key=lambda kv: (order[kv[0][0]], kv[0][1])):
            print(f"config {state} {','.join(map(str, counters))} {format_rational(value)}")
    else:
        for state, value in zip(spec.states, v.entries):
            print(f"state {state} {format_rational(value)}")


def cmd_run(args) -> int:
    spec = _load(args.path)
    if spec is None:
        return EXIT_FAIL
    word = _split_word(spec, args.word)
    try:
        if isinstance(spec, AfcaSpec):
            v = afca.run(spec, word)
            print(f"accept {format_rational(afca.accepting_weight(spec, v))}")
        else:
            v = afa.run(spec, word)
            if isinstance(spec, (afa.LasVegasAfaSpec, afa.RestartAfaSpec)):
                p_acc, p_rej, p_neu = afa.outcome_of(spec, v)
                third = "restart" if isinstance(spec, afa.RestartAfaSpec) else "neutral"
                print(
                    f"accept {format_rational(p_acc)}  reject {format_rational(p_rej)}  "
                    f"{third} {format_rational(p_neu)}"
                )
                if isinstance(spec, afa.RestartAfaSpec):
                    try:
                        res = afa.restart_from_outcome((p_acc, p_rej, p_neu), len(word) + 2)
                    except NonTerminationError as exc:
                        print(f"error: {exc}", file=sys.stderr)
                        return EXIT_FAIL
                    print(
                        f"overall_accept {format_rational(res.overall_accept)}  "
                        f"expected_rounds {format_rational(res.expected_rounds)}  "
                        f"expected_steps {format_rational(res.expected_steps)}"
                    )
            else:
                print(f"accept {format_rational(weigh(v, spec.indices(spec.accepting)))}")
    except InputError as exc:
        raise UsageError(str(exc)) from None
    if args.show_state:
        _dump_state(spec, v)
    return EXIT_OK


def cmd_zoo(args) -> int:
    name = args.name
    if name in zoo.PARAMETERIZED:
        if args.k is None:
            raise UsageError(f"zoo machine {name} needs --k")
        if args.k < 1:
            raise UsageError("--k must be >= 1")
        spec = zoo.ZOO[name](args.k)
    else:
        if args.k is not None:
            raise UsageError(f"zoo machine {name} takes no --k")
        spec = zoo.ZOO[name]()
    _write(args.out, serialize(spec))
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = _load(args.path)
    if spec is None:
        return EXIT_FAIL
    alphabet = None
    if args.alphabet is not None:
        alphabet = [s for s in args.alphabet.replace(",", " ").split()]
        if len(alphabet) == 1 and len(alphabet[0]) > 1:
            alphabet = list(alphabet[0])
    try:
        report = sweep(spec, args.oracle, args.max_len, alphabet=alphabet, k=args.k, force=args.force)
    except SweepError as exc:
        raise UsageError(str(exc)) from None
    _write(args.out, report.to_tsv())
    print(
        f"{len(report.rows)} words, {report.passes} pass, {report.failures} fail, "
        f"{report.unpromised} unpromised, max error {format_rational(report.max_error)}",
        file=sys.stderr,
    )
    return EXIT_OK if report.failures == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affinecounter", description="Exact simulator for affine (counter) automata."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that a machine file is well formed")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("run", help="run one word and print exact probabilities")
    p.add_argument("path")
    p.add_argument("--word", required=True, help="input word without end-markers ('' for empty)")
    p.add_argument("--show-state", action="store_true", help="also print the final state")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("zoo", help="write one of the built-in machines")
    p.add_argument("name", choices=sorted(zoo.ZOO))
    p.add_argument("--k", type=int, help="machine parameter (pal-npal, pal-npal-restart, manytwins)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_zoo)

    p = sub.add_parser("sweep", help="compare a machine with an oracle on all short words")
    p.add_argument("path")
    p.add_argument("--oracle", required=True, help="end, pal, pal-npal, manytwins or twin-t:<t>")
    p.add_argument("--alphabet", help="symbols to enumerate (default: the machine alphabet)")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--k", type=int, help="machine parameter used by the error bounds")
    p.add_argument("--out", help="TSV report path (default: stdout)")
    p.add_argument("--force", action="store_true", help=f"allow more than {MAX_WORDS} words")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
