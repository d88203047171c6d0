"""Command-line front end.

Words are written with the letters ``a``, ``b``, ... (``--sigma`` limits the
alphabet, default 26).  Exit status: 0 success, 2 usage error, 1 runtime
error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from . import combinatorics as comb
from . import experiments as exp
from .core import ALPHABET, border_array, from_text, minimal_period, to_text
from .generator import generate_from_seed
from .muf import muf


class UsageError(Exception):
    pass


def _word(text: str, sigma: int) -> tuple[int, ...]:
    if not text:
        raise UsageError("empty word")
    try:
        return from_text(text, sigma)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _words(args) -> list[tuple[int, ...]]:
    texts = list(args.words)
    if args.input:
        try:
            with open(args.input) as fh:
                texts.extend(line.strip() for line in fh if line.strip())
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    if not texts:
        raise UsageError("no words given")
    return [_word(t, args.sigma) for t in texts]


def cmd_muf(args) -> None:
    for w in _words(args):
        r = muf(w)
        print(r.start, r.end, r.length)


def cmd_border_array(args) -> None:
    for w in _words(args):
        print(" ".join(map(str, border_array(w))))


def cmd_period(args) -> None:
    for w in _words(args):
        print(minimal_period(w))


def cmd_count(args) -> None:
    i, sigma = args.len, args.sigma
    if i < 1 or sigma < 2:
        raise UsageError("need --len >= 1 and --sigma >= 2")
    if args.jdiff is not None:
        print(comb.count_unbordered_jdiff_brute(i, args.jdiff, sigma))
    elif args.brute:
        print(comb.count_unbordered_brute(i, sigma))
    else:
        print(comb.count_unbordered(i, sigma))


def cmd_bounds(args) -> None:
    if any(s < 2 for s in args.sigma):
        raise UsageError("--sigma values must be >= 2")
    print("sigma xi coeff")
    for s in args.sigma:
        x = comb.xi(s)
        c = comb.expected_muf_lower_bound_coeff(s)
        print(s, comb.format_rounded(x, up=True), comb.format_rounded(c, up=False))
    if args.n is not None:
        n = args.n
        if n < 2:
            raise UsageError("--n must be >= 2")
        for s in args.sigma:
            print("corollary2", s, n, comb.corollary2_lower_bound(n, s))
            for j in range(1, n):
                print("lemma1", s, n, j, comb.lemma1_lower_bound(n, j, s))


def cmd_generate(args) -> None:
    seed = _word(args.seed_word, args.sigma)
    try:
        batch = generate_from_seed(seed, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for w in batch.words:
        print(to_text(w))


def _config(args) -> exp.ExperimentConfig:
    try:
        return exp.ExperimentConfig(
            n_min=args.n_min,
            n_max=args.n_max,
            sigmas=tuple(args.sigma),
            mode=args.mode,
            trials=args.trials,
            seed=args.seed,
            algorithms=tuple(args.algorithms),
            n_values=tuple(args.n_values) if args.n_values else None,
            repeats=args.repeats,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(rows, out) -> None:
    exp.write_csv(rows, out if out else sys.stdout)


def cmd_experiment(args) -> None:
    _emit(exp.gap_experiment(_config(args)), args.out)


def cmd_bench(args) -> None:
    _emit(exp.timing_experiment(_config(args)), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unbordered", description="Borders, periods and maximal unbordered factors."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("words", nargs="*", metavar="word")
        p.add_argument("--input", help="file with one word per line")
        p.add_argument("--sigma", type=int, default=len(ALPHABET))
        p.set_defaults(func=func)

    word_cmd("muf", cmd_muf, "print start, end, length of the maximal unbordered factor")
    word_cmd("border-array", cmd_border_array, "print the border array")
    word_cmd("period", cmd_period, "print the minimal period")

    p = sub.add_parser("count", help="number of unbordered words b(i, sigma)")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--jdiff", type=int, help="count b_j: first letter differs from the next j")
    p.add_argument("--brute", action="store_true", help="enumerate instead of the recurrence")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bounds", help="xi(sigma), the expected-MUF coefficient and lower bounds")
    p.add_argument("--sigma", type=int, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("generate", help="words of length n with MUF >= |seed|")
    p.add_argument("--seed-word", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=int, default=len(ALPHABET))
    p.set_defaults(func=cmd_generate)

    for name, func, algs, help_ in (
        ("experiment", cmd_experiment, ["dispatch"], "average n - MUF length, CSV"),
        ("bench", cmd_bench, ["basic", "early_stop"], "average running times, CSV"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--n-min", type=int, default=1)
        p.add_argument("--n-max", type=int, default=100)
        p.add_argument("--n-values", type=int, nargs="+")
        p.add_argument("--sigma", type=int, nargs="+", default=[2, 3, 4, 5])
        p.add_argument("--mode", choices=["exhaustive", "montecarlo"], default="montecarlo")
        p.add_argument("--trials", type=int, default=10_000)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument(
            "--algorithms", nargs="+", choices=sorted(exp.ALGORITHMS), default=algs
        )
        p.add_argument("--repeats", type=int, default=5, help="timing rounds (bench)")
        p.add_argument("--out")
        p.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")
        p.set_defaults(func=func)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "quiet", True):
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
