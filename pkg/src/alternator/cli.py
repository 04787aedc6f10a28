"""Command-line entry point.

Exit codes: 0 success or valid tree, 1 verification failure (or an
unwritable output file), 2 usage or file-format error.
"""

from __future__ import annotations

import argparse
import sys

from . import treefile
from .jacobsthal import (
    InitialState,
    count_admissible_strings,
    enumerate_admissible_strings,
    jacobsthal,
    jacobsthal_split,
    min_weighings_bound,
    trivial_bounds,
)
from .model import AlternatorState, World, weigh
from .search import extract_optimal_tree, optimal_weighings
from .strategy import Internal, Unreachable, build_strategy, consistent_start
from .verifier import InvalidTree, verify

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2
DEFAULT_SEARCH_MAX = 15
MAX_BUDGET = 10
MAX_STRING_LENGTH = 12

INDEX_NOTE = "Coins are numbered from 0; the worked examples in the literature count from 1."


class UsageError(Exception):
    pass


def _interval(n: int) -> str:
    if n < 2:
        return "-"
    k = jacobsthal_split(n).k
    return f"J{k}={jacobsthal(k)} < N <= J{k + 1}={jacobsthal(k + 1)}"


def cmd_bounds(args) -> int:
    if args.n_min < 1 or args.n_max < args.n_min:
        raise UsageError("need 1 <= --from <= --to")
    # trivial bounds: f-state, then r/a-state (identical for r and a)
    print(f"{'N':>6} {'f':>3} {'r':>3} {'a':>3}  {'f_lo':>4} {'f_hi':>4} {'ra_lo':>5} {'ra_hi':>5}  interval")
    for n in range(args.n_min, args.n_max + 1):
        f, r, a = (min_weighings_bound(n, s) for s in (InitialState.F, InitialState.R, InitialState.A))
        if n >= 2:
            (f_lo, f_hi), (ra_lo, ra_hi) = trivial_bounds(n, "f"), trivial_bounds(n, "a")
        else:
            f_lo = f_hi = ra_lo = ra_hi = 0
        print(
            f"{n:>6} {f:>3} {r:>3} {a:>3}  {f_lo:>4} {f_hi:>4} {ra_lo:>5} {ra_hi:>5}  {_interval(n)}"
        )
    return EXIT_OK


def cmd_build(args) -> int:
    if args.coins < 1:
        raise UsageError("--coins must be at least 1")
    tree = build_strategy(args.coins, args.state)
    try:
        treefile.save(tree, args.out)
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def _load(path: str):
    try:
        return treefile.load(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    except treefile.TreeFormatError as e:
        raise UsageError(f"{path}: {e}") from None


def cmd_verify(args) -> int:
    tree = _load(args.path)
    try:
        report = verify(tree, threads=args.threads)
    except InvalidTree as e:
        raise UsageError(f"{args.path}: {e}") from None
    print(report.summary())
    bound = min_weighings_bound(tree.n_coins, tree.initial_state)
    print(f"bound for {tree.n_coins} coins in state {tree.initial_state.value}: {bound}")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_simulate(args) -> int:
    tree = _load(args.path)
    start = AlternatorState(args.start)
    if not 0 <= args.alternator < tree.n_coins:
        raise UsageError(f"--alternator must be in 0..{tree.n_coins - 1}")
    if not consistent_start(tree.initial_state, start):
        raise UsageError(
            f"tree is for initial state {tree.initial_state.value}; --start {start.value} does not fit"
        )
    world = World(tree.n_coins, args.alternator, start)
    node = tree.root
    step = 0
    while isinstance(node, Internal):
        try:
            outcome, world = weigh(world, node.weighing)
        except ValueError as e:
            raise UsageError(f"{args.path}: {e}") from None
        step += 1
        print(f"{step}. {node.weighing} -> {outcome.value}  (alternator now {world.state.value})")
        node = node.child(outcome)
    if isinstance(node, Unreachable):
        print("strategy reached a branch marked unreachable", file=sys.stderr)
        return EXIT_INVALID
    print(f"alternator: {node.alternator}")
    return EXIT_OK if node.alternator == args.alternator else EXIT_INVALID


def cmd_search(args) -> int:
    if args.coins < 1:
        raise UsageError("--coins must be at least 1")
    if args.coins > args.max_coins:
        raise UsageError(
            f"--coins {args.coins} is above the search limit {args.max_coins}; "
            "raise --max-coins if you accept the runtime"
        )
    if not 0 <= args.budget <= MAX_BUDGET:
        raise UsageError(f"--budget must be in 0..{MAX_BUDGET}")
    value = optimal_weighings(args.coins, args.state, args.budget)
    if value is None:
        print(f"no strategy within {args.budget} weighings")
        return EXIT_INVALID
    bound = min_weighings_bound(args.coins, args.state)
    verdict = "matches bound" if value == bound else f"bound is {bound}"
    print(f"{value} ({verdict})")
    if args.emit_tree:
        tree = extract_optimal_tree(args.coins, args.state, args.budget)
        try:
            treefile.save(tree, args.emit_tree)
        except OSError as e:
            print(f"error: cannot write {args.emit_tree}: {e}", file=sys.stderr)
            return EXIT_INVALID
    return EXIT_OK


def cmd_strings(args) -> int:
    if not 0 <= args.length <= MAX_STRING_LENGTH:
        raise UsageError(f"--length must be in 0..{MAX_STRING_LENGTH}")
    strings = enumerate_admissible_strings(args.length)
    assert len(strings) == count_admissible_strings(args.length)
    print(len(strings))
    for s in strings:
        print(s)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alternator",
        description="Find the alternator coin: bounds, strategies, verification and search.",
        epilog=INDEX_NOTE,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    states = [s.value for s in InitialState]

    p = sub.add_parser("bounds", help="table of f(N), r(N), a(N) and the trivial bounds")
    p.add_argument("--from", dest="n_min", type=int, required=True)
    p.add_argument("--to", dest="n_max", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("build", help="write the Jacobsthal strategy tree as JSON", epilog=INDEX_NOTE)
    p.add_argument("--coins", type=int, required=True)
    p.add_argument("--state", choices=states, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check a tree against every possible world")
    p.add_argument("path")
    p.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="play a tree against one world", epilog=INDEX_NOTE)
    p.add_argument("path")
    p.add_argument("--alternator", type=int, required=True, help="0-indexed coin id")
    p.add_argument("--start", choices=["f", "r"], required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("search", help="exact optimum by exhaustive minimax")
    p.add_argument("--coins", type=int, required=True)
    p.add_argument("--state", choices=states, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--emit-tree", metavar="PATH")
    p.add_argument("--max-coins", type=int, default=DEFAULT_SEARCH_MAX)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("strings", help="outcome strings with no adjacent L/R")
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_strings)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
