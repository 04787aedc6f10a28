"""Exhaustive checking of strategy trees against every possible world."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .jacobsthal import InitialState, is_admissible, min_weighings_bound
from .model import (
    AlternatorState,
    KnowledgeState,
    World,
    initial_knowledge,
    split_knowledge,
)
from .strategy import (
    Internal,
    Leaf,
    StrategyNode,
    StrategyTree,
    StrategyUnsound,
    Unreachable,
    outcome_string,
    run_strategy,
)


class InvalidTree(ValueError):
    pass


@dataclass(frozen=True)
class Failure:
    world: World | None  # None for failures found by the knowledge pass alone
    description: str


@dataclass
class VerificationReport:
    max_depth: int = 0
    worlds_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    path_string_violations: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures and not self.path_string_violations

    def summary(self) -> str:
        lines = [
            f"valid: {'yes' if self.valid else 'no'}",
            f"worlds checked: {self.worlds_checked}",
            f"max depth: {self.max_depth}",
        ]
        for f in self.failures:
            if f.world is None:
                lines.append(f"FAIL {f.description}")
            else:
                lines.append(
                    f"FAIL world(alternator={f.world.alternator}, start={f.world.state.value}): "
                    f"{f.description}"
                )
        for s in self.path_string_violations:
            lines.append(f"FAIL outcome string {s!r} has adjacent unbalanced results")
        return "\n".join(lines)


def check_structure(tree: StrategyTree) -> None:
    """Raise InvalidTree unless every weighing and leaf fits ``tree.n_coins``."""
    if tree.n_coins < 1:
        raise InvalidTree(f"n_coins must be positive, got {tree.n_coins}")
    stack: list[StrategyNode] = [tree.root]
    while stack:
        node = stack.pop()
        if isinstance(node, Internal):
            try:
                node.weighing.validate(tree.n_coins)
            except ValueError as e:
                raise InvalidTree(str(e)) from None
            stack.extend((node.on_E, node.on_L, node.on_R))
        elif isinstance(node, Leaf):
            if not 0 <= node.alternator < tree.n_coins:
                raise InvalidTree(f"leaf names coin {node.alternator}, out of range")
        elif not isinstance(node, Unreachable):
            raise InvalidTree(f"unknown node type {type(node).__name__}")


def _worlds(tree: StrategyTree):
    states = {
        InitialState.F: (AlternatorState.F,),
        InitialState.R: (AlternatorState.R,),
        InitialState.A: (AlternatorState.F, AlternatorState.R),
    }[tree.initial_state]
    for coin in range(tree.n_coins):
        for s in states:
            yield World(tree.n_coins, coin, s)


def _unreachable_pass(node: StrategyNode, ks: KnowledgeState, path: str, report: VerificationReport):
    if isinstance(node, Unreachable):
        if ks.hypotheses:
            held = ", ".join(f"({h.coin},{h.state.value})" for h in sorted(ks.hypotheses))
            report.failures.append(
                Failure(None, f"branch {path!r} is marked unreachable but admits {held}")
            )
        return
    if isinstance(node, Internal) and ks.hypotheses:
        for o, nxt in split_knowledge(ks, node.weighing).items():
            _unreachable_pass(node.child(o), nxt, path + o.value, report)


def _play(tree: StrategyTree, world: World) -> tuple[World, int | None, str, bool]:
    try:
        found, transcript = run_strategy(tree, world)
    except StrategyUnsound as e:
        return world, None, str(e), True
    weighed = any(world.alternator in w.left | w.right for w, _ in transcript)
    return world, found, outcome_string(transcript), weighed


def _play_chunk(tree: StrategyTree, worlds: list[World]):
    return [_play(tree, w) for w in worlds]


def verify(tree: StrategyTree, threads: int = 1) -> VerificationReport:
    """Run every world consistent with the tree and report any misidentification.

    In the a-state a coin that never reaches a pan on its own path yields
    the same transcript from both starting states; that pair counts once.
    With ``threads`` > 1 worlds are played in worker processes.
    """
    check_structure(tree)
    worlds = list(_worlds(tree))
    if threads > 1 and len(worlds) > 1:
        size = -(-len(worlds) // threads)
        chunks = [worlds[i : i + size] for i in range(0, len(worlds), size)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            played = [r for part in pool.map(_play_chunk, [tree] * len(chunks), chunks) for r in part]
    else:
        played = _play_chunk(tree, worlds)

    report = VerificationReport()
    seen: dict[int, str] = {}
    for world, found, letters, weighed in played:
        if found is None:
            report.worlds_checked += 1
            report.failures.append(Failure(world, letters))
            continue
        if not weighed and seen.get(world.alternator) == letters:
            continue
        seen[world.alternator] = letters
        report.worlds_checked += 1
        report.max_depth = max(report.max_depth, len(letters))
        if found != world.alternator:
            report.failures.append(
                Failure(world, f"outcomes {letters!r} identify coin {found}")
            )
        if not is_admissible(letters) and letters not in report.path_string_violations:
            report.path_string_violations.append(letters)
    _unreachable_pass(tree.root, initial_knowledge(tree.n_coins, tree.initial_state), "", report)
    return report


def verify_against_bound(tree: StrategyTree) -> bool:
    """Valid and no deeper than the proven optimum for this coin count and state."""
    report = verify(tree)
    return report.valid and report.max_depth <= min_weighings_bound(tree.n_coins, tree.initial_state)
