"""Recursive weighing strategies as explicit ternary decision trees."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .jacobsthal import InitialState, jacobsthal_split
from .model import AlternatorState, Outcome, Weighing, World, weigh


class StrategyUnsound(RuntimeError):
    """A world drove the strategy into a branch marked unreachable."""


@dataclass(frozen=True)
class Leaf:
    alternator: int


@dataclass(frozen=True)
class Unreachable:
    pass


@dataclass(frozen=True)
class Internal:
    weighing: Weighing
    on_E: "StrategyNode"
    on_L: "StrategyNode"
    on_R: "StrategyNode"

    def child(self, outcome: Outcome) -> "StrategyNode":
        if outcome is Outcome.E:
            return self.on_E
        return self.on_L if outcome is Outcome.L else self.on_R


StrategyNode = Union[Internal, Leaf, Unreachable]

UNREACHABLE = Unreachable()


@dataclass(frozen=True)
class StrategyTree:
    n_coins: int
    initial_state: InitialState
    root: StrategyNode

    def __post_init__(self):
        object.__setattr__(self, "initial_state", InitialState.parse(self.initial_state))


def _f_state(coins: Sequence[int]) -> StrategyNode:
    # coins are sorted; the alternator among them is due to act fake
    if not coins:
        return UNREACHABLE
    if len(coins) == 1:
        return Leaf(coins[0])
    _, pan, _ = jacobsthal_split(len(coins))
    left, right, rest = coins[:pan], coins[pan : 2 * pan], coins[2 * pan :]
    return Internal(Weighing(left, right), _f_state(rest), _r_state(left), _r_state(right))


def _with_set_aside(node: StrategyNode, coin: int) -> StrategyNode:
    """Replace the end of the all-balanced path with a leaf naming ``coin``."""
    if isinstance(node, Internal):
        return Internal(node.weighing, _with_set_aside(node.on_E, coin), node.on_L, node.on_R)
    if isinstance(node, Unreachable):
        return Leaf(coin)
    raise AssertionError(f"all-balanced path of an even pile ended in {node}")


def _everything_on_scale(coins: Sequence[int], unbalanced) -> StrategyNode:
    # shared first move of the r- and a-state strategies
    if len(coins) == 1:
        return Leaf(coins[0])
    aside = None
    if len(coins) % 2:
        coins, aside = coins[:-1], coins[-1]
    half = len(coins) // 2
    left, right = coins[:half], coins[half:]
    node = Internal(
        Weighing(left, right),
        _f_state(coins),
        unbalanced(left),
        unbalanced(right),
    )
    return node if aside is None else _with_set_aside(node, aside)


def _r_state(coins: Sequence[int]) -> StrategyNode:
    if not coins:
        return UNREACHABLE
    return _everything_on_scale(coins, lambda pan: UNREACHABLE)


def _a_state(coins: Sequence[int]) -> StrategyNode:
    return _everything_on_scale(coins, _r_state)


def build_strategy(n_coins: int, state: InitialState | str) -> StrategyTree:
    """Build the Jacobsthal-split strategy for ``n_coins`` coins.

    Pans always take the lowest-indexed eligible coins; a coin set aside
    for an odd pile is the highest-indexed one.

    >>> tree = build_strategy(3, "f")
    >>> str(tree.root.weighing)
    '[0] v [1]'
    """
    state = InitialState.parse(state)
    if n_coins < 1:
        raise ValueError(f"n_coins must be positive, got {n_coins}")
    coins = list(range(n_coins))
    builder = {InitialState.F: _f_state, InitialState.R: _r_state, InitialState.A: _a_state}[state]
    return StrategyTree(n_coins, state, builder(coins))


def node_depth(node: StrategyNode) -> int:
    if not isinstance(node, Internal):
        return 0
    below = [node_depth(c) for c in (node.on_E, node.on_L, node.on_R) if not isinstance(c, Unreachable)]
    return 1 + max(below, default=0)


def depth(tree: StrategyTree) -> int:
    """Longest root-to-leaf path, ignoring unreachable branches."""
    return node_depth(tree.root)


def consistent_start(tree_state: InitialState, world_state: AlternatorState) -> bool:
    return tree_state is InitialState.A or tree_state.value == world_state.value


def run_strategy(tree: StrategyTree, world: World) -> tuple[int, list[tuple[Weighing, Outcome]]]:
    """Play the tree against ``world``; returns the identified coin and the transcript."""
    if world.n_coins != tree.n_coins:
        raise ValueError(f"world has {world.n_coins} coins but the tree expects {tree.n_coins}")
    if not consistent_start(tree.initial_state, world.state):
        raise ValueError(
            f"a world starting in state {world.state.value} does not fit a tree for state "
            f"{tree.initial_state.value}"
        )
    transcript = []
    node = tree.root
    while isinstance(node, Internal):
        outcome, world = weigh(world, node.weighing)
        transcript.append((node.weighing, outcome))
        node = node.child(outcome)
    if isinstance(node, Unreachable):
        letters = "".join(o.value for _, o in transcript)
        raise StrategyUnsound(f"outcomes {letters!r} lead to a branch marked unreachable")
    return node.alternator, transcript


def outcome_string(transcript: Sequence[tuple[Weighing, Outcome]]) -> str:
    return "".join(o.value for _, o in transcript)
