"""Coins, weighings and what the alternator does on the scale.

Coins are 0-indexed. Real coins all weigh the same, so an outcome depends
only on where the alternator sits and which behaviour it is due to show.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .jacobsthal import InitialState


class InvalidWeighing(ValueError):
    pass


class InconsistentKnowledge(ValueError):
    """No hypothesis is left: the observed outcomes cannot happen."""


class Outcome(str, Enum):
    E = "E"  # balanced
    L = "L"  # left pan lighter
    R = "R"  # right pan lighter


class AlternatorState(str, Enum):
    F = "f"  # acts fake the next time it is on the scale
    R = "r"  # acts real the next time it is on the scale

    def toggled(self) -> "AlternatorState":
        return _TOGGLE[self]


_TOGGLE = {AlternatorState.F: AlternatorState.R, AlternatorState.R: AlternatorState.F}


@dataclass(frozen=True)
class Weighing:
    left: frozenset[int]
    right: frozenset[int]

    def __init__(self, left: Iterable[int], right: Iterable[int]):
        object.__setattr__(self, "left", frozenset(left))
        object.__setattr__(self, "right", frozenset(right))

    def validate(self, n_coins: int) -> None:
        if self.__dict__.get("_valid_for") == n_coins:
            return
        if not self.left or not self.right:
            raise InvalidWeighing("both pans must hold at least one coin")
        if len(self.left) != len(self.right):
            raise InvalidWeighing(
                f"pans must hold the same number of coins ({len(self.left)} vs {len(self.right)})"
            )
        if self.left & self.right:
            raise InvalidWeighing(f"coins {sorted(self.left & self.right)} are on both pans")
        for c in self.left | self.right:
            if not 0 <= c < n_coins:
                raise InvalidWeighing(f"coin {c} out of range for {n_coins} coins")
        object.__setattr__(self, "_valid_for", n_coins)

    def __str__(self) -> str:
        return f"{sorted(self.left)} v {sorted(self.right)}"


@dataclass(frozen=True)
class World:
    n_coins: int
    alternator: int
    state: AlternatorState

    def __post_init__(self):
        if not 0 <= self.alternator < self.n_coins:
            raise ValueError(f"alternator {self.alternator} out of range for {self.n_coins} coins")


@dataclass(frozen=True, order=True)
class Hypothesis:
    coin: int
    state: AlternatorState


@dataclass(frozen=True)
class KnowledgeState:
    n_coins: int
    hypotheses: frozenset[Hypothesis]

    def candidates(self) -> set[int]:
        return {h.coin for h in self.hypotheses}

    def __len__(self) -> int:
        return len(self.hypotheses)


def weigh(world: World, weighing: Weighing) -> tuple[Outcome, World]:
    """Put the pans on the scale; returns the outcome and the world after it."""
    weighing.validate(world.n_coins)
    outcome, state = _react(world.alternator, world.state, weighing)
    return outcome, World(world.n_coins, world.alternator, state)


def _react(coin: int, state: AlternatorState, weighing: Weighing) -> tuple[Outcome, AlternatorState]:
    if coin in weighing.left:
        on_pan = Outcome.L
    elif coin in weighing.right:
        on_pan = Outcome.R
    else:
        return Outcome.E, state
    return (on_pan if state is AlternatorState.F else Outcome.E), state.toggled()


def initial_knowledge(n_coins: int, state: InitialState | str) -> KnowledgeState:
    state = InitialState.parse(state)
    if n_coins < 1:
        raise ValueError(f"n_coins must be positive, got {n_coins}")
    if state is InitialState.F:
        states = (AlternatorState.F,)
    elif state is InitialState.R:
        states = (AlternatorState.R,)
    else:
        states = (AlternatorState.F, AlternatorState.R)
    return KnowledgeState(
        n_coins, frozenset(Hypothesis(i, s) for i in range(n_coins) for s in states)
    )


def update_knowledge(ks: KnowledgeState, weighing: Weighing, outcome: Outcome) -> KnowledgeState:
    """Keep the hypotheses that predict ``outcome``, advanced past the weighing.

    May return an empty state, meaning the outcome cannot occur.
    """
    weighing.validate(ks.n_coins)
    outcome = Outcome(outcome)
    kept = set()
    for h in ks.hypotheses:
        predicted, after = _react(h.coin, h.state, weighing)
        if predicted is outcome:
            kept.add(Hypothesis(h.coin, after))
    return KnowledgeState(ks.n_coins, frozenset(kept))


def split_knowledge(ks: KnowledgeState, weighing: Weighing) -> dict[Outcome, KnowledgeState]:
    """update_knowledge for all three outcomes in a single pass."""
    weighing.validate(ks.n_coins)
    kept: dict[Outcome, set[Hypothesis]] = {o: set() for o in Outcome}
    for h in ks.hypotheses:
        predicted, after = _react(h.coin, h.state, weighing)
        kept[predicted].add(Hypothesis(h.coin, after))
    return {o: KnowledgeState(ks.n_coins, frozenset(v)) for o, v in kept.items()}


def solved_coin(ks: KnowledgeState) -> int | None:
    """The alternator's coin if every hypothesis agrees on it, else None.

    The state may stay ambiguous: a coin that was never weighed can be
    pinned down while both of its states remain possible.
    """
    coins = ks.candidates()
    if not coins:
        raise InconsistentKnowledge("no hypothesis is consistent with the observations")
    if len(coins) == 1:
        return next(iter(coins))
    return None
