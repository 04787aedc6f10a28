"""Exact optimal weighing counts by adversarial search.

This module never looks at the constructive strategy. It plays the game
over every legal weighing and lets an adversary pick the outcome, so its
answers are an independent check on the Jacobsthal bounds.

Coins that carry the same hypotheses are interchangeable, so the search
runs over :class:`ClassCounts` instead of explicit hypothesis sets. The
game graph has cycles (weighing r-state coins alone turns them into
f-state coins and an unbalanced result can turn them back), so the core
question is depth-bounded: "can this state be solved in d more
weighings?". Answers are cached per state as a known-solvable depth and a
known-unsolvable depth, which together pin the exact value.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator, NamedTuple

from .jacobsthal import InitialState, count_admissible_strings
from .model import (
    AlternatorState,
    KnowledgeState,
    Outcome,
    Weighing,
    initial_knowledge,
    split_knowledge,
    update_knowledge,
)
from .strategy import UNREACHABLE, Internal, Leaf, StrategyNode, StrategyTree


class ClassCounts(NamedTuple):
    n_fr: int  # both states still possible
    n_f: int
    n_r: int
    n_x: int  # proven real

    @property
    def candidates(self) -> int:
        return self.n_fr + self.n_f + self.n_r

    @property
    def total(self) -> int:
        return self.n_fr + self.n_f + self.n_r + self.n_x

    @classmethod
    def initial(cls, n_coins: int, state: InitialState | str) -> "ClassCounts":
        state = InitialState.parse(state)
        if state is InitialState.A:
            return cls(n_coins, 0, 0, 0)
        if state is InitialState.F:
            return cls(0, n_coins, 0, 0)
        return cls(0, 0, n_coins, 0)


class Move(NamedTuple):
    """Per-class coin counts on each pan, ordered (fr, f, r, x)."""

    left: tuple[int, int, int, int]
    right: tuple[int, int, int, int]


def _validate_move(c: ClassCounts, mv: Move) -> None:
    if len(mv.left) != 4 or len(mv.right) != 4:
        raise ValueError(f"malformed move {mv}")
    if sum(mv.left) != sum(mv.right) or sum(mv.left) < 1:
        raise ValueError(f"pans of {mv} must be non-empty and equal in size")
    for have, l, r in zip(c, mv.left, mv.right):
        if l < 0 or r < 0 or l + r > have:
            raise ValueError(f"move {mv} uses more coins than {c} provides")


def successor(c: ClassCounts, mv: Move, o: Outcome) -> ClassCounts | None:
    """Counts after observing ``o``, or None if no hypothesis predicts it."""
    _validate_move(c, mv)
    return _advance(c, mv, Outcome(o))


def _advance(c: ClassCounts, mv: Move, o: Outcome) -> ClassCounts | None:
    (lfr, lf, lr, _), (rfr, rf, rr, _) = mv.left, mv.right
    if o is Outcome.E:
        nxt = ClassCounts(
            c.n_fr - lfr - rfr,
            c.n_f - lf - rf + lfr + rfr + lr + rr,
            c.n_r - lr - rr,
            c.n_x + lf + rf,
        )
    else:
        light = lfr + lf if o is Outcome.L else rfr + rf
        nxt = ClassCounts(0, 0, light, c.total - light)
    return nxt if nxt.candidates else None


def is_terminal(c: ClassCounts) -> bool:
    """The alternator's coin is pinned down, even if its state is not."""
    return c.candidates <= 1


def _splits(have: int) -> Iterator[tuple[int, int]]:
    for l in range(have + 1):
        for r in range(have - l + 1):
            yield l, r


def moves(c: ClassCounts, ballast: bool = True) -> list[Move]:
    """Canonical moves from ``c`` in ascending order.

    Pan swaps are folded (left >= right), real coins never sit on both
    pans at once, and every move weighs at least one candidate coin.
    """
    out = []
    x_have = c.n_x if ballast else 0
    for (a, b), (d, e), (g, h), (p, q) in product(
        _splits(c.n_fr), _splits(c.n_f), _splits(c.n_r), _splits(x_have)
    ):
        left, right = (a, d, g, p), (b, e, h, q)
        if sum(left) != sum(right) or left < right:
            continue
        if p and q:
            continue
        if a + b + d + e + g + h == 0:
            continue
        out.append(Move(left, right))
    out.sort()
    return out


def _may_fit(c: ClassCounts, d: int) -> bool:
    # each candidate coin needs its own admissible outcome string; coins
    # known to be in r-state need one starting with a balance
    if c.candidates > count_admissible_strings(d):
        return False
    if d >= 1 and c.n_r > count_admissible_strings(d - 1):
        return False
    return True


class ClassCountSolver:
    """Memoised minimax over class counts.

    The caches only ever grow with values that are true for the key, so
    concurrent callers may race on an insert without harm.
    """

    def __init__(self, ballast: bool = True, prune: bool = True):
        self.ballast = ballast
        self.prune = prune
        self._solvable_at: dict[ClassCounts, int] = {}
        self._unsolvable_at: dict[ClassCounts, int] = {}
        self._moves: dict[ClassCounts, list[Move]] = {}

    def moves(self, c: ClassCounts) -> list[Move]:
        if c not in self._moves:
            self._moves[c] = moves(c, self.ballast)
        return self._moves[c]

    def solvable(self, c: ClassCounts, d: int) -> bool:
        """Can the alternator be pinned down from ``c`` in at most d weighings?"""
        if is_terminal(c):
            return True
        if d <= 0:
            return False
        known = self._solvable_at.get(c)
        if known is not None and known <= d:
            return True
        known = self._unsolvable_at.get(c)
        if known is not None and known >= d:
            return False
        ok = (not self.prune or _may_fit(c, d)) and any(self._move_works(c, mv, d) for mv in self.moves(c))
        if ok:
            self._solvable_at[c] = min(d, self._solvable_at.get(c, d))
        else:
            self._unsolvable_at[c] = max(d, self._unsolvable_at.get(c, d))
        return ok

    def _move_works(self, c: ClassCounts, mv: Move, d: int) -> bool:
        for o in Outcome:
            nxt = _advance(c, mv, o)
            if nxt is not None and not self.solvable(nxt, d - 1):
                return False
        return True

    def value(self, c: ClassCounts, budget: int) -> int | None:
        for d in range(budget + 1):
            if self.solvable(c, d):
                return d
        return None

    def best_move(self, c: ClassCounts, d: int) -> Move | None:
        """Smallest canonical move that finishes within d weighings."""
        for mv in self.moves(c):
            if self._move_works(c, mv, d):
                return mv
        return None


_default_solver = ClassCountSolver()


def optimal_weighings(
    n_coins: int, state: InitialState | str, budget: int, solver: ClassCountSolver | None = None
) -> int | None:
    """Exact minimax number of weighings, or None if it exceeds ``budget``."""
    if n_coins < 1:
        raise ValueError(f"n_coins must be positive, got {n_coins}")
    solver = solver or _default_solver
    return solver.value(ClassCounts.initial(n_coins, state), budget)


def classify(ks: KnowledgeState) -> tuple[list[int], list[int], list[int], list[int]]:
    """Sorted coin ids per class (fr, f, r, x) for a concrete knowledge state."""
    states: dict[int, set[AlternatorState]] = {}
    for h in ks.hypotheses:
        states.setdefault(h.coin, set()).add(h.state)
    fr, f, r, x = [], [], [], []
    for coin in range(ks.n_coins):
        s = states.get(coin)
        if not s:
            x.append(coin)
        elif len(s) == 2:
            fr.append(coin)
        elif AlternatorState.F in s:
            f.append(coin)
        else:
            r.append(coin)
    return fr, f, r, x


def counts_of(ks: KnowledgeState) -> ClassCounts:
    return ClassCounts(*(len(group) for group in classify(ks)))


def embed_move(ks: KnowledgeState, mv: Move) -> Weighing:
    """Realise a class-count move on concrete coins, lowest ids first."""
    left, right = [], []
    for group, l, r in zip(classify(ks), mv.left, mv.right):
        left += group[:l]
        right += group[l : l + r]
    return Weighing(left, right)


def extract_optimal_tree(
    n_coins: int, state: InitialState | str, budget: int, solver: ClassCountSolver | None = None
) -> StrategyTree:
    """Materialise one optimal policy as a concrete strategy tree."""
    solver = solver or _default_solver
    state = InitialState.parse(state)
    best = optimal_weighings(n_coins, state, budget, solver)
    if best is None:
        raise ValueError(f"no strategy for {n_coins} coins in state {state.value} within {budget} weighings")

    def grow(ks: KnowledgeState, d: int) -> StrategyNode:
        coins = ks.candidates()
        if not coins:
            return UNREACHABLE
        if len(coins) == 1:
            return Leaf(next(iter(coins)))
        mv = solver.best_move(counts_of(ks), d)
        assert mv is not None, "solver claimed a solution it cannot reproduce"
        g = embed_move(ks, mv)
        kids = {o: grow(nxt, d - 1) for o, nxt in split_knowledge(ks, g).items()}
        return Internal(g, kids[Outcome.E], kids[Outcome.L], kids[Outcome.R])

    return StrategyTree(n_coins, state, grow(initial_knowledge(n_coins, state), best))


def concrete_optimal_weighings(n_coins: int, state: InitialState | str, budget: int) -> int | None:
    """Minimax over explicit hypothesis sets and every explicit weighing.

    Exponential; intended only as a cross-check of the class-count
    abstraction for a handful of coins.
    """
    all_weighings = []
    for size in range(1, n_coins // 2 + 1):
        for left in combinations(range(n_coins), size):
            rest = [c for c in range(n_coins) if c not in left]
            for right in combinations(rest, size):
                if left[0] < right[0]:
                    all_weighings.append(Weighing(left, right))

    solvable_at: dict[frozenset, int] = {}
    unsolvable_at: dict[frozenset, int] = {}

    def solvable(ks: KnowledgeState, d: int) -> bool:
        if len(ks.candidates()) <= 1:
            return True
        if d == 0:
            return False
        key = ks.hypotheses
        if solvable_at.get(key, d + 1) <= d:
            return True
        if unsolvable_at.get(key, -1) >= d:
            return False
        ok = any(
            all(
                not nxt.hypotheses or solvable(nxt, d - 1)
                for nxt in (update_knowledge(ks, g, o) for o in Outcome)
            )
            for g in all_weighings
        )
        if ok:
            solvable_at[key] = d
        else:
            unsolvable_at[key] = d
        return ok

    start = initial_knowledge(n_coins, state)
    for d in range(budget + 1):
        if solvable(start, d):
            return d
    return None
