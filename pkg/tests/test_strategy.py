import pytest

from alternator.jacobsthal import InitialState, is_admissible, min_weighings_bound
from alternator.model import AlternatorState, Outcome, Weighing, World
from alternator.strategy import (
    Internal,
    Leaf,
    StrategyTree,
    StrategyUnsound,
    Unreachable,
    build_strategy,
    depth,
    outcome_string,
    run_strategy,
)

F, R = AlternatorState.F, AlternatorState.R


def worlds_for(n, state):
    starts = {"f": [F], "r": [R], "a": [F, R]}[InitialState.parse(state).value]
    return [World(n, c, s) for c in range(n) for s in starts]


def test_three_coins_f_state():
    tree = build_strategy(3, "f")
    assert tree.root == Internal(Weighing([0], [1]), Leaf(2), Leaf(0), Leaf(1))
    assert depth(tree) == 1


def test_five_coins_a_state_first_weighing():
    root = build_strategy(5, "a").root
    assert root.weighing == Weighing([0, 1], [2, 3])
    # the all-balanced path ends on the coin set aside
    node = root
    while isinstance(node, Internal):
        node = node.on_E
    assert node == Leaf(4)
    assert depth(build_strategy(5, "a")) == 3


def test_single_coin():
    tree = build_strategy(1, "a")
    assert tree.root == Leaf(0)
    assert depth(tree) == 0


def test_eleven_coins_f_state_depth():
    assert depth(build_strategy(11, "f")) == 3


def test_r_state_unbalanced_first_branches_unreachable():
    root = build_strategy(6, "r").root
    assert isinstance(root.on_L, Unreachable) and isinstance(root.on_R, Unreachable)


@pytest.mark.parametrize("n, state, expected", [(1, "f", 0), (3, "f", 1), (4, "a", 3)])
def test_depth_examples(n, state, expected):
    assert depth(build_strategy(n, state)) == expected


@pytest.mark.parametrize("state", ["f", "r", "a"])
def test_depth_achieves_bound(state):
    for n in range(1, 201):
        assert depth(build_strategy(n, state)) == min_weighings_bound(n, state), n


def test_run_examples():
    coin, transcript = run_strategy(build_strategy(3, "f"), World(3, 2, F))
    assert coin == 2 and transcript == [(Weighing([0], [1]), Outcome.E)]

    coin, transcript = run_strategy(build_strategy(5, "a"), World(5, 4, F))
    assert coin == 4 and set(outcome_string(transcript)) == {"E"}

    coin, transcript = run_strategy(build_strategy(2, "r"), World(2, 0, R))
    assert coin == 0
    assert transcript == [(Weighing([0], [1]), Outcome.E), (Weighing([0], [1]), Outcome.L)]


def test_run_rejects_mismatches():
    tree = build_strategy(3, "f")
    with pytest.raises(ValueError):
        run_strategy(tree, World(4, 0, F))
    with pytest.raises(ValueError):
        run_strategy(tree, World(3, 0, R))


def test_run_reports_unreachable():
    tree = StrategyTree(2, "f", Internal(Weighing([0], [1]), Leaf(0), Unreachable(), Leaf(1)))
    with pytest.raises(StrategyUnsound):
        run_strategy(tree, World(2, 0, F))


@pytest.mark.parametrize("state", ["f", "r", "a"])
def test_runs_identify_and_transcripts_are_admissible_and_injective(state):
    for n in range(1, 121):
        tree = build_strategy(n, state)
        by_string = {}
        for world in worlds_for(n, state):
            coin, transcript = run_strategy(tree, world)
            assert coin == world.alternator
            letters = outcome_string(transcript)
            assert is_admissible(letters)
            assert by_string.setdefault(letters, coin) == coin
