import pytest

from alternator.model import AlternatorState, Weighing, World
from alternator.strategy import Internal, Leaf, StrategyTree, Unreachable, build_strategy
from alternator.verifier import InvalidTree, verify, verify_against_bound
from oracles import alternative_four_coin_tree, leaves, replace_leaf, repeat_twice_tree

F, R = AlternatorState.F, AlternatorState.R


def test_four_coins_a_state():
    report = verify(build_strategy(4, "a"))
    assert report.valid
    assert report.max_depth == 3
    assert report.worlds_checked == 8


def test_set_aside_coin_counted_once():
    # coin 4 never reaches a pan, so both of its starting states look alike
    assert verify(build_strategy(5, "a")).worlds_checked == 9


def test_alternative_four_coin_strategy():
    report = verify(alternative_four_coin_tree())
    assert report.valid and report.max_depth == 3


def test_mutated_leaf_caught():
    tree = build_strategy(3, "f")
    bad = StrategyTree(3, "f", replace_leaf(tree.root, ("E",), Leaf(0)))
    report = verify(bad)
    assert not report.valid
    assert [f.world for f in report.failures] == [World(3, 2, F)]


def test_false_unreachable_caught():
    tree = StrategyTree(3, "f", Internal(Weighing([0], [1]), Unreachable(), Leaf(0), Leaf(1)))
    report = verify(tree)
    assert not report.valid
    assert any(f.world == World(3, 2, F) for f in report.failures)
    assert any(f.world is None and "admits (2,f)" in f.description for f in report.failures)


def test_structural_errors_raised_first():
    for root in (
        Internal(Weighing([0], [0]), Leaf(0), Leaf(0), Leaf(1)),
        Internal(Weighing([0, 1], [2]), Leaf(0), Leaf(0), Leaf(1)),
        Leaf(7),
    ):
        with pytest.raises(InvalidTree):
            verify(StrategyTree(3, "f", root))


@pytest.mark.parametrize("state", ["f", "r", "a"])
def test_constructed_trees_valid_and_tight(state):
    from alternator.jacobsthal import min_weighings_bound

    for n in range(1, 201):
        report = verify(build_strategy(n, state))
        assert report.valid, (n, report.summary())
        assert report.max_depth == min_weighings_bound(n, state)


def test_a_state_pairs_name_same_coin():
    from alternator.strategy import run_strategy

    for n in range(1, 40):
        tree = build_strategy(n, "a")
        for c in range(n):
            assert run_strategy(tree, World(n, c, F))[0] == run_strategy(tree, World(n, c, R))[0] == c


@pytest.mark.parametrize("state", ["f", "r", "a"])
def test_every_leaf_relabel_is_killed(state):
    for n in range(2, 10):
        tree = build_strategy(n, state)
        for path, leaf in leaves(tree.root):
            for other in range(n):
                if other == leaf.alternator:
                    continue
                report = verify(StrategyTree(n, state, replace_leaf(tree.root, path, Leaf(other))))
                assert not report.valid
                assert any(f.world is not None for f in report.failures)


def test_verify_against_bound():
    assert verify_against_bound(build_strategy(5, "a"))
    assert verify_against_bound(build_strategy(1, "f"))
    slow = repeat_twice_tree(5, "a")
    report = verify(slow)
    assert report.valid and report.max_depth == 4
    assert not verify_against_bound(slow)


def test_parallel_matches_serial():
    tree = build_strategy(60, "a")
    serial, parallel = verify(tree), verify(tree, threads=3)
    assert (serial.valid, serial.max_depth, serial.worlds_checked) == (
        parallel.valid,
        parallel.max_depth,
        parallel.worlds_checked,
    )
