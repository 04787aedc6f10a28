import pytest
from hypothesis import given, strategies as st

from alternator.jacobsthal import (
    MAX_INDEX,
    InitialState,
    classic_fake_capacity,
    count_admissible_strings,
    enumerate_admissible_strings,
    is_admissible,
    jacobsthal,
    jacobsthal_split,
    min_weighings_bound,
    trivial_bounds,
)
from oracles import admissible_by_filter, jacobsthal_by_recurrence

STATES = list(InitialState)


@pytest.mark.parametrize("n, expected", [(0, 0), (3, 3), (4, 5), (5, 11)])
def test_jacobsthal_examples(n, expected):
    assert jacobsthal(n) == expected


def test_jacobsthal_matches_recurrence_oracle():
    assert [jacobsthal(n) for n in range(70)] == [jacobsthal_by_recurrence(n) for n in range(70)]


@pytest.mark.parametrize("n", range(1, 41))
def test_jacobsthal_identities(n):
    assert jacobsthal(n + 1) == jacobsthal(n) + 2 * jacobsthal(n - 1)
    assert jacobsthal(n) == 2 * jacobsthal(n - 1) - (-1) ** n


def test_jacobsthal_range_errors():
    assert jacobsthal(62) == jacobsthal_by_recurrence(62)
    with pytest.raises(OverflowError):
        jacobsthal(MAX_INDEX + 1)
    with pytest.raises(ValueError):
        jacobsthal(-1)


@pytest.mark.parametrize(
    "n, expected", [(4, (3, 1, 2)), (5, (3, 1, 3)), (11, (4, 3, 5))]
)
def test_split_examples(n, expected):
    assert tuple(jacobsthal_split(n)) == expected


def test_split_guarantee_over_range():
    for n in range(2, 10001):
        k, pan, m = jacobsthal_split(n)
        assert jacobsthal(k) < n <= jacobsthal(k + 1)
        assert pan == jacobsthal(k - 1)
        assert 0 <= m <= jacobsthal(k)
        assert 2 * pan + m == n


def test_split_rejects_single_coin():
    with pytest.raises(ValueError):
        jacobsthal_split(1)


@pytest.mark.parametrize(
    "n, state, expected", [(3, "f", 1), (5, "a", 3), (1, "a", 0), (11, "a", 4)]
)
def test_min_weighings_examples(n, state, expected):
    assert min_weighings_bound(n, state) == expected


def test_min_weighings_against_brute_threshold():
    # smallest w such that n fits, found by scanning the recurrence oracle
    for n in range(2, 500):
        f = next(w for w in range(40) if n <= jacobsthal_by_recurrence(w + 2))
        r = next(w for w in range(40) if n <= jacobsthal_by_recurrence(w + 1))
        assert min_weighings_bound(n, "f") == f
        assert min_weighings_bound(n, "r") == min_weighings_bound(n, "a") == r


@pytest.mark.parametrize(
    "n, state, expected", [(9, "a", (3, 4)), (3, "f", (1, 1)), (27, "r", (4, 6))]
)
def test_trivial_bound_examples(n, state, expected):
    assert trivial_bounds(n, state) == expected


def test_bounds_sandwich_and_corollary():
    for n in range(2, 10001):
        f = min_weighings_bound(n, "f")
        assert min_weighings_bound(n, "a") == min_weighings_bound(n, "r") == f + 1
        for s in STATES:
            lo, hi = trivial_bounds(n, s)
            assert lo <= min_weighings_bound(n, s) <= hi


def test_trivial_bounds_domain():
    with pytest.raises(ValueError):
        trivial_bounds(1, "a")


@pytest.mark.parametrize("w, expected", [(0, 1), (2, 9), (4, 81)])
def test_classic_capacity(w, expected):
    assert classic_fake_capacity(w) == expected


@pytest.mark.parametrize("w, expected", [(0, 1), (1, 3), (2, 5)])
def test_count_examples(w, expected):
    assert count_admissible_strings(w) == expected


def test_enumeration_examples():
    assert enumerate_admissible_strings(0) == [""]
    assert enumerate_admissible_strings(1) == ["E", "L", "R"]
    assert enumerate_admissible_strings(2) == ["EE", "EL", "ER", "LE", "RE"]


@pytest.mark.parametrize("w", range(0, 9))
def test_enumeration_matches_filter_oracle(w):
    assert enumerate_admissible_strings(w) == admissible_by_filter(w)


def test_count_is_shifted_jacobsthal():
    for w in range(16):
        assert count_admissible_strings(w) == jacobsthal(w + 2)
    for w in range(13):
        listing = enumerate_admissible_strings(w)
        assert len(listing) == count_admissible_strings(w)
        assert len(set(listing)) == len(listing)


def test_enumeration_limit():
    with pytest.raises(OverflowError):
        enumerate_admissible_strings(21)


@given(st.text(alphabet="ELR", max_size=12))
def test_is_admissible_agrees_with_definition(s):
    expected = all(not (s[i] in "LR" and s[i + 1] in "LR") for i in range(len(s) - 1))
    assert is_admissible(s) == expected
