"""Jacobsthal numbers and the counting bounds built on them.

Python integers never wrap, but every function that grows exponentially
still refuses indices above ``MAX_INDEX`` so that a typo on the command
line fails fast instead of allocating a huge number.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

MAX_INDEX = 4096
MAX_ENUMERATION_LENGTH = 20


class InitialState(str, Enum):
    """What is known about the alternator before the first weighing."""

    F = "f"
    R = "r"
    A = "a"

    @classmethod
    def parse(cls, value: "str | InitialState") -> "InitialState":
        if isinstance(value, InitialState):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown initial state {value!r}; expected f, r or a") from None


class JacobsthalSplit(NamedTuple):
    k: int
    pan_size: int
    leftover: int


def _check_index(n: int, name: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{name} must be non-negative, got {n}")
    if n > MAX_INDEX:
        raise OverflowError(f"{name}={n} exceeds the supported maximum {MAX_INDEX}")


def jacobsthal(n: int) -> int:
    """Return J_n = (2**n - (-1)**n) / 3.

    >>> [jacobsthal(i) for i in range(8)]
    [0, 1, 1, 3, 5, 11, 21, 43]
    """
    _check_index(n)
    return (2**n - (-1) ** n) // 3


def jacobsthal_split(n_coins: int) -> JacobsthalSplit:
    """Find k with J_k < n_coins <= J_{k+1} and split n_coins = 2*J_{k-1} + m.

    The two pans of the f-state strategy hold ``pan_size`` coins each and
    ``leftover`` coins stay off the scale; 0 <= leftover <= J_k always holds.
    """
    if n_coins < 2:
        raise ValueError(f"a Jacobsthal split needs at least 2 coins, got {n_coins}")
    k = 2
    while jacobsthal(k + 1) < n_coins:
        k += 1
    pan = jacobsthal(k - 1)
    return JacobsthalSplit(k, pan, n_coins - 2 * pan)


def min_weighings_bound(n_coins: int, state: InitialState | str) -> int:
    """Fewest weighings that guarantee finding the alternator among n_coins.

    f-state: smallest w with n_coins <= J_{w+2}; r- and a-state: smallest w
    with n_coins <= J_{w+1}. A single coin needs no weighing.
    """
    state = InitialState.parse(state)
    if n_coins < 1:
        raise ValueError(f"n_coins must be positive, got {n_coins}")
    if n_coins == 1:
        return 0
    shift = 2 if state is InitialState.F else 1
    w = 0
    while jacobsthal(w + shift) < n_coins:
        w += 1
    return w


def trivial_bounds(n_coins: int, state: InitialState | str) -> tuple[int, int]:
    """Lower and upper bounds derived from the classic fake-coin strategy.

    With 3**(k-1) < n_coins <= 3**k this is (k+1, 2k) for the r- and a-states
    and (k, 2k-1) for the f-state.
    """
    state = InitialState.parse(state)
    if n_coins < 2:
        raise ValueError(f"trivial bounds need at least 2 coins, got {n_coins}")
    k = 1
    while 3**k < n_coins:
        k += 1
    if state is InitialState.F:
        return k, 2 * k - 1
    return k + 1, 2 * k


def classic_fake_capacity(w: int) -> int:
    """Most coins among which a lighter fake can be found in w weighings."""
    _check_index(w, "w")
    return 3**w


def count_admissible_strings(w: int) -> int:
    """Count E/L/R strings of length w where no L or R is followed by L or R."""
    _check_index(w, "w")
    # ends_e: strings ending in E (or empty); ends_lr: ending in L or R
    ends_e, ends_lr = 1, 0
    for _ in range(w):
        ends_e, ends_lr = ends_e + ends_lr, 2 * ends_e
    return ends_e + ends_lr


def is_admissible(outcomes: str) -> bool:
    """True when no two consecutive letters are both unbalanced (L or R)."""
    return all(not (a in "LR" and b in "LR") for a, b in zip(outcomes, outcomes[1:]))


def enumerate_admissible_strings(w: int) -> list[str]:
    """All admissible strings of length w, sorted with E < L < R."""
    if w < 0:
        raise ValueError(f"w must be non-negative, got {w}")
    if w > MAX_ENUMERATION_LENGTH:
        raise OverflowError(
            f"w={w} exceeds the enumeration limit {MAX_ENUMERATION_LENGTH}"
        )
    out = [""]
    for _ in range(w):
        out = [s + c for s in out for c in "ELR" if not (c != "E" and s[-1:] in ("L", "R"))]
    return out

