"""JSON documents for strategy trees.

A document looks like::

    {"format_version": "1", "n_coins": 3, "initial_state": "f",
     "root": {"weigh": {"left": [0], "right": [1]},
              "on_equal": {"alternator": 2},
              "on_left_light": {"alternator": 0},
              "on_right_light": {"alternator": 1}}}

Dumps are canonical (sorted keys, ascending id arrays, trailing newline)
so two builds of the same tree are byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .jacobsthal import InitialState
from .model import Weighing
from .strategy import UNREACHABLE, Internal, Leaf, StrategyNode, StrategyTree, Unreachable

FORMAT_VERSION = "1"


class TreeFormatError(ValueError):
    pass


def node_to_json(node: StrategyNode) -> dict[str, Any]:
    if isinstance(node, Leaf):
        return {"alternator": node.alternator}
    if isinstance(node, Unreachable):
        return {"unreachable": True}
    return {
        "weigh": {"left": sorted(node.weighing.left), "right": sorted(node.weighing.right)},
        "on_equal": node_to_json(node.on_E),
        "on_left_light": node_to_json(node.on_L),
        "on_right_light": node_to_json(node.on_R),
    }


def to_document(tree: StrategyTree) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "n_coins": tree.n_coins,
        "initial_state": tree.initial_state.value,
        "root": node_to_json(tree.root),
    }


def dumps(tree: StrategyTree) -> str:
    return json.dumps(to_document(tree), sort_keys=True, indent=2) + "\n"


def _coin_ids(value: Any, where: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        raise TreeFormatError(f"{where} must be a list of integer coin ids")
    if value != sorted(set(value)):
        raise TreeFormatError(f"{where} must be strictly ascending")
    return value


def node_from_json(obj: Any, path: str = "root") -> StrategyNode:
    if not isinstance(obj, dict):
        raise TreeFormatError(f"{path}: expected an object")
    keys = set(obj)
    if keys == {"alternator"}:
        coin = obj["alternator"]
        if not isinstance(coin, int) or isinstance(coin, bool):
            raise TreeFormatError(f"{path}: alternator must be an integer")
        return Leaf(coin)
    if keys == {"unreachable"}:
        if obj["unreachable"] is not True:
            raise TreeFormatError(f"{path}: unreachable must be true")
        return UNREACHABLE
    if keys == {"weigh", "on_equal", "on_left_light", "on_right_light"}:
        pans = obj["weigh"]
        if not isinstance(pans, dict) or set(pans) != {"left", "right"}:
            raise TreeFormatError(f"{path}.weigh: expected exactly 'left' and 'right'")
        weighing = Weighing(
            _coin_ids(pans["left"], f"{path}.weigh.left"),
            _coin_ids(pans["right"], f"{path}.weigh.right"),
        )
        return Internal(
            weighing,
            node_from_json(obj["on_equal"], f"{path}.on_equal"),
            node_from_json(obj["on_left_light"], f"{path}.on_left_light"),
            node_from_json(obj["on_right_light"], f"{path}.on_right_light"),
        )
    raise TreeFormatError(f"{path}: unrecognised node keys {sorted(keys)}")


def from_document(doc: Any) -> StrategyTree:
    if not isinstance(doc, dict):
        raise TreeFormatError("document must be a JSON object")
    expected = {"format_version", "n_coins", "initial_state", "root"}
    if set(doc) != expected:
        raise TreeFormatError(f"document keys must be {sorted(expected)}, got {sorted(doc)}")
    if doc["format_version"] != FORMAT_VERSION:
        raise TreeFormatError(f"unsupported format_version {doc['format_version']!r}")
    n = doc["n_coins"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise TreeFormatError("n_coins must be a positive integer")
    if doc["initial_state"] not in ("f", "r", "a"):
        raise TreeFormatError(f"initial_state must be f, r or a, got {doc['initial_state']!r}")
    return StrategyTree(n, InitialState(doc["initial_state"]), node_from_json(doc["root"]))


def loads(text: str) -> StrategyTree:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise TreeFormatError(f"not valid JSON: {e}") from None
    return from_document(doc)


def load(path: str | Path) -> StrategyTree:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(tree: StrategyTree, path: str | Path) -> None:
    Path(path).write_text(dumps(tree), encoding="utf-8", newline="\n")
