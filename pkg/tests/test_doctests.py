import doctest
import importlib

import pytest


@pytest.mark.parametrize("name", ["alternator.jacobsthal", "alternator.strategy"])
def test_doctests(name):
    assert doctest.testmod(importlib.import_module(name)).failed == 0
