"""
Shared fixtures: a fresh memo cache per test and small default configs.
"""

import pytest

from hidden_homfly.tools.ringkit import LaurentA
from hidden_homfly.tools.skein_f import EvalConfig, LeafConvention, SkeinMemo, get_memo, set_memo
from hidden_homfly.tools.utils.stabilization import StabilizationConfig


@pytest.fixture(autouse=True)
def fresh_memo():
    previous = get_memo()
    memo = SkeinMemo()
    set_memo(memo)
    yield memo
    set_memo(previous)


@pytest.fixture
def forced():
    return EvalConfig(convention=LeafConvention.FORCED)


@pytest.fixture
def paper():
    return EvalConfig(convention=LeafConvention.PAPER)


@pytest.fixture
def stabilization():
    return StabilizationConfig()


def alpha(*terms):
    """LaurentA from (exponent, coefficient) pairs."""
    return LaurentA(dict(terms))
