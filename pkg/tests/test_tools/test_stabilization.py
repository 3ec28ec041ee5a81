"""
Tests for the interpolation window search.
"""

import pytest

from hidden_homfly.tools.utils.stabilization import (
    StabilizationConfig,
    StabilizationError,
    StabilizationManager,
    search_until_stable,
)


def test_first_window_accepted():
    manager = StabilizationManager()
    assert manager.search_until_stable(lambda start: ("ok", start), 7) == ("ok", 7)
    assert manager.get_stats() == {"initial_start": 7, "final_start": 7, "attempts": 1}


def test_window_start_grows_geometrically():
    starts = []

    def checker(start):
        starts.append(start)
        return start if start >= 20 else None

    assert search_until_stable(checker, 3, StabilizationConfig(max_attempts=10)) == 24
    assert starts == [3, 6, 12, 24]


def test_non_positive_start_is_lifted():
    starts = []

    def checker(start):
        starts.append(start)
        return start if len(starts) == 3 else None

    search_until_stable(checker, -4, StabilizationConfig(backoff_multiplier=1.0))
    assert starts == [1, 2, 3]


def test_attempt_budget():
    calls = []

    def never(start):
        calls.append(start)
        return None

    with pytest.raises(StabilizationError):
        search_until_stable(never, 1, StabilizationConfig(max_attempts=3))
    assert len(calls) == 3


def test_manager_stats_after_exhausted_budget():
    manager = StabilizationManager(StabilizationConfig(max_attempts=2))
    with pytest.raises(StabilizationError, match="after 2 attempts"):
        manager.search_until_stable(lambda start: None, 5)
    assert not manager.should_continue()
    assert manager.get_stats() == {"initial_start": 5, "final_start": 10, "attempts": 2}


def test_manager_stats_count_every_checker_call():
    manager = StabilizationManager()
    manager.search_until_stable(lambda start: start if start >= 8 else None, 2)
    assert manager.get_stats() == {"initial_start": 2, "final_start": 8, "attempts": 3}
    assert manager.should_continue()


def test_zero_attempt_budget_never_calls_the_checker():
    calls = []
    with pytest.raises(StabilizationError):
        search_until_stable(lambda start: calls.append(start), 1, StabilizationConfig(max_attempts=0))
    assert calls == []
