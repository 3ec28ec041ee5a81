"""
Window search for the polynomial regime of coefficient series.
The start of the interpolation window grows geometrically after every failed
verification, bounded by a maximum number of attempts.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass
class StabilizationConfig:
    """Configuration for the window search."""
    verify_extra: int = 5              # points checked beyond the interpolation nodes
    backoff_multiplier: float = 2.0    # growth factor of the window start
    max_attempts: int = 6              # bounded retries


class StabilizationError(Exception):
    """Raised when verification never succeeds within the attempt budget."""
    pass


class StabilizationManager:
    """
    Moves an interpolation window to larger T until a checker accepts it.
    """

    def __init__(self, config: Optional[StabilizationConfig] = None):
        """
        Initialize the manager.

        Args:
            config: Search configuration (uses defaults if not provided)
        """
        self.config = config or StabilizationConfig()
        self.reset(1)

    def reset(self, start: int):
        """Reset the search state for a new series."""
        self.initial_start = start
        self.current_start = start
        self.attempt_count = 0

    def should_continue(self) -> bool:
        return self.attempt_count < self.config.max_attempts

    def advance(self):
        """Move the window start for the next attempt."""
        grown = int(self.current_start * self.config.backoff_multiplier)
        self.current_start = max(grown, self.current_start + 1)
        logger.debug(f"Window start moved to {self.current_start} (attempt {self.attempt_count + 1})")

    def get_stats(self) -> Dict[str, Any]:
        return {
            "initial_start": self.initial_start,
            "final_start": self.current_start,
            "attempts": self.attempt_count,
        }

    def search_until_stable(self, checker: Callable[[int], Optional[T]], start: int) -> T:
        """
        Run checker at growing window starts until it returns a result.

        Args:
            checker: Called with a window start; returns a result or None on mismatch
            start: First window start (must be positive)

        Returns:
            The first non-None checker result

        Raises:
            StabilizationError: If max_attempts windows all fail
        """
        self.reset(max(1, start))
        while self.should_continue():
            result = checker(self.current_start)
            self.attempt_count += 1
            if result is not None:
                if self.attempt_count > 1:
                    logger.info(f"Window stabilized at T={self.current_start} after {self.attempt_count} attempts")
                return result
            logger.warning(f"Verification failed for window starting at T={self.current_start}")
            if self.should_continue():
                self.advance()

        error_msg = (f"no stable window after {self.attempt_count} attempts "
                     f"(last start T={self.current_start})")
        logger.error(error_msg)
        raise StabilizationError(error_msg)


def search_until_stable(
    checker: Callable[[int], Optional[T]],
    start: int,
    config: Optional[StabilizationConfig] = None,
) -> T:
    """
    Convenience wrapper around StabilizationManager.search_until_stable.

    Raises:
        StabilizationError: If no window verifies within the attempt budget
    """
    return StabilizationManager(config).search_until_stable(checker, start)
