"""
Utilities package for the HOMFLYPT tools.
Provides braid word text validation and the window search used by Q-recovery.
"""

from .word_validator import (
    parse_braid_word,
    validate_braid_word,
    braid_from_letters,
    parse_corpus_line,
    BraidWordValidator,
    CorpusEntry,
    WordValidationError
)

from .stabilization import (
    StabilizationManager,
    StabilizationConfig,
    StabilizationError,
    search_until_stable
)

__all__ = [
    # Word validation
    'parse_braid_word',
    'validate_braid_word',
    'braid_from_letters',
    'parse_corpus_line',
    'BraidWordValidator',
    'CorpusEntry',
    'WordValidationError',

    # Window search
    'StabilizationManager',
    'StabilizationConfig',
    'StabilizationError',
    'search_until_stable'
]
