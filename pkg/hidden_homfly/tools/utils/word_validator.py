"""
Braid word validator for the text formats used by the CLI, the corpus files
and the HTTP API.
Handles tokenizing, validation and corpus-line parsing.
"""

import re
import logging
from typing import List, Optional, Sequence

from pydantic import BaseModel, Field

from ..braidword import BraidWord, BraidWordError

logger = logging.getLogger(__name__)


class WordValidationError(BraidWordError):
    """Raised when braid word text cannot be parsed."""
    pass


class CorpusEntry(BaseModel):
    """One line of a corpus file."""
    name: str
    strands: int
    word: List[int] = Field(default_factory=list)
    expected: Optional[str] = None
    line: int = 0

    def braid(self) -> BraidWord:
        return BraidWord(self.strands, tuple(self.word))


class BraidWordValidator:
    """
    Validator for braid words written as whitespace-separated signed integers.
    Corpus format: ``name ; strands ; letters ; [expected-Q]``, ``#`` starts a comment.
    """

    TOKEN_PATTERN = re.compile(r'^[+-]?\d+$')
    SEPARATOR = ';'
    COMMENT = '#'

    def tokenize(self, text: str) -> List[int]:
        """
        Split text into letters.

        Args:
            text: Whitespace-separated signed integers (commas are tolerated)

        Returns:
            List of integer letters

        Raises:
            WordValidationError: On a token that is not an integer
        """
        letters = []
        for token in str(text).replace(',', ' ').split():
            if not self.TOKEN_PATTERN.match(token):
                raise WordValidationError(f"not an integer letter: {token!r}")
            letters.append(int(token))
        return letters

    def parse(self, text: str, strands: int) -> BraidWord:
        """
        Parse a word on an explicit strand count.

        Raises:
            WordValidationError: On bad tokens, zero letters, out-of-range
                indices or strands < 1
        """
        letters = self.tokenize(text)
        try:
            strands = int(strands)
        except (TypeError, ValueError):
            raise WordValidationError(f"strand count must be an integer, got {strands!r}")
        try:
            return BraidWord(strands, tuple(letters))
        except WordValidationError:
            raise
        except BraidWordError as e:
            raise WordValidationError(str(e))

    def from_letters(self, letters: Sequence[int], strands: int) -> BraidWord:
        """Build a word from already-tokenized letters, validating it."""
        try:
            return BraidWord(int(strands), tuple(int(e) for e in letters))
        except BraidWordError as e:
            raise WordValidationError(str(e))

    def validate_word(self, text: str, strands: int) -> bool:
        try:
            self.parse(text, strands)
            return True
        except WordValidationError as e:
            logger.debug(f"Validation failed for [{text}] on {strands}: {e}")
            return False

    def parse_corpus_line(self, line: str, line_number: int = 0) -> Optional[CorpusEntry]:
        """
        Parse one corpus line.

        Args:
            line: Raw line text
            line_number: 1-based position in the file, kept for reporting

        Returns:
            The entry, or None for blank and comment-only lines

        Raises:
            WordValidationError: If the line is malformed
        """
        content = line.split(self.COMMENT, 1)[0].strip()
        if not content:
            return None
        fields = [f.strip() for f in content.split(self.SEPARATOR)]
        if len(fields) not in (3, 4):
            raise WordValidationError(
                f"line {line_number}: expected 'name ; strands ; letters ; [expected]', got {len(fields)} fields"
            )
        name, strands, letters = fields[:3]
        if not name:
            raise WordValidationError(f"line {line_number}: empty name")
        if not re.match(r'^\d+$', strands):
            raise WordValidationError(f"line {line_number}: bad strand count {strands!r}")
        try:
            word = self.parse(letters, int(strands))
        except WordValidationError as e:
            raise WordValidationError(f"line {line_number}: {e}")
        expected = fields[3] if len(fields) == 4 and fields[3] else None
        return CorpusEntry(name=name, strands=word.strands, word=list(word.letters),
                           expected=expected, line=line_number)


# Module-level convenience functions
_validator = BraidWordValidator()

def parse_braid_word(text: str, strands: int) -> BraidWord:
    """Parse a braid word on an explicit strand count."""
    return _validator.parse(text, strands)

def validate_braid_word(text: str, strands: int) -> bool:
    """Check whether text is a valid word on the given strands."""
    return _validator.validate_word(text, strands)

def braid_from_letters(letters: Sequence[int], strands: int) -> BraidWord:
    """Validate already-tokenized letters."""
    return _validator.from_letters(letters, strands)

def parse_corpus_line(line: str, line_number: int = 0) -> Optional[CorpusEntry]:
    """Parse one corpus line; None for blank and comment lines."""
    return _validator.parse_corpus_line(line, line_number)
