"""Sentence splitting and tokenization.

Three tokenization modes are supported:

* ``han-character``: every CJK ideograph is one token, everything else is dropped.
* ``latin-word``: alphanumeric runs (with intra-word apostrophes/hyphens) are tokens.
* ``lexicon-segmented``: forward maximum matching against a word list, for
  Chinese text written without spaces.

Tokens are plain ``str`` objects.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional

from .errors import EmptyLexiconError, ValidationError

DEFAULT_TERMINATORS = frozenset(".!?。！？")

# CJK Unified Ideographs and Extension A.
HAN_RANGES = ((0x4E00, 0x9FFF), (0x3400, 0x4DBF))

_LATIN_WORD = re.compile(r"[^\W_]+(?:['’\-][^\W_]+)*")


class Mode(str, enum.Enum):
    HAN_CHARACTER = "han-character"
    LATIN_WORD = "latin-word"
    LEXICON_SEGMENTED = "lexicon-segmented"


@dataclass(frozen=True)
class TokenizationConfig:
    mode: Mode = Mode.HAN_CHARACTER
    terminators: frozenset = DEFAULT_TERMINATORS
    lowercase_fold: bool = True

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        terms = frozenset(self.terminators)
        if not terms:
            raise ValidationError("terminators", "terminator set must be non-empty")
        if any(len(t) != 1 for t in terms):
            raise ValidationError("terminators", "each terminator must be a single character")
        object.__setattr__(self, "terminators", terms)


@dataclass(frozen=True)
class Lexicon:
    words: frozenset = field(default_factory=frozenset)
    max_word_len: int = 0

    def __contains__(self, word):
        return word in self.words

    def __len__(self):
        return len(self.words)


def build_lexicon(words: Iterable[str]) -> Lexicon:
    """Deduplicate ``words`` into a :class:`Lexicon`.

    Surrounding whitespace is stripped; empty entries and entries with
    embedded whitespace are dropped.
    """
    kept = set()
    for w in words:
        w = w.strip()
        if not w or any(c.isspace() for c in w):
            continue
        kept.add(w)
    return Lexicon(frozenset(kept), max((len(w) for w in kept), default=0))


def is_han(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in HAN_RANGES)


def split_sentences(text: str, config: TokenizationConfig = TokenizationConfig()) -> List[str]:
    """Split ``text`` at every terminator character.

    Terminators are removed, whitespace-only pieces are dropped and a trailing
    unterminated piece is kept as the last sentence.
    """
    terms = config.terminators
    sentences = []
    start = 0
    for i, ch in enumerate(text):
        if ch in terms:
            piece = text[start:i]
            if piece.strip():
                sentences.append(piece)
            start = i + 1
    tail = text[start:]
    if tail.strip():
        sentences.append(tail)
    return sentences


def tokenize_han(sentence: str) -> List[str]:
    return [ch for ch in sentence if is_han(ch)]


def tokenize_latin(sentence: str, lowercase_fold: bool = True) -> List[str]:
    tokens = _LATIN_WORD.findall(sentence)
    if lowercase_fold:
        tokens = [t.lower() for t in tokens]
    return tokens


def _matchable_runs(sentence: str) -> Iterator[str]:
    # Punctuation, whitespace and digits break runs; words never span them.
    run = []
    for ch in sentence:
        if ch.isalpha():
            run.append(ch)
        elif run:
            yield "".join(run)
            run = []
    if run:
        yield "".join(run)


def segment_max_match(sentence: str, lexicon: Lexicon) -> List[str]:
    """Forward maximum matching segmentation.

    At each position the longest lexicon word starting there is taken; when
    no word matches, the single character is emitted instead. Only letters
    (Han ideographs included) take part in matching.
    """
    if not lexicon.words:
        raise EmptyLexiconError("cannot segment with an empty lexicon")
    words = lexicon.words
    longest = lexicon.max_word_len
    tokens = []
    for run in _matchable_runs(sentence):
        i, n = 0, len(run)
        while i < n:
            for size in range(min(longest, n - i), 1, -1):
                if run[i:i + size] in words:
                    break
            else:
                size = 1
            tokens.append(run[i:i + size])
            i += size
    return tokens


def tokenize_sentence(sentence: str, config: TokenizationConfig,
                      lexicon: Optional[Lexicon] = None) -> List[str]:
    if config.mode is Mode.HAN_CHARACTER:
        return tokenize_han(sentence)
    if config.mode is Mode.LATIN_WORD:
        return tokenize_latin(sentence, config.lowercase_fold)
    if lexicon is None:
        raise EmptyLexiconError("lexicon-segmented mode requires a lexicon")
    return segment_max_match(sentence, lexicon)


def tokenize_text(text: str, config: TokenizationConfig,
                  lexicon: Optional[Lexicon] = None) -> List[List[str]]:
    """Split ``text`` into sentences and tokenize each one.

    Sentences that yield no tokens (e.g. a run of digits in character mode)
    are dropped, so the result is ready for profiling.
    """
    out = []
    for sentence in split_sentences(text, config):
        tokens = tokenize_sentence(sentence, config, lexicon)
        if tokens:
            out.append(tokens)
    return out

