"""Sufficient statistics of a tokenized corpus.

A :class:`CorpusProfile` holds everything the entropy formulas need: the
token count, the vocabulary size, and for each sentence length ``k`` the
number of *distinct* ``k``-token sentences.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence

from .errors import EmptySentenceError, InvariantViolation, ValidationError

_LOG_INT64_MAX = 63 * math.log(2)


def _frozen_map(d):
    return MappingProxyType(dict(sorted(d.items())))


@dataclass(frozen=True, eq=False)
class CorpusProfile:
    """Counts describing one sample.

    ``occurrences_by_len`` is ``None`` for profiles built from published
    counts, where the sentence length distribution is unknown.
    """

    label: str
    total_tokens: int
    vocab_size: int
    distinct_by_len: Mapping[int, int]
    occurrences_by_len: Optional[Mapping[int, int]] = None

    @property
    def max_len(self) -> int:
        return max(self.distinct_by_len, default=0)

    @property
    def has_distribution(self) -> bool:
        return self.occurrences_by_len is not None

    def __eq__(self, other):
        if not isinstance(other, CorpusProfile):
            return NotImplemented
        return (
            self.label == other.label
            and self.total_tokens == other.total_tokens
            and self.vocab_size == other.vocab_size
            and dict(self.distinct_by_len) == dict(other.distinct_by_len)
            and (None if self.occurrences_by_len is None else dict(self.occurrences_by_len))
            == (None if other.occurrences_by_len is None else dict(other.occurrences_by_len))
        )

    def check_invariants(self) -> None:
        """Raise :class:`InvariantViolation` if the counts are inconsistent."""
        if self.vocab_size > self.total_tokens:
            raise InvariantViolation(f"{self.label}: vocab_size exceeds total_tokens")
        for k, n in self.distinct_by_len.items():
            if k < 1 or n < 1:
                raise InvariantViolation(f"{self.label}: bad distinct count {n} at length {k}")
            if self.vocab_size and k * math.log(self.vocab_size) <= _LOG_INT64_MAX:
                if n > self.vocab_size ** k:
                    raise InvariantViolation(f"{self.label}: {n} distinct sentences of length {k} exceed vocab_size**k")
        occ = self.occurrences_by_len
        if occ is None:
            return
        if set(occ) != set(self.distinct_by_len):
            raise InvariantViolation(f"{self.label}: length keys differ between count maps")
        for k, n in occ.items():
            if n < self.distinct_by_len[k]:
                raise InvariantViolation(f"{self.label}: fewer occurrences than distinct sentences at length {k}")
        if sum(k * n for k, n in occ.items()) != self.total_tokens:
            raise InvariantViolation(f"{self.label}: length distribution does not sum to total_tokens")


def profile(label: str, sentences: Iterable[Sequence[str]]) -> CorpusProfile:
    """Build a profile from tokenized sentences in a single pass."""
    vocab = set()
    seen = set()
    distinct = Counter()
    occurrences = Counter()
    total = 0
    for sentence in sentences:
        key = tuple(sentence)
        k = len(key)
        if k == 0:
            raise EmptySentenceError(f"{label}: empty sentence reached the profiler")
        total += k
        vocab.update(key)
        occurrences[k] += 1
        if key not in seen:
            seen.add(key)
            distinct[k] += 1
    return CorpusProfile(
        label=label,
        total_tokens=total,
        vocab_size=len(vocab),
        distinct_by_len=_frozen_map(distinct),
        occurrences_by_len=_frozen_map(occurrences),
    )


def _count(value, field):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(field, f"expected an integer count, got {value!r}")
    if value < 0:
        raise ValidationError(field, f"count must be non-negative, got {value}")
    return value


def profile_from_counts(label: str, total_tokens: int, vocab_size: int,
                        distinct_by_len: Mapping) -> CorpusProfile:
    """Build a profile directly from published counts.

    Keys of ``distinct_by_len`` may be ints or decimal strings. Lengths with
    a zero count are dropped since they contribute nothing.
    """
    total_tokens = _count(total_tokens, "total_tokens")
    vocab_size = _count(vocab_size, "vocab_size")
    if vocab_size > total_tokens:
        raise ValidationError("vocab_size", f"vocab_size {vocab_size} exceeds total_tokens {total_tokens}")
    distinct = {}
    for key, n in distinct_by_len.items():
        field = f"distinct_by_len[{key!r}]"
        try:
            k = int(key)
        except (TypeError, ValueError):
            raise ValidationError(field, "sentence length must be an integer") from None
        if isinstance(key, str) and key.strip() != str(k):
            raise ValidationError(field, "sentence length must be a plain decimal integer")
        if k < 1:
            raise ValidationError(field, "sentence length must be >= 1")
        if k in distinct:
            raise ValidationError(field, f"length {k} given twice")
        n = _count(n, field)
        if n:
            distinct[k] = n
    return CorpusProfile(label, total_tokens, vocab_size, _frozen_map(distinct), None)
