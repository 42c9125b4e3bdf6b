"""Sentence-configuration entropy.

For sentences of ``k`` tokens drawn from a vocabulary of ``N`` tokens there
are ``N**k`` equiprobable configurations. The maximum entropy over all of
them is ``k ln N``. Summing ``-p ln p`` over only the ``n_k`` distinct
configurations actually seen gives the realized entropy

    k * n_k * ln(N) / N**k

and the corpus total ``sigma`` is the sum of realized entropies over all
sentence lengths. All values are in nats.

``N**k`` overflows a double quickly (k ~ 90 for N ~ 2500), so large
exponents are evaluated in log space; terms below the smallest subnormal
flush to exactly 0.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import DomainError
from .stats import CorpusProfile

DEFAULT_NORM_BASE = 10000

# Beyond this, exp() overflows; below -745 it underflows to 0.
_MAX_DIRECT_LOG = 700.0

_BRUTE_FORCE_MAX_VOCAB = 8
_BRUTE_FORCE_MAX_LEN = 6


class BoundExceededWarning(UserWarning):
    """A distinct-sentence count exceeds the number of possible configurations."""


@dataclass(frozen=True)
class LengthTerm:
    k: int
    h_max: float
    h_realized: float
    cumulative: float


@dataclass(frozen=True)
class EntropyReport:
    label: str
    per_len: Tuple[LengthTerm, ...]
    sigma: float
    sigma_norm: float
    total_tokens: int
    vocab_size: int
    norm_base: int = DEFAULT_NORM_BASE


def h_max(k: int, vocab_size: int) -> float:
    if k < 1:
        raise DomainError(f"sentence length must be >= 1, got {k}")
    if vocab_size < 1:
        raise DomainError(f"vocab_size must be >= 1, got {vocab_size}")
    return k * math.log(vocab_size)


def h_realized(k: int, n_k: int, vocab_size: int) -> float:
    """Entropy contributed by ``n_k`` distinct ``k``-token sentences.

    ``n_k`` is not checked against ``vocab_size**k``; an impossible count
    simply yields a value above :func:`h_max`.
    """
    if k < 1:
        raise DomainError(f"sentence length must be >= 1, got {k}")
    if vocab_size < 1:
        raise DomainError(f"vocab_size must be >= 1, got {vocab_size}")
    if n_k < 0:
        raise DomainError(f"n_k must be >= 0, got {n_k}")
    if n_k == 0 or vocab_size == 1:
        return 0.0
    ln_vocab = math.log(vocab_size)
    k_ln_vocab = k * ln_vocab
    if k_ln_vocab <= _MAX_DIRECT_LOG:
        return k * n_k * ln_vocab / float(vocab_size ** k)
    log_term = math.log(k) + math.log(n_k) + math.log(ln_vocab) - k_ln_vocab
    return math.exp(log_term)


def brute_force_entropy(vocab_size: int, realized: Iterable[Tuple[int, ...]]) -> float:
    """Reference value of the realized entropy by explicit enumeration.

    Every one of the ``vocab_size**k`` tuples gets probability
    ``1 / vocab_size**k`` and ``-p ln p`` is summed over the tuples that
    appear in ``realized``. Only feasible for tiny alphabets.
    """
    realized = set(map(tuple, realized))
    if not realized:
        return 0.0
    lengths = {len(t) for t in realized}
    if len(lengths) != 1:
        raise DomainError("all realized tuples must have the same length")
    (k,) = lengths
    if k < 1:
        raise DomainError("realized tuples must be non-empty")
    if not 1 <= vocab_size <= _BRUTE_FORCE_MAX_VOCAB or k > _BRUTE_FORCE_MAX_LEN:
        raise DomainError(
            f"enumeration limited to vocab_size <= {_BRUTE_FORCE_MAX_VOCAB} and k <= {_BRUTE_FORCE_MAX_LEN}"
        )
    for t in realized:
        if any(not isinstance(s, int) or not 0 <= s < vocab_size for s in t):
            raise DomainError(f"tuple {t} uses a symbol outside the alphabet 0..{vocab_size - 1}")

    configurations = list(itertools.product(range(vocab_size), repeat=k))
    p = 1.0 / len(configurations)
    return math.fsum(-p * math.log(p) for c in configurations if c in realized)


def build_report(profile: CorpusProfile, norm_base: int = DEFAULT_NORM_BASE) -> EntropyReport:
    if profile.total_tokens < 1 or profile.vocab_size < 1:
        raise DomainError(f"{profile.label}: cannot compute entropy of an empty profile")
    if norm_base <= 0:
        raise DomainError(f"norm_base must be positive, got {norm_base}")

    terms = []
    cumulative = 0.0
    for k in sorted(profile.distinct_by_len):
        n_k = profile.distinct_by_len[k]
        top = h_max(k, profile.vocab_size)
        realized = h_realized(k, n_k, profile.vocab_size)
        if realized > top:
            warnings.warn(
                f"{profile.label}: {n_k} distinct sentences of length {k} exceed "
                f"{profile.vocab_size}**{k} possible configurations",
                BoundExceededWarning,
                stacklevel=2,
            )
        cumulative += realized
        terms.append(LengthTerm(k, top, realized, cumulative))

    return EntropyReport(
        label=profile.label,
        per_len=tuple(terms),
        sigma=cumulative,
        sigma_norm=norm_base * cumulative / profile.total_tokens,
        total_tokens=profile.total_tokens,
        vocab_size=profile.vocab_size,
        norm_base=norm_base,
    )
