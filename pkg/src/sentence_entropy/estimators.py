"""scikit-learn compatible wrappers.

:class:`SentenceTokenizer` turns raw documents into tokenized sentences and
:class:`ConfigurationEntropy` scores each tokenized document, so the two
chain in a :class:`sklearn.pipeline.Pipeline`::

    pipe = make_pipeline(SentenceTokenizer(mode="latin-word"), ConfigurationEntropy())
    pipe.fit_transform(["One. Two words.", "..."])   # -> (n_docs, 2) [sigma, sigma_norm]

Each document is treated as a separate sample; nothing is learned across
documents.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .entropy import DEFAULT_NORM_BASE, build_report
from .errors import EmptyLexiconError
from .segmentation import DEFAULT_TERMINATORS, Lexicon, Mode, TokenizationConfig, build_lexicon, tokenize_text
from .stats import profile


def check_documents(X):
    """Validate a collection of raw text documents and return it as a list."""
    if isinstance(X, str):
        raise TypeError("expected an iterable of documents, got a single string")
    docs = list(X)
    for i, doc in enumerate(docs):
        if not isinstance(doc, str):
            raise TypeError(f"document {i} is {type(doc).__name__}, expected str")
    return docs


def check_tokenized(X):
    """Validate a collection of tokenized documents (lists of token lists)."""
    if isinstance(X, str):
        raise TypeError("expected tokenized documents, got a string")
    docs = []
    for i, doc in enumerate(X):
        if isinstance(doc, str):
            raise TypeError(f"document {i} is a raw string; tokenize it first")
        sentences = []
        for j, sentence in enumerate(doc):
            if isinstance(sentence, str):
                raise TypeError(f"document {i}, sentence {j} is a string, expected a token list")
            if any(not isinstance(t, str) for t in sentence):
                raise TypeError(f"document {i}, sentence {j} contains non-string tokens")
            sentences.append(list(sentence))
        docs.append(sentences)
    return docs


class SentenceTokenizer(TransformerMixin, BaseEstimator):
    """Split documents into sentences of tokens.

    Parameters
    ----------
    mode : {"han-character", "latin-word", "lexicon-segmented"}
    terminators : str or None
        Sentence-final characters; ``None`` uses ``.!?。！？``.
    lowercase_fold : bool
        Lowercase tokens in ``latin-word`` mode.
    lexicon : iterable of str or Lexicon, optional
        Word list for ``lexicon-segmented`` mode.
    """

    def __init__(self, mode="han-character", terminators=None, lowercase_fold=True, lexicon=None):
        self.mode = mode
        self.terminators = terminators
        self.lowercase_fold = lowercase_fold
        self.lexicon = lexicon

    def fit(self, X=None, y=None):
        terminators = DEFAULT_TERMINATORS if self.terminators is None else frozenset(self.terminators)
        self.config_ = TokenizationConfig(Mode(self.mode), terminators, bool(self.lowercase_fold))
        self.lexicon_ = None
        if self.config_.mode is Mode.LEXICON_SEGMENTED:
            if self.lexicon is None:
                raise EmptyLexiconError("lexicon-segmented mode requires a lexicon")
            lex = self.lexicon if isinstance(self.lexicon, Lexicon) else build_lexicon(self.lexicon)
            if not lex.words:
                raise EmptyLexiconError("lexicon has no usable words")
            self.lexicon_ = lex
        return self

    def transform(self, X):
        check_is_fitted(self, "config_")
        return [tokenize_text(doc, self.config_, self.lexicon_) for doc in check_documents(X)]


class ConfigurationEntropy(TransformerMixin, BaseEstimator):
    """Total and length-normalized sentence-configuration entropy per document.

    ``transform`` returns an array of shape ``(n_documents, 2)`` holding
    ``sigma`` and ``sigma_norm`` (nats, and nats per ``norm_base`` tokens).
    The full per-document reports from the last ``fit`` are kept in
    ``reports_``.
    """

    def __init__(self, norm_base=DEFAULT_NORM_BASE):
        self.norm_base = norm_base

    def _score(self, X):
        docs = check_tokenized(X)
        return [build_report(profile(str(i), doc), self.norm_base) for i, doc in enumerate(docs)]

    def fit(self, X, y=None):
        if not isinstance(self.norm_base, (int, np.integer)) or self.norm_base <= 0:
            raise ValueError(f"norm_base must be a positive integer, got {self.norm_base!r}")
        self.reports_ = self._score(X)
        self.n_features_out_ = 2
        return self

    def transform(self, X):
        check_is_fitted(self, "reports_")
        reports = self._score(X)
        return np.array([[r.sigma, r.sigma_norm] for r in reports], dtype=float).reshape(-1, 2)

    def get_feature_names_out(self, input_features=None):
        return np.array(["sigma", "sigma_norm"], dtype=object)
