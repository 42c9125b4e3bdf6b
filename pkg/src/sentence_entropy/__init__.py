"""Sentence-configuration entropy of text corpora."""

__version__ = "0.1.0"

from .entropy import (
    DEFAULT_NORM_BASE,
    BoundExceededWarning,
    EntropyReport,
    LengthTerm,
    brute_force_entropy,
    build_report,
    h_max,
    h_realized,
)
from .errors import (
    DistributionUnavailableError,
    DomainError,
    EmptyInputError,
    EmptyLexiconError,
    EmptySentenceError,
    EncodingError,
    InvariantViolation,
    IoError,
    SchemaError,
    SentenceEntropyError,
    ValidationError,
)
from .ingest import CorpusManifest, DocumentText, SampleSpec, load_counts, load_document, load_lexicon, load_manifest
from .segmentation import (
    Lexicon,
    Mode,
    TokenizationConfig,
    build_lexicon,
    segment_max_match,
    split_sentences,
    tokenize_han,
    tokenize_latin,
    tokenize_text,
)
from .stats import CorpusProfile, profile, profile_from_counts
