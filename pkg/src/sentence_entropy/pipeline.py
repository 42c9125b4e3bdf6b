"""End-to-end composition: document -> sentences -> tokens -> profile -> report."""
from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .entropy import DEFAULT_NORM_BASE, EntropyReport, build_report
from .ingest import CorpusManifest, SampleSpec, load_document, load_lexicon
from .segmentation import Lexicon, Mode, TokenizationConfig, tokenize_text
from .stats import CorpusProfile, profile


def profile_text(label: str, text: str, config: TokenizationConfig,
                 lexicon: Optional[Lexicon] = None) -> CorpusProfile:
    result = profile(label, tokenize_text(text, config, lexicon))
    result.check_invariants()
    return result


def profile_sample(spec: SampleSpec, lexicon_cache: Optional[Dict] = None) -> CorpusProfile:
    doc = load_document(spec.path, spec.label)
    lexicon = None
    if spec.config.mode is Mode.LEXICON_SEGMENTED:
        cache = lexicon_cache if lexicon_cache is not None else {}
        if spec.lexicon_path not in cache:
            cache[spec.lexicon_path] = load_lexicon(spec.lexicon_path)
        lexicon = cache[spec.lexicon_path]
    return profile_text(spec.label, doc.content, spec.config, lexicon)


def analyze_manifest(manifest: CorpusManifest,
                     norm_base: int = DEFAULT_NORM_BASE) -> List[Tuple[CorpusProfile, EntropyReport]]:
    """Profile and score every sample, in manifest order.

    Any failure propagates before a single result is returned.
    """
    cache: Dict = {}
    results = []
    for spec in manifest.samples:
        prof = profile_sample(spec, cache)
        results.append((prof, build_report(prof, norm_base)))
    return results
