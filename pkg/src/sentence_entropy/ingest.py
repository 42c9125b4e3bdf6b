"""Loading documents, lexicon files and run manifests.

All text input is UTF-8. Documents come back NFC-normalized with LF line
breaks and no leading byte-order mark.
"""
from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union

from .errors import EncodingError, IoError, SchemaError, ValidationError
from .segmentation import Lexicon, Mode, TokenizationConfig, build_lexicon
from .stats import CorpusProfile, profile_from_counts

PathLike = Union[str, Path]

_BOM = "\ufeff"


@dataclass(frozen=True)
class DocumentText:
    label: str
    content: str
    source_path: Path


@dataclass(frozen=True)
class SampleSpec:
    label: str
    path: Path
    config: TokenizationConfig
    lexicon_path: Optional[Path] = None


@dataclass(frozen=True)
class CorpusManifest:
    samples: Tuple[SampleSpec, ...]

    def labels(self):
        return [s.label for s in self.samples]

    def get(self, label: str) -> SampleSpec:
        for s in self.samples:
            if s.label == label:
                return s
        raise KeyError(label)


def _read_bytes(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise IoError(f"{path}: {exc.strerror or exc}") from exc


def read_utf8(path: PathLike) -> str:
    """Read ``path`` as strict UTF-8, dropping a leading BOM."""
    path = Path(path)
    raw = _read_bytes(path)
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(path, exc.start, exc.reason) from exc
    if text.startswith(_BOM):
        text = text[1:]
    return text


def normalize_text(text: str) -> str:
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    return unicodedata.normalize("NFC", text)


def load_document(path: PathLike, label: str) -> DocumentText:
    path = Path(path)
    return DocumentText(label=label, content=normalize_text(read_utf8(path)), source_path=path)


def load_lexicon(path: PathLike) -> Lexicon:
    """Read a lexicon file: one word per line, ``#`` comments and blank lines ignored."""
    words = []
    for line in normalize_text(read_utf8(path)).split("\n"):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.append(line)
    return build_lexicon(words)


def _require(obj, key, kind, where):
    if key not in obj:
        raise SchemaError(f"{where}.{key}", "missing required field")
    value = obj[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{where}.{key}", f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def parse_manifest(data, base_dir: PathLike = ".") -> CorpusManifest:
    """Validate a decoded manifest object. Relative paths resolve against ``base_dir``."""
    base_dir = Path(base_dir)
    if not isinstance(data, dict):
        raise SchemaError("$", "manifest must be a JSON object")
    samples = _require(data, "samples", list, "$")

    specs = []
    seen = set()
    for i, entry in enumerate(samples):
        where = f"$.samples[{i}]"
        if not isinstance(entry, dict):
            raise SchemaError(where, "sample entry must be an object")
        unknown = set(entry) - {"label", "path", "mode", "lexicon_path"}
        if unknown:
            raise SchemaError(f"{where}.{sorted(unknown)[0]}", "unknown field")
        label = _require(entry, "label", str, where)
        path = _require(entry, "path", str, where)
        mode_name = _require(entry, "mode", str, where)
        try:
            mode = Mode(mode_name)
        except ValueError:
            choices = ", ".join(m.value for m in Mode)
            raise SchemaError(f"{where}.mode", f"unknown mode {mode_name!r} (expected one of {choices})")
        lexicon_path = None
        if "lexicon_path" in entry:
            lexicon_path = _require(entry, "lexicon_path", str, where)

        if not label:
            raise ValidationError(f"{where}.label", "label must be non-empty")
        if label in seen:
            raise ValidationError(f"{where}.label", f"duplicate label {label!r}")
        seen.add(label)
        if mode is Mode.LEXICON_SEGMENTED and lexicon_path is None:
            raise ValidationError(f"{where}.lexicon_path", "required for lexicon-segmented mode")
        if mode is not Mode.LEXICON_SEGMENTED and lexicon_path is not None:
            raise ValidationError(f"{where}.lexicon_path", f"only allowed for lexicon-segmented mode, not {mode.value}")

        specs.append(SampleSpec(
            label=label,
            path=base_dir / path,
            config=TokenizationConfig(mode=mode),
            lexicon_path=base_dir / lexicon_path if lexicon_path is not None else None,
        ))
    return CorpusManifest(tuple(specs))


def load_manifest(path: PathLike) -> CorpusManifest:
    path = Path(path)
    return parse_manifest(_load_json(path), base_dir=path.parent)


def _load_json(path: Path):
    try:
        return json.loads(read_utf8(path))
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc


def parse_counts(data) -> CorpusProfile:
    """Validate a decoded counts object and build a counts-only profile."""
    if not isinstance(data, dict):
        raise SchemaError("$", "counts file must be a JSON object")
    label = _require(data, "label", str, "$")
    total = _require(data, "total_tokens", int, "$")
    vocab = _require(data, "vocab_size", int, "$")
    distinct = _require(data, "distinct_by_len", dict, "$")
    for key in ("total_tokens", "vocab_size"):
        if isinstance(data[key], bool):
            raise SchemaError(f"$.{key}", "expected int, got bool")
    for key, value in distinct.items():
        if isinstance(value, bool) or not isinstance(value, int):
            raise SchemaError(f"$.distinct_by_len.{key}", f"expected int, got {type(value).__name__}")
    return profile_from_counts(label, total, vocab, distinct)


def load_counts(path: PathLike) -> CorpusProfile:
    return parse_counts(_load_json(Path(path)))
