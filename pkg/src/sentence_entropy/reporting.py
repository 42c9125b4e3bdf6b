"""Tabular output of entropy reports and length distributions.

CSV and text output use 4 significant digits in compact scientific
notation (``5.018e-1``); JSON keeps full double precision. Formatting never
depends on the process locale.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Sequence

from .entropy import EntropyReport
from .errors import DistributionUnavailableError, EmptyInputError, SchemaError
from .stats import CorpusProfile

FORMATS = ("csv", "json", "text")

SUMMARY_FIELDS = ("label", "total_tokens", "vocab_size", "sigma", "sigma_norm")
PER_LEN_FIELDS = ("k", "h_max", "h_realized", "cumulative")
DISTRIBUTION_FIELDS = ("k", "count")


@dataclass(frozen=True)
class SummaryRow:
    label: str
    total_tokens: int
    vocab_size: int
    sigma: float
    sigma_norm: float

    @classmethod
    def from_report(cls, report: EntropyReport) -> "SummaryRow":
        return cls(report.label, report.total_tokens, report.vocab_size, report.sigma, report.sigma_norm)


@dataclass(frozen=True)
class LengthCount:
    k: int
    count: int


def format_sig(x: float, digits: int = 4) -> str:
    """Format ``x`` with ``digits`` significant digits, e.g. ``5.018e-1``."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    mantissa, exponent = f"{x:.{digits - 1}e}".split("e")
    return f"{mantissa}e{int(exponent)}"


def _cell(value) -> str:
    if isinstance(value, float):
        return format_sig(value)
    return str(value)


def _render(rows: Sequence[dict], fields: Sequence[str], fmt: str) -> bytes:
    if fmt == "json":
        # allow_nan=False: non-finite values must be mapped to None by the caller
        text = json.dumps(list(rows), indent=2, ensure_ascii=False, allow_nan=False) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_cell(row[f]) for f in fields])
        text = buf.getvalue()
    elif fmt == "text":
        table = [list(fields)] + [[_cell(row[f]) for f in fields] for row in rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(fields))]
        lines = []
        for r in table:
            cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
            lines.append("  ".join(cells).rstrip())
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return text.encode("utf-8")


def render_summary(reports: Sequence[EntropyReport], fmt: str = "csv") -> bytes:
    if not reports:
        raise EmptyInputError("no reports to render")
    rows = [asdict(SummaryRow.from_report(r)) for r in reports]
    return _render(rows, SUMMARY_FIELDS, fmt)


def render_per_len(report: EntropyReport, fmt: str = "csv") -> bytes:
    rows = [asdict(t) for t in report.per_len]
    return _render(rows, PER_LEN_FIELDS, fmt)


def export_length_distribution(profile: CorpusProfile) -> List[LengthCount]:
    if profile.occurrences_by_len is None:
        raise DistributionUnavailableError(
            f"{profile.label}: profile was built from counts; no length distribution available"
        )
    return [LengthCount(k, n) for k, n in sorted(profile.occurrences_by_len.items()) if n > 0]


def render_distribution(rows: Iterable[LengthCount], fmt: str = "csv") -> bytes:
    return _render([asdict(r) for r in rows], DISTRIBUTION_FIELDS, fmt)


def parse_summary_json(data) -> List[SummaryRow]:
    """Read back the JSON produced by :func:`render_summary`."""
    if isinstance(data, (bytes, str)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SchemaError("$", f"not valid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, list):
        raise SchemaError("$", "summary must be a JSON array")
    rows = []
    for i, item in enumerate(data):
        where = f"$[{i}]"
        if not isinstance(item, dict):
            raise SchemaError(where, "row must be an object")
        for name in SUMMARY_FIELDS:
            if name not in item:
                raise SchemaError(f"{where}.{name}", "missing required field")
        if not isinstance(item["label"], str):
            raise SchemaError(f"{where}.label", "expected str")
        for name in ("total_tokens", "vocab_size"):
            if isinstance(item[name], bool) or not isinstance(item[name], int):
                raise SchemaError(f"{where}.{name}", "expected int")
        for name in ("sigma", "sigma_norm"):
            if isinstance(item[name], bool) or not isinstance(item[name], (int, float)):
                raise SchemaError(f"{where}.{name}", "expected number")
        rows.append(SummaryRow(item["label"], item["total_tokens"], item["vocab_size"],
                               float(item["sigma"]), float(item["sigma_norm"])))
    return rows


COMPARE_FIELDS = (
    "label_a", "label_b",
    "sigma_a", "sigma_b", "sigma_delta", "sigma_ratio",
    "sigma_norm_a", "sigma_norm_b", "sigma_norm_delta", "sigma_norm_ratio",
)


def _ratio(b: float, a: float) -> Optional[float]:
    if a == 0:
        return 1.0 if b == 0 else None
    return b / a


def pair_rows(a: Sequence[SummaryRow], b: Sequence[SummaryRow]):
    """Match rows by label when both sides carry the same labels, else by position."""
    if not a or not b:
        raise EmptyInputError("both summaries must contain at least one row")
    labels_a = [r.label for r in a]
    labels_b = [r.label for r in b]
    if sorted(labels_a) == sorted(labels_b) and len(set(labels_a)) == len(labels_a):
        by_label = {r.label: r for r in b}
        return [(r, by_label[r.label]) for r in a]
    if len(a) != len(b):
        raise SchemaError("$", f"cannot pair {len(a)} rows with {len(b)} rows: labels differ and lengths differ")
    return list(zip(a, b))


def render_compare(a: Sequence[SummaryRow], b: Sequence[SummaryRow], fmt: str = "csv") -> bytes:
    """Side-by-side table of B relative to A: deltas are ``b - a``, ratios ``b / a``.

    A ratio with a zero denominator and non-zero numerator is undefined and
    rendered as ``null`` (JSON) or ``nan`` (CSV/text).
    """
    rows = []
    for ra, rb in pair_rows(a, b):
        rows.append({
            "label_a": ra.label,
            "label_b": rb.label,
            "sigma_a": ra.sigma,
            "sigma_b": rb.sigma,
            "sigma_delta": rb.sigma - ra.sigma,
            "sigma_ratio": _ratio(rb.sigma, ra.sigma),
            "sigma_norm_a": ra.sigma_norm,
            "sigma_norm_b": rb.sigma_norm,
            "sigma_norm_delta": rb.sigma_norm - ra.sigma_norm,
            "sigma_norm_ratio": _ratio(rb.sigma_norm, ra.sigma_norm),
        })
    if fmt != "json":
        rows = [{k: (math.nan if v is None else v) for k, v in r.items()} for r in rows]
    return _render(rows, COMPARE_FIELDS, fmt)
