"""Command-line interface.

    sentence-entropy analyze --manifest runs.json [--format csv|json|text] [--norm-base N] [--per-len]
    sentence-entropy from-counts counts/*.json [--format ...] [--norm-base N]
    sentence-entropy distribution --manifest runs.json --label L
    sentence-entropy compare a.json b.json

Data goes to stdout, diagnostics to stderr. Exit status is 0 on success,
1 on bad input and 2 when an internal consistency check fails.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .entropy import DEFAULT_NORM_BASE, build_report
from .errors import InvariantViolation, SentenceEntropyError
from .ingest import load_counts, load_manifest, read_utf8
from .pipeline import analyze_manifest, profile_sample
from .reporting import (
    FORMATS,
    export_length_distribution,
    parse_summary_json,
    render_compare,
    render_distribution,
    render_per_len,
    render_summary,
)

logger = logging.getLogger("sentence_entropy")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2

_EXTENSIONS = {"csv": "csv", "json": "json", "text": "txt"}


def _positive_int(value: str) -> int:
    n = int(value)
    if n <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return n


def _write(data: bytes) -> None:
    out = getattr(sys.stdout, "buffer", None)
    if out is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        out.write(data)
        out.flush()


def cmd_analyze(args) -> int:
    manifest = load_manifest(args.manifest)
    results = analyze_manifest(manifest, args.norm_base)
    reports = [report for _, report in results]
    summary = render_summary(reports, args.format)
    if args.per_len:
        out_dir = Path(args.per_len_dir) if args.per_len_dir else Path(args.manifest).parent
        out_dir.mkdir(parents=True, exist_ok=True)
        for report in reports:
            target = out_dir / f"{report.label}.per_len.{_EXTENSIONS[args.format]}"
            target.write_bytes(render_per_len(report, args.format))
            logger.info("wrote %s", target)
    _write(summary)
    return EXIT_OK


def cmd_from_counts(args) -> int:
    profiles = [load_counts(p) for p in args.counts]
    reports = [build_report(p, args.norm_base) for p in profiles]
    _write(render_summary(reports, args.format))
    return EXIT_OK


def cmd_distribution(args) -> int:
    manifest = load_manifest(args.manifest)
    try:
        spec = manifest.get(args.label)
    except KeyError:
        known = ", ".join(manifest.labels()) or "none"
        raise SentenceEntropyError(f"unknown label {args.label!r} (manifest has: {known})") from None
    prof = profile_sample(spec)
    _write(render_distribution(export_length_distribution(prof), args.format))
    return EXIT_OK


def cmd_compare(args) -> int:
    a = parse_summary_json(read_utf8(args.a))
    b = parse_summary_json(read_utf8(args.b))
    _write(render_compare(a, b, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sentence-entropy",
        description="Sentence-configuration entropy of text corpora.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="csv"):
        p.add_argument("--format", choices=FORMATS, default=default)

    def add_norm_base(p):
        p.add_argument("--norm-base", type=_positive_int, default=DEFAULT_NORM_BASE,
                       help="token count to normalize sigma to (default: %(default)s)")

    p = sub.add_parser("analyze", help="analyze raw texts listed in a manifest")
    p.add_argument("--manifest", required=True)
    add_format(p)
    add_norm_base(p)
    p.add_argument("--per-len", action="store_true",
                   help="also write one per-length table per sample")
    p.add_argument("--per-len-dir", default=None,
                   help="directory for per-length tables (default: next to the manifest)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("from-counts", help="compute entropy from published count files")
    p.add_argument("counts", nargs="+")
    add_format(p)
    add_norm_base(p)
    p.set_defaults(func=cmd_from_counts)

    p = sub.add_parser("distribution", help="sentence length distribution of one sample")
    p.add_argument("--manifest", required=True)
    p.add_argument("--label", required=True)
    add_format(p)
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("compare", help="compare two JSON summaries (B relative to A)")
    p.add_argument("a")
    p.add_argument("b")
    add_format(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; that code is reserved here.
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except SentenceEntropyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
