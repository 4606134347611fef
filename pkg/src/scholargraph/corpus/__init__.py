"""Corpus ingestion: parse, audit, filter, and merge paper records."""

from .records import AttributeCoverage, ConceptMention, PaperRecord
from .ingest import (
    ParseError,
    ParseResult,
    coverage_stats,
    filter_by_field,
    match_venues,
    merge_by_title,
    normalize_title,
    parse_corpus,
    serialize_corpus,
    write_error_report,
)

__all__ = [
    "PaperRecord",
    "ConceptMention",
    "AttributeCoverage",
    "ParseError",
    "ParseResult",
    "parse_corpus",
    "serialize_corpus",
    "coverage_stats",
    "filter_by_field",
    "match_venues",
    "merge_by_title",
    "normalize_title",
    "write_error_report",
]
