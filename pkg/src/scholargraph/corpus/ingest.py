"""Parsing, auditing, filtering, and merging of line-delimited corpora.

All functions are pure over their inputs; parse errors are collected as
data rather than raised, so a single bad line never aborts an ingest run.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass, replace
from typing import IO, Iterable

from ..concepts.labels import ConceptLabel
from .records import AttributeCoverage, COVERAGE_ATTRIBUTES, ConceptMention, PaperRecord


@dataclass(frozen=True)
class ParseError:
    line: int
    message: str


@dataclass
class ParseResult:
    records: list[PaperRecord]
    errors: list[ParseError]


def _string_list(obj: dict, key: str) -> list[str]:
    value = obj.get(key) or []
    if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
        raise ValueError(f"{key} must be an array of strings")
    return list(value)


def _optional_str(obj: dict, key: str) -> str | None:
    value = obj.get(key)
    if value is None or value == "":
        return None
    if not isinstance(value, str):
        raise ValueError(f"{key} must be a string")
    return value


def _record_from_json(obj: dict) -> PaperRecord:
    if not isinstance(obj, dict):
        raise ValueError("record is not a JSON object")
    rec_id = obj.get("id")
    if not isinstance(rec_id, str) or not rec_id:
        raise ValueError("id must be a non-empty string")
    title = obj.get("title")
    if not isinstance(title, str) or not title.strip():
        raise ValueError("title must be a non-empty string")
    year = obj.get("year")
    if year is not None and (isinstance(year, bool) or not isinstance(year, int)):
        raise ValueError("year must be an integer or null")
    concepts = []
    for entry in obj.get("concepts") or []:
        concepts.append(
            ConceptMention(
                surface=entry["surface"],
                role=ConceptLabel.from_value(entry["role"]),
                canonical=entry.get("canonical"),
                dbpedia_url=entry.get("dbpedia_url"),
            )
        )
    return PaperRecord(
        id=rec_id,
        title=title,
        abstract=_optional_str(obj, "abstract"),
        authors=_string_list(obj, "authors"),
        year=year,
        venue=_optional_str(obj, "venue"),
        journal=_optional_str(obj, "journal"),
        field_of_study=_string_list(obj, "field_of_study"),
        outbound_citations=_string_list(obj, "outbound_citations"),
        url=_optional_str(obj, "url"),
        concepts=concepts,
    )


def parse_corpus(stream: Iterable[str]) -> ParseResult:
    """Parse one JSON object per line into records, order preserved.

    Malformed lines and duplicate ids become error entries (first
    occurrence of an id wins); unknown keys are ignored.
    """
    records: list[PaperRecord] = []
    errors: list[ParseError] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
            record = _record_from_json(obj)
        except (json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
            errors.append(ParseError(line=lineno, message=str(exc)))
            continue
        if record.id in seen:
            errors.append(ParseError(line=lineno, message=f"duplicate id {record.id!r}"))
            continue
        seen.add(record.id)
        records.append(record)
    return ParseResult(records=records, errors=errors)


def serialize_corpus(records: Iterable[PaperRecord], sink: IO[str]) -> int:
    """Inverse of parse_corpus for well-formed records; null fields omitted."""
    n = 0
    for rec in records:
        obj: dict = {"id": rec.id, "title": rec.title}
        if rec.abstract is not None:
            obj["abstract"] = rec.abstract
        obj["authors"] = rec.authors
        if rec.year is not None:
            obj["year"] = rec.year
        if rec.venue is not None:
            obj["venue"] = rec.venue
        if rec.journal is not None:
            obj["journal"] = rec.journal
        obj["field_of_study"] = rec.field_of_study
        obj["outbound_citations"] = rec.outbound_citations
        if rec.url is not None:
            obj["url"] = rec.url
        if rec.concepts:
            obj["concepts"] = [
                {
                    "surface": m.surface,
                    "role": m.role.value,
                    **({"canonical": m.canonical} if m.canonical else {}),
                    **({"dbpedia_url": m.dbpedia_url} if m.dbpedia_url else {}),
                }
                for m in rec.concepts
            ]
        sink.write(json.dumps(obj, ensure_ascii=False) + "\n")
        n += 1
    return n


def write_error_report(errors: Iterable[ParseError], sink: IO[str]) -> None:
    json.dump([{"line": e.line, "message": e.message} for e in errors], sink, indent=2)
    sink.write("\n")


def coverage_stats(records: list[PaperRecord]) -> AttributeCoverage:
    """Fraction of records with non-empty title, abstract, authors, venue/journal.

    An empty corpus reports total 0 with all fractions 1.0 (vacuously
    covered), keeping the fractions defined.
    """
    total = len(records)
    if total == 0:
        return AttributeCoverage(total=0, per_attribute={a: 1.0 for a in COVERAGE_ATTRIBUTES})
    counts = dict.fromkeys(COVERAGE_ATTRIBUTES, 0)
    for rec in records:
        if rec.title.strip():
            counts["title"] += 1
        if rec.abstract and rec.abstract.strip():
            counts["abstract"] += 1
        if rec.authors:
            counts["authors"] += 1
        if (rec.venue and rec.venue.strip()) or (rec.journal and rec.journal.strip()):
            counts["venue_or_journal"] += 1
    return AttributeCoverage(
        total=total, per_attribute={a: counts[a] / total for a in COVERAGE_ATTRIBUTES}
    )


def filter_by_field(records: list[PaperRecord], field_value: str) -> list[PaperRecord]:
    """Records whose field_of_study contains the value, case-insensitively."""
    if not field_value:
        raise ValueError("field_value must be non-empty")
    wanted = field_value.casefold()
    return [
        rec for rec in records if any(f.casefold() == wanted for f in rec.field_of_study)
    ]


def match_venues(
    records: list[PaperRecord], keywords: list[str]
) -> tuple[set[str], set[str]]:
    """Distinct venue and journal names containing any keyword (substring, ci)."""
    if not keywords:
        raise ValueError("keywords must be non-empty")
    lowered = [k.casefold() for k in keywords if k]
    venues: set[str] = set()
    journals: set[str] = set()
    for rec in records:
        if rec.venue and any(k in rec.venue.casefold() for k in lowered):
            venues.add(rec.venue)
        if rec.journal and any(k in rec.journal.casefold() for k in lowered):
            journals.add(rec.journal)
    return venues, journals


_PUNCT_TABLE = str.maketrans({c: " " for c in string.punctuation})


def normalize_title(title: str) -> str:
    """Lowercase, strip ASCII punctuation, collapse whitespace."""
    return " ".join(title.lower().translate(_PUNCT_TABLE).split())


def _copy_record(rec: PaperRecord) -> PaperRecord:
    return replace(
        rec,
        authors=list(rec.authors),
        field_of_study=list(rec.field_of_study),
        outbound_citations=list(rec.outbound_citations),
        concepts=list(rec.concepts),
    )


_FILL_SCALARS = ("abstract", "year", "venue", "journal", "url")
_FILL_LISTS = ("authors", "field_of_study", "outbound_citations", "concepts")


def _fill_empty(target: PaperRecord, source: PaperRecord) -> None:
    for name in _FILL_SCALARS:
        if getattr(target, name) in (None, "") and getattr(source, name) not in (None, ""):
            setattr(target, name, getattr(source, name))
    for name in _FILL_LISTS:
        if not getattr(target, name) and getattr(source, name):
            setattr(target, name, list(getattr(source, name)))


def merge_by_title(
    base: list[PaperRecord], extra: list[PaperRecord], source: str = "extra"
) -> list[PaperRecord]:
    """Merge a second corpus into the first by normalized-title equality.

    A matching extra record fills the base record's empty fields; an
    unmatched one is appended under a source-prefixed id so ids stay
    globally unique. Idempotent: merging the same extra again changes
    nothing.
    """
    merged = [_copy_record(rec) for rec in base]
    by_title: dict[str, PaperRecord] = {}
    ids = {rec.id for rec in merged}
    for rec in merged:
        by_title.setdefault(normalize_title(rec.title), rec)
    for rec in extra:
        key = normalize_title(rec.title)
        if key in by_title:
            _fill_empty(by_title[key], rec)
            continue
        appended = _copy_record(rec)
        new_id = rec.id if rec.id.startswith(f"{source}:") else f"{source}:{rec.id}"
        suffix = 1
        candidate = new_id
        while candidate in ids:
            suffix += 1
            candidate = f"{new_id}#{suffix}"
        appended.id = candidate
        ids.add(candidate)
        merged.append(appended)
        by_title[key] = appended
    return merged
