"""Paper records and corpus-level coverage statistics."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..concepts.labels import ConceptLabel


@dataclass
class ConceptMention:
    """A concept attached to a paper, with its semantic role.

    ``canonical`` and ``dbpedia_url`` are filled by entity linking; until
    then the surface form stands in.
    """

    surface: str
    role: ConceptLabel
    canonical: str | None = None
    dbpedia_url: str | None = None


@dataclass
class PaperRecord:
    """One corpus row, in the shape of a line-delimited scholarly dump.

    ``id`` must be non-empty and unique within a corpus, and ``title``
    non-empty; citation targets may dangle (they simply produce no edge at
    graph-build time).
    """

    id: str
    title: str
    abstract: str | None = None
    authors: list[str] = field(default_factory=list)
    year: int | None = None
    venue: str | None = None
    journal: str | None = None
    field_of_study: list[str] = field(default_factory=list)
    outbound_citations: list[str] = field(default_factory=list)
    url: str | None = None
    concepts: list[ConceptMention] = field(default_factory=list)

    def __post_init__(self):
        if not self.id:
            raise ValueError("paper record requires a non-empty id")
        if not self.title or not self.title.strip():
            raise ValueError(f"paper record {self.id!r} requires a non-empty title")
        for cited in self.outbound_citations:
            if not isinstance(cited, str) or not cited:
                raise ValueError(f"paper record {self.id!r} has an invalid citation id: {cited!r}")


# Attributes audited by coverage_stats; venue and journal are pooled because
# either one satisfies the "published somewhere" expectation.
COVERAGE_ATTRIBUTES = ("title", "abstract", "authors", "venue_or_journal")


@dataclass(frozen=True)
class AttributeCoverage:
    """Fraction of records carrying each key attribute."""

    total: int
    per_attribute: dict[str, float]

    def __post_init__(self):
        if self.total < 0:
            raise ValueError("total must be >= 0")
        for name, fraction in self.per_attribute.items():
            if not 0.0 <= fraction <= 1.0:
                raise ValueError(f"coverage fraction for {name} outside [0, 1]: {fraction}")
