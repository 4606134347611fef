"""Materialize paper records into the knowledge graph."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..concepts.labels import ConceptLabel
from ..corpus.records import PaperRecord
from .linking import local_normalize
from .model import DEFAULT_NAMESPACE, Entity, EntityType, KnowledgeGraph, Predicate, entity_iri

ROLE_PREDICATE: dict[ConceptLabel, Predicate] = {
    ConceptLabel.APPLICATION: Predicate.HAS_APPLICATION,
    ConceptLabel.DATA: Predicate.HAS_DATA,
    ConceptLabel.METHOD: Predicate.HAS_METHOD,
    ConceptLabel.VISUALIZATION: Predicate.HAS_VISUALIZATION,
    ConceptLabel.EVALUATION: Predicate.HAS_EVALUATION,
}

_DROPPED_CITATION_SAMPLE_CAP = 1000


@dataclass
class BuildReport:
    papers: int = 0
    dropped_citations: int = 0
    dropped_citation_samples: list[tuple[str, str]] = field(default_factory=list)
    skipped_blank_names: int = 0
    self_citations: int = 0

    def note_dropped_citation(self, source_id: str, target_id: str) -> None:
        self.dropped_citations += 1
        if len(self.dropped_citation_samples) < _DROPPED_CITATION_SAMPLE_CAP:
            self.dropped_citation_samples.append((source_id, target_id))


def _named_entity(
    graph: KnowledgeGraph, etype: EntityType, name: str, extra: dict[str, str] | None = None
) -> str | None:
    """Get-or-create an entity keyed by its normalized name.

    Extra attributes (e.g. a linker URL seen on a later mention) backfill
    an existing entity without overwriting what is already there.
    """
    key = local_normalize(name)
    if not key:
        return None
    iri = entity_iri(graph.namespace, etype, key)
    if iri not in graph:
        attributes = {"name": name.strip()}
        if extra:
            attributes.update(extra)
        graph.add_entity(Entity(iri=iri, etype=etype, attributes=attributes))
    elif extra:
        for attr, value in extra.items():
            graph.entity(iri).attributes.setdefault(attr, value)
    return iri


def build_graph(
    records: list[PaperRecord], namespace: str = DEFAULT_NAMESPACE
) -> tuple[KnowledgeGraph, BuildReport]:
    """Build the full graph from parsed (and optionally linked) records.

    One Paper entity per record; authors, journals, and conferences
    deduplicate by normalized name, concepts by canonical name (the linker
    result when present, otherwise the locally normalized surface).
    Citation edges are emitted only when the target id is in the corpus;
    dropped ones are tallied in the report.
    """
    graph = KnowledgeGraph(namespace=namespace)
    report = BuildReport()
    paper_iris: dict[str, str] = {}

    for rec in records:
        attributes = {"title": rec.title}
        if rec.year is not None:
            attributes["year"] = str(rec.year)
        if rec.url:
            attributes["url"] = rec.url
        iri = entity_iri(namespace, EntityType.PAPER, rec.id)
        graph.add_entity(Entity(iri=iri, etype=EntityType.PAPER, attributes=attributes))
        paper_iris[rec.id] = iri
        report.papers += 1

    for rec in records:
        paper = paper_iris[rec.id]
        for author in rec.authors:
            target = _named_entity(graph, EntityType.AUTHOR, author)
            if target is None:
                report.skipped_blank_names += 1
                continue
            graph.add_triple(paper, Predicate.CREATOR, target)
        if rec.journal:
            target = _named_entity(graph, EntityType.JOURNAL, rec.journal)
            if target is not None:
                graph.add_triple(paper, Predicate.APPEARS_IN_JOURNAL, target)
        if rec.venue:
            target = _named_entity(graph, EntityType.CONFERENCE, rec.venue)
            if target is not None:
                graph.add_triple(paper, Predicate.APPEARS_IN_CONFERENCE, target)
        for mention in rec.concepts:
            canonical = mention.canonical or local_normalize(mention.surface)
            if not canonical:
                report.skipped_blank_names += 1
                continue
            extra = {"dbpediaUrl": mention.dbpedia_url} if mention.dbpedia_url else None
            target = _named_entity(graph, EntityType.CONCEPT, canonical, extra)
            graph.add_triple(paper, ROLE_PREDICATE[mention.role], target)
        for cited in rec.outbound_citations:
            target_iri = paper_iris.get(cited)
            if target_iri is None:
                report.note_dropped_citation(rec.id, cited)
                continue
            if target_iri == paper:
                report.self_citations += 1
                continue
            graph.add_triple(paper, Predicate.CITES, target_iri)
    return graph, report
